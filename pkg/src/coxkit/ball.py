"""Length-bounded balls of Coxeter groups.

A GroupBall holds every element of length <= radius, with ShortLex
normal forms, left/right Cayley tables (boundary marker -1), descent
sets and inverses.  Two construction engines exist: exact word
rewriting (works for every Coxeter matrix) and the combinatorial models
of the named types; both produce identical balls, which the test suite
checks pairwise.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import models
from .errors import OutOfBallError, ResourceError
from .matrices import CoxeterMatrix
from .wordcore import WordKernel

BOUNDARY = -1


@dataclass(frozen=True)
class Element:
    id: int
    word: bytes  # ShortLex-least reduced word
    length: int

    @property
    def letters(self) -> tuple[int, ...]:
        return tuple(self.word)


class GroupBall:
    def __init__(self, matrix: CoxeterMatrix, radius: int, elements, right, left,
                 inv, is_complete_group: bool, engine):
        self.matrix = matrix
        self.radius = radius
        self.elements: list[Element] = elements
        self.right = right  # right[w][s] = id of w*s, or BOUNDARY
        self.left = left    # left[w][s]  = id of s*w, or BOUNDARY
        self.inv = inv
        self.is_complete_group = is_complete_group
        self._engine = engine
        self.index = {e.word: e.id for e in elements}
        self._bruhat_memo: dict[tuple[int, int], bool] = {}

    # -- basic accessors ------------------------------------------------

    def __len__(self):
        return len(self.elements)

    @property
    def identity(self) -> int:
        return 0

    def length(self, w: int) -> int:
        return self.elements[w].length

    def word(self, w: int) -> bytes:
        return self.elements[w].word

    def id_of_word(self, letters) -> int:
        """Element id of an arbitrary word, if inside the ball."""
        nf = self._engine.nf_of_word(bytes(letters))
        if nf is None or nf not in self.index:
            raise OutOfBallError(f"word {list(letters)} has length > radius {self.radius}")
        return self.index[nf]

    def left_descents(self, w: int) -> frozenset[int]:
        lw = self.left[w]
        n = self.elements[w].length
        return frozenset(s for s in self.matrix.generators
                         if lw[s] != BOUNDARY and self.elements[lw[s]].length < n)

    def right_descents(self, w: int) -> frozenset[int]:
        rw = self.right[w]
        n = self.elements[w].length
        return frozenset(s for s in self.matrix.generators
                         if rw[s] != BOUNDARY and self.elements[rw[s]].length < n)

    def rank_sizes(self) -> list[int]:
        sizes = [0] * (self.radius + 1)
        for e in self.elements:
            sizes[e.length] += 1
        while sizes and sizes[-1] == 0:
            sizes.pop()
        return sizes

    # -- group operations -------------------------------------------------

    def multiply(self, u: int, v: int) -> int:
        """The element u*v, or OutOfBallError if its length exceeds the
        radius."""
        x = v
        for letter in reversed(self.elements[u].word):
            x = self.left[x][letter]
            if x == BOUNDARY:
                return self._engine.multiply_fallback(self, u, v)
        return x

    def inverse(self, w: int) -> int:
        return self.inv[w]

    def bruhat_leq(self, u: int, v: int) -> bool:
        """Bruhat order, via the descent recursion u <= v iff
        (su <= sv if s in D_L(u) else u <= sv) for s in D_L(v)."""
        if u == v:
            return True
        lu, lv = self.elements[u].length, self.elements[v].length
        if lu >= lv:
            return False
        memo = self._bruhat_memo
        key = (u, v)
        hit = memo.get(key)
        if hit is not None:
            return hit
        s = min(self.left_descents(v))
        sv = self.left[v][s]
        su = self.left[u][s]
        if self.elements[su].length < lu:
            res = self.bruhat_leq(su, sv)
        else:
            res = self.bruhat_leq(u, sv)
        memo[key] = res
        return res

    def coxeter_elements(self) -> list[int]:
        """Distinct products of all generators, each used once."""
        from itertools import permutations
        out = set()
        for order in permutations(self.matrix.generators):
            x = self.identity
            ok = True
            for s in reversed(order):
                x = self.left[x][s]
                if x == BOUNDARY:
                    ok = False
                    break
            if ok:
                out.add(x)
        return sorted(out)


# -- engines --------------------------------------------------------------


class _TitsEngine:
    """Word-rewriting backend (exact for every Coxeter matrix)."""

    name = "tits"

    def __init__(self, matrix: CoxeterMatrix, budget: int):
        self.kernel = WordKernel(matrix.entries, budget)

    def nf_of_word(self, word: bytes):
        return self.kernel.shortlex(word)

    def multiply_fallback(self, ball: GroupBall, u: int, v: int) -> int:
        nf = self.kernel.shortlex(ball.elements[u].word + ball.elements[v].word)
        wid = ball.index.get(nf)
        if wid is None:
            raise OutOfBallError(
                f"product has length {len(nf)} > radius {ball.radius}; enlarge the ball")
        return wid

    def build(self, matrix: CoxeterMatrix, radius: int, cap: int) -> GroupBall:
        rank = matrix.rank
        kernel = self.kernel
        elements = [Element(0, b"", 0)]
        index = {b"": 0}
        right = [[None] * rank]
        level = [0]
        complete = True
        for length in range(radius + 1):
            next_level = []
            for w in level:
                word = elements[w].word
                for s in range(rank):
                    if right[w][s] is not None:
                        continue
                    if length == radius:
                        right[w][s] = BOUNDARY
                        complete = False
                        continue
                    nf = kernel.shortlex_of_reduced(word + bytes([s]))
                    x = index.get(nf)
                    if x is None:
                        x = len(elements)
                        if x >= cap:
                            raise ResourceError(
                                f"element cap {cap} exceeded at length {length + 1} "
                                f"(partial size {x})")
                        elements.append(Element(x, nf, length + 1))
                        index[nf] = x
                        right.append([None] * rank)
                        next_level.append(x)
                    right[w][s] = x
                    right[x][s] = w
            level = next_level
            if not level:
                break
        inv = [index[kernel.shortlex_of_reduced(bytes(reversed(e.word)))] for e in elements]
        left = _left_from_right(right, inv, rank)
        return GroupBall(matrix, radius, elements, right, left, inv, complete, self)


class _ModelEngine:
    """Backend running on a combinatorial model of a named type."""

    name = "model"

    def __init__(self, matrix: CoxeterMatrix, model):
        self.model = model
        self.to_model: list = []
        self.from_model: dict = {}
        self._nf_kernel = None
        self.matrix = matrix

    def nf_of_word(self, word: bytes):
        m = self.model
        x = m.identity
        for letter in word:
            x = m.mult(x, m.gens[letter])
        wid = self.from_model.get(x)
        return None if wid is None else self._ball.elements[wid].word

    def multiply_fallback(self, ball: GroupBall, u: int, v: int) -> int:
        m = self.model
        z = m.mult(self.to_model[u], self.to_model[v])
        wid = self.from_model.get(z)
        if wid is None:
            raise OutOfBallError(
                f"product of elements {u}, {v} has length > radius {ball.radius}; "
                "enlarge the ball")
        return wid

    def build(self, matrix: CoxeterMatrix, radius: int, cap: int) -> GroupBall:
        rank = matrix.rank
        m = self.model
        self.to_model = [m.identity]
        self.from_model = {m.identity: 0}
        lengths = [0]
        right = [[None] * rank]
        level = [0]
        complete = True
        for length in range(radius + 1):
            next_level = []
            for w in level:
                xw = self.to_model[w]
                for s in range(rank):
                    if right[w][s] is not None:
                        continue
                    if length == radius:
                        right[w][s] = BOUNDARY
                        complete = False
                        continue
                    z = m.mult(xw, m.gens[s])
                    x = self.from_model.get(z)
                    if x is None:
                        x = len(self.to_model)
                        if x >= cap:
                            raise ResourceError(
                                f"element cap {cap} exceeded at length {length + 1} "
                                f"(partial size {x})")
                        self.to_model.append(z)
                        self.from_model[z] = x
                        lengths.append(length + 1)
                        right.append([None] * rank)
                        next_level.append(x)
                    right[w][s] = x
                    right[x][s] = w
            level = next_level
            if not level:
                break
        inv = [self.from_model[m.inv(x)] for x in self.to_model]
        left = _left_from_right(right, inv, rank)
        # ShortLex normal form: smallest left descent first, recursively.
        n = len(self.to_model)
        words: list[bytes | None] = [None] * n
        words[0] = b""
        for w in range(1, n):  # ids are sorted by length
            s = min(s for s in range(rank)
                    if left[w][s] != BOUNDARY and lengths[left[w][s]] < lengths[w])
            words[w] = bytes([s]) + words[left[w][s]]
        elements = [Element(i, words[i], lengths[i]) for i in range(n)]
        ball = GroupBall(matrix, radius, elements, right, left, inv, complete, self)
        self._ball = ball
        return ball


def _left_from_right(right, inv, rank):
    left = []
    for w in range(len(right)):
        iw = inv[w]
        row = []
        for s in range(rank):
            t = right[iw][s]
            row.append(BOUNDARY if t == BOUNDARY else inv[t])
        left.append(row)
    return left


def enumerate_ball(matrix: CoxeterMatrix, radius: int, backend: str = "auto",
                   cap: int = 2_000_000, budget: int = 100_000) -> GroupBall:
    """All elements of length <= radius, as a GroupBall.

    backend: "auto" picks the combinatorial model for named types that
    have one, the word-rewriting engine otherwise; "tits" and "model"
    force a choice.
    """
    if radius < 0:
        raise ValueError("radius must be >= 0")
    model = models.model_for(matrix) if backend in ("auto", "model") else None
    if backend == "model" and model is None:
        raise ValueError(f"no combinatorial model for matrix {matrix.name or matrix}")
    if model is not None:
        engine = _ModelEngine(matrix, model)
    else:
        engine = _TitsEngine(matrix, budget)
    return engine.build(matrix, radius, cap)


# -- module-level word operations ------------------------------------------


@lru_cache(maxsize=64)
def _kernel_for(entries, budget):
    return WordKernel(entries, budget)


def reduce_word(matrix: CoxeterMatrix, letters, budget: int = 100_000) -> tuple[int, ...]:
    """Some reduced word for the element represented by `letters`."""
    _check_letters(matrix, letters)
    return tuple(_kernel_for(matrix.entries, budget).reduce(bytes(letters)))


def normal_form(matrix: CoxeterMatrix, letters, budget: int = 100_000) -> tuple[int, ...]:
    """ShortLex-least reduced word of the element of `letters`."""
    _check_letters(matrix, letters)
    return tuple(_kernel_for(matrix.entries, budget).shortlex(bytes(letters)))


def is_reduced(matrix: CoxeterMatrix, letters, budget: int = 100_000) -> bool:
    _check_letters(matrix, letters)
    return _kernel_for(matrix.entries, budget).is_reduced(bytes(letters))


def _check_letters(matrix, letters):
    for x in letters:
        if not 0 <= x < matrix.rank:
            raise ValueError(f"letter {x} out of range for rank {matrix.rank}")
