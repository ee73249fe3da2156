"""Combinatorial models of the finite (and infinite dihedral) named types.

These give fast, exact multiplication independent of any word rewriting:
permutations for type A, signed permutations for B/C, even-signed
permutations for D, and an explicit rotation/reflection model for
dihedral groups.  Used both as fast ball backends and as independent
cross-check oracles for the word-rewriting engine.
"""
from __future__ import annotations

import re

from .matrices import CoxeterMatrix, INF


class PermutationModel:
    """Type A_n as the symmetric group S_{n+1} in one-line notation
    (0-based tuples); generator j swaps positions j, j+1."""

    def __init__(self, rank: int):
        self.rank = rank
        self.n = rank + 1
        self.identity = tuple(range(self.n))
        self.gens = []
        for j in range(rank):
            g = list(range(self.n))
            g[j], g[j + 1] = g[j + 1], g[j]
            self.gens.append(tuple(g))
        self.order = 1
        for i in range(2, self.n + 1):
            self.order *= i

    def mult(self, u, v):
        return tuple(u[i] for i in v)

    def inv(self, u):
        out = [0] * self.n
        for i, x in enumerate(u):
            out[x] = i
        return tuple(out)


class SignedPermutationModel:
    """Type B_n as signed permutations: tuples of the images of 1..n in
    {±1..±n}; generator 0 negates 1, generator j >= 1 swaps j, j+1."""

    def __init__(self, rank: int):
        self.rank = rank
        self.n = rank
        self.identity = tuple(range(1, self.n + 1))
        gens = []
        g0 = list(self.identity)
        g0[0] = -1
        gens.append(tuple(g0))
        for j in range(1, rank):
            g = list(self.identity)
            g[j - 1], g[j] = g[j], g[j - 1]
            gens.append(tuple(g))
        self.gens = gens
        self.order = 2 ** self.n
        for i in range(2, self.n + 1):
            self.order *= i

    def _apply(self, u, i):
        # image of the signed letter i under u
        return u[i - 1] if i > 0 else -u[-i - 1]

    def mult(self, u, v):
        return tuple(self._apply(u, v[i]) for i in range(self.n))

    def inv(self, u):
        out = [0] * self.n
        for i, x in enumerate(u):
            if x > 0:
                out[x - 1] = i + 1
            else:
                out[-x - 1] = -(i + 1)
        return tuple(out)


class EvenSignedPermutationModel(SignedPermutationModel):
    """Type D_n: signed permutations with an even number of sign changes.
    Generator 0 maps 1 -> -2, 2 -> -1; generator j >= 1 swaps j, j+1."""

    def __init__(self, rank: int):
        super().__init__(rank)
        g0 = list(self.identity)
        g0[0], g0[1] = -2, -1
        self.gens[0] = tuple(g0)
        self.order //= 2


class DihedralModel:
    """I2(m) (m = 0 for the infinite dihedral group): elements (a, f)
    meaning rotation^a * reflection^f; generator 0 is the reflection
    (0, 1), generator 1 is (1, 1)."""

    def __init__(self, m: int):
        self.m = m  # 0 = infinity
        self.rank = 2
        self.identity = (0, 0)
        self.gens = [(0, 1), (1, 1)]
        self.order = None if m == 0 else 2 * m

    def _norm(self, a):
        return a % self.m if self.m else a

    def mult(self, u, v):
        a, f = u
        b, g = v
        return (self._norm(a + (-b if f else b)), f ^ g)

    def inv(self, u):
        a, f = u
        return u if f else (self._norm(-a), 0)


def model_for(matrix: CoxeterMatrix):
    """A combinatorial model for the matrix's named type, or None."""
    name = matrix.name
    if name is None:
        return None
    m = re.fullmatch(r"I2\((\d+|inf)\)", name)
    if m:
        return DihedralModel(0 if m.group(1) == "inf" else int(m.group(1)))
    m = re.fullmatch(r"([ABCD])(\d+)", name)
    if not m:
        return None
    letter, n = m.group(1), int(m.group(2))
    if letter == "A":
        return PermutationModel(n)
    if letter in ("B", "C"):
        return SignedPermutationModel(n)
    if letter == "D":
        return EvenSignedPermutationModel(n)
    return None
