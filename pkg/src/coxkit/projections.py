"""Parabolic factorizations and projection maps on a ball.

Every element factors uniquely as w = w^J w_J with w_J in the standard
parabolic subgroup W_J and w^J free of right descents in J (lengths
adding), and mirror-image on the left.  The projections P^J (right
version) and Q^J (left version) send w to the minimal-length coset
representative; both are computed by greedy descent stripping, which
never increases length and therefore never leaves the ball.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .ball import GroupBall
from .errors import DomainError, ResourceError
from .posets import Poset

__all__ = [
    "ParabolicDecomposition", "SelfMapTable", "parabolic_decompose",
    "project_PJ", "project_QJ", "projection_map", "is_order_preserving",
    "OrderPreservationReport", "phi_k_image_poset", "projection_monoid",
    "MonoidReport",
]


@dataclass
class ParabolicDecomposition:
    w: int
    J: frozenset[int]
    side: str            # "right" or "left"
    coset_rep: int       # w^J (right) or ^Jw (left)
    parabolic_part: int  # w_J (right) or w'_J (left)


@dataclass
class SelfMapTable:
    descriptor: str
    images: tuple[int, ...]

    def __call__(self, w: int) -> int:
        return self.images[w]

    def compose(self, other: "SelfMapTable") -> "SelfMapTable":
        """self after other: w -> self(other(w))."""
        return SelfMapTable(
            descriptor=f"{self.descriptor}*{other.descriptor}",
            images=tuple(self.images[x] for x in other.images))


def parabolic_decompose(ball: GroupBall, w: int, J, side: str = "right") -> ParabolicDecomposition:
    J = frozenset(J)
    for s in J:
        if s not in ball.matrix.generators:
            raise DomainError(f"generator {s} not in the system")
    if side not in ("right", "left"):
        raise DomainError("side must be 'right' or 'left'")
    x = w
    u = ball.identity
    if side == "right":
        while True:
            ds = ball.right_descents(x) & J
            if not ds:
                break
            s = min(ds)
            x = ball.right[x][s]
            u = ball.multiply(ball.right[ball.identity][s], u)
    else:
        while True:
            ds = ball.left_descents(x) & J
            if not ds:
                break
            s = min(ds)
            x = ball.left[x][s]
            u = ball.multiply(u, ball.right[ball.identity][s])
    return ParabolicDecomposition(w=w, J=J, side=side, coset_rep=x, parabolic_part=u)


def project_PJ(ball: GroupBall, w: int, J) -> int:
    """Minimal-length representative of the right coset w W_J."""
    return parabolic_decompose(ball, w, J, "right").coset_rep


def project_QJ(ball: GroupBall, w: int, J) -> int:
    """Minimal-length representative of the left coset W_J w."""
    return parabolic_decompose(ball, w, J, "left").coset_rep


def projection_map(ball: GroupBall, J, kind: str = "P") -> SelfMapTable:
    J = frozenset(J)
    if kind == "P":
        images = tuple(project_PJ(ball, w, J) for w in range(len(ball)))
    elif kind == "Q":
        images = tuple(project_QJ(ball, w, J) for w in range(len(ball)))
    else:
        raise DomainError("kind must be 'P' or 'Q'")
    label = ",".join(str(s) for s in sorted(J))
    return SelfMapTable(descriptor=f"{kind}^{{{label}}}", images=images)


@dataclass
class OrderPreservationReport:
    ok: bool
    violations: list = field(default_factory=list)  # (u, v) covers broken


def is_order_preserving(table: SelfMapTable, poset: Poset) -> OrderPreservationReport:
    """Check f(u) <= f(v) over all cover edges (enough, by transitivity).

    Poset nodes must be the ball ids the map is defined on.
    """
    bad = []
    for i, j in poset.covers:
        fu = table(poset.nodes[i])
        fv = table(poset.nodes[j])
        if not poset.leq(poset.index(fu), poset.index(fv)):
            bad.append((poset.nodes[i], poset.nodes[j]))
    return OrderPreservationReport(ok=not bad, violations=bad)


def phi_k_image_poset(ball: GroupBall, order_poset: Poset) -> Poset:
    """Image of w -> (P^{S-{s}}(w))_{s in S} with the componentwise
    order, each component compared inside the given order on the ball.

    order_poset must have the ball ids 0..n-1 as nodes.
    """
    if not ball.is_complete_group:
        raise DomainError("image poset needs the complete finite group")
    gens = list(ball.matrix.generators)
    maps = [projection_map(ball, [s for s in gens if s != i], "P") for i in gens]
    tuples = sorted({tuple(m(w) for m in maps) for w in range(len(ball))})
    pos = {t: i for i, t in enumerate(tuples)}
    pairs = []
    for a in tuples:
        for b in tuples:
            if a != b and all(order_poset.leq(order_poset.index(x),
                                              order_poset.index(y))
                              for x, y in zip(a, b)):
                pairs.append((pos[a], pos[b]))
    return Poset.from_relation(tuples, pairs,
                               metadata={"kind": "projection-image-poset"})


@dataclass
class MonoidReport:
    size: int
    idempotent: bool
    braid_ok: bool
    order_preserving: bool | None
    elements: list = field(default_factory=list)  # SelfMapTable list


def projection_monoid(ball: GroupBall, generators: list[SelfMapTable],
                      poset: Poset | None = None,
                      cap: int = 1_000_000) -> MonoidReport:
    """Closure of the generator maps under composition, as function
    tables, with the generator sanity checks.

    braid_ok: for every pair of single-generator projections, the
    m(s,t)-fold alternating compositions on both sides agree.
    order_preserving: every generated map preserves the given order
    (None when no poset is supplied).
    """
    if not ball.is_complete_group:
        raise DomainError("monoid closure needs the complete finite group")
    ident = SelfMapTable("id", tuple(range(len(ball))))
    seen = {ident.images: ident}
    work = [ident]
    while work:
        f = work.pop()
        for g in generators:
            h = g.compose(f)
            if h.images not in seen:
                if len(seen) >= cap:
                    raise ResourceError(f"monoid closure cap {cap} exceeded")
                seen[h.images] = h
                work.append(h)
    elements = list(seen.values())
    idem = all(g.compose(g).images == g.images for g in generators)
    braid_ok = True
    singles = {}
    for g in generators:
        moved = [w for w in range(len(ball)) if g(w) != w]
        # a single-generator projection moves w exactly by stripping s
        cand = {next(iter(ball.right_descents(w) & set(ball.matrix.generators)
                          & {s for s in ball.matrix.generators
                             if ball.right[w][s] == g(w)}), None)
                for w in moved}
        cand.discard(None)
        if len(cand) == 1:
            singles[next(iter(cand))] = g
    for s in singles:
        for t in singles:
            if s >= t:
                continue
            m = ball.matrix.m(s, t)
            if m == 0:
                continue
            a = b = ident
            x, y = singles[s], singles[t]
            for i in range(m):
                a = (x if i % 2 == 0 else y).compose(a)
                b = (y if i % 2 == 0 else x).compose(b)
            if a.images != b.images:
                braid_ok = False
    preserving = None
    if poset is not None:
        preserving = all(is_order_preserving(f, poset).ok for f in elements)
    return MonoidReport(size=len(elements), idempotent=idem, braid_ok=braid_ok,
                        order_preserving=preserving, elements=elements)
