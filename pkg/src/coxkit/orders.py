"""Reflection-labelled directed graphs on a ball, the induced
intermediate orders, k-absolute length, and the k-absolute order.

All constructions are ball-restricted.  Chains of the intermediate
orders are strictly length-increasing, so reachability between two
elements of the ball never depends on anything outside it; the graph
still records how many arcs were dropped at the boundary.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .ball import GroupBall
from .errors import DomainError, IncompleteSliceError, OutOfBallError
from .posets import Poset
from .reflections import ReflectionTable, t_k_set

__all__ = [
    "OmegaGraph", "AbsoluteLengthTable", "omega_graph", "intermediate_poset",
    "k_absolute_length_all", "k_absolute_poset", "interval_poset",
    "refinement_chain_check", "RefinementReport",
]


@dataclass
class OmegaGraph:
    ball: GroupBall
    x_set: frozenset[int]
    arcs: list            # (a, b, t) with b = t*a and l(b) > l(a)
    boundary_skips: int   # products t*a that left the ball

    def successors(self):
        succ = [[] for _ in range(len(self.ball))]
        for a, b, _t in self.arcs:
            succ[a].append(b)
        return succ


def omega_graph(ball: GroupBall, x_set) -> OmegaGraph:
    """Arcs a -> t*a for t in the set, whenever length strictly
    increases and both ends are in the ball."""
    xs = frozenset(x_set)
    arcs = []
    skips = 0
    for t in sorted(xs):
        lt = ball.length(t)
        for a in range(len(ball)):
            try:
                b = ball.multiply(t, a)
            except OutOfBallError:
                skips += 1
                continue
            if ball.length(b) > ball.length(a):
                arcs.append((a, b, t))
    arcs.sort()
    return OmegaGraph(ball=ball, x_set=xs, arcs=arcs, boundary_skips=skips)


def intermediate_poset(ball: GroupBall, x_set, graph: OmegaGraph | None = None) -> Poset:
    """Reachability order of the arc graph, on all ball elements.

    Complete for every pair inside the ball: each chain step increases
    length, so witnessing chains cannot leave the ball.
    """
    g = graph if graph is not None else omega_graph(ball, x_set)
    pairs = [(a, b) for a, b, _t in g.arcs]
    rank = [ball.length(w) for w in range(len(ball))]
    return Poset.from_relation(
        list(range(len(ball))), pairs, rank=rank,
        metadata={"kind": "intermediate-order", "x_size": len(g.x_set),
                  "boundary_skips": g.boundary_skips})


@dataclass
class AbsoluteLengthTable:
    ball: GroupBall
    k: int
    lk: list[int]                 # distance from the identity in the arc graph
    witness_pred: list[int]       # BFS predecessor (smallest id), -1 at source
    witness_arc: list[int]        # reflection used to enter each node, -1 at source


def k_absolute_length_all(table: ReflectionTable, k: int) -> AbsoluteLengthTable:
    """BFS distances from the identity along the k-sliced arc graph."""
    ball = table.ball
    tk = t_k_set(table, k)  # raises when the slice is incomplete
    g = omega_graph(ball, tk)
    succ = [[] for _ in range(len(ball))]
    for a, b, t in g.arcs:
        succ[a].append((b, t))
    n = len(ball)
    dist = [-1] * n
    pred = [-1] * n
    arc = [-1] * n
    dist[ball.identity] = 0
    frontier = [ball.identity]
    while frontier:
        nxt = []
        for a in sorted(frontier):
            for b, t in succ[a]:
                if dist[b] == -1:
                    dist[b] = dist[a] + 1
                    pred[b] = a
                    arc[b] = t
                    nxt.append(b)
        frontier = nxt
    if any(d == -1 for d in dist):
        raise IncompleteSliceError(
            "arc graph does not reach the whole ball; slice incomplete")
    return AbsoluteLengthTable(ball=ball, k=k, lk=dist,
                               witness_pred=pred, witness_arc=arc)


def k_absolute_poset(table: AbsoluteLengthTable) -> Poset:
    """The order u below v iff lk(v) = lk(u) + lk(v u^-1), over all
    pairs certifiably inside the ball.

    Pairs with l(u) + l(v) > radius cannot certify v u^-1 and are
    counted in metadata["flagged_pairs"]; with a complete group every
    pair is tested.
    """
    ball = table.ball
    lk = table.lk
    n = len(ball)
    pairs = []
    flagged = 0
    for u in range(n):
        iu = ball.inverse(u)
        lu = ball.length(u)
        for v in range(n):
            if u == v:
                continue
            if not ball.is_complete_group and lu + ball.length(v) > ball.radius:
                flagged += 1
                continue
            try:
                d = ball.multiply(v, iu)
            except OutOfBallError:
                flagged += 1
                continue
            if lk[v] == lk[u] + lk[d]:
                pairs.append((u, v))
    return Poset.from_relation(
        list(range(n)), pairs, rank=lk,
        metadata={"kind": "k-absolute-order", "k": table.k,
                  "flagged_pairs": flagged})


def interval_poset(poset: Poset, u, v) -> Poset:
    """Closed interval of the poset between two node labels."""
    return poset.interval(u, v)


@dataclass
class RefinementReport:
    ok: bool
    containments: list = field(default_factory=list)  # (a, b, holds)
    equals_bruhat_at: int | None = None


def refinement_chain_check(table: ReflectionTable, k_max: int) -> RefinementReport:
    """Containment of the intermediate orders as k grows, ending inside
    Bruhat order: relation(k=a) is a subset of relation(k=b) for a <= b,
    and the largest tested order sits inside Bruhat."""
    if k_max < 0:
        raise DomainError("k_max must be >= 0")
    ball = table.ball
    rels = []
    for k in range(k_max + 1):
        p = intermediate_poset(ball, t_k_set(table, k))
        rels.append(p.relation_pairs())
    bruhat = frozenset((u, v) for u in range(len(ball)) for v in range(len(ball))
                       if u != v and ball.bruhat_leq(u, v))
    rows = []
    ok = True
    for a in range(k_max + 1):
        b = a + 1
        if b <= k_max:
            holds = rels[a] <= rels[b]
            rows.append((a, b, holds))
            ok = ok and holds
    holds = rels[k_max] <= bruhat
    rows.append((k_max, "bruhat", holds))
    ok = ok and holds
    equals_at = None
    for k in range(k_max + 1):
        if rels[k] == bruhat:
            equals_at = k
            break
    return RefinementReport(ok=ok, containments=rows, equals_bruhat_at=equals_at)
