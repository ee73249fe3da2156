"""Exploratory Ollivier-Ricci curvature of arc graphs, with exact
rational arithmetic.

Convention (fixed, recorded in report metadata): the underlying graph
is undirected, the measure at a vertex is uniform on its neighbors
(idleness 0), the cost is the shortest-path metric, and
kappa(x, y) = 1 - W1(mu_x, mu_y).  No published value is asserted; all
expected values in the tests come from independent small-instance
oracles.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm

from .errors import DomainError, OutOfBallError
from .flows import MinCostFlow

CONVENTION = {
    "graph": "undirected",
    "measure": "uniform-on-neighbors",
    "idleness": 0,
    "cost": "shortest-path",
    "kappa": "1 - W1",
}

__all__ = ["CurvatureRecord", "CurvatureReport", "undirected_adjacency",
           "ollivier_ricci_edge", "wasserstein_1", "curvature_spectrum",
           "CONVENTION"]


@dataclass
class CurvatureRecord:
    x: int
    y: int
    kappa: Fraction
    transport_plan: dict  # (u, v) -> Fraction mass


@dataclass
class CurvatureReport:
    records: list
    errors: list          # (x, y, message)
    convention: dict = field(default_factory=lambda: dict(CONVENTION))

    def kappa_min(self):
        return min((r.kappa for r in self.records), default=None)

    def kappa_max(self):
        return max((r.kappa for r in self.records), default=None)

    def histogram(self):
        out: dict[Fraction, int] = {}
        for r in self.records:
            out[r.kappa] = out.get(r.kappa, 0) + 1
        return dict(sorted(out.items()))


def undirected_adjacency(graph) -> dict[int, set[int]]:
    """Neighbor sets of the arc graph with orientation forgotten."""
    adj: dict[int, set[int]] = {}
    for a, b, _t in graph.arcs:
        adj.setdefault(a, set()).add(b)
        adj.setdefault(b, set()).add(a)
    return adj


def _bfs_distances(adj, source, depth_cap):
    dist = {source: 0}
    frontier = [source]
    d = 0
    while frontier and d < depth_cap:
        d += 1
        nxt = []
        for u in frontier:
            for v in adj.get(u, ()):
                if v not in dist:
                    dist[v] = d
                    nxt.append(v)
        frontier = nxt
    return dist


def wasserstein_1(supports_x, supports_y, dist_fn) -> tuple[Fraction, dict]:
    """Exact W1 between uniform measures on two support sets, via an
    integer-scaled transportation network.  Returns (W1, plan)."""
    p, q = len(supports_x), len(supports_y)
    if p == 0 or q == 0:
        raise DomainError("empty support")
    scale = lcm(p, q)
    mcf = MinCostFlow(p + q + 2)
    s, t = p + q, p + q + 1
    mids = {}
    for i in range(p):
        mcf.add_edge(s, i, scale // p, 0)
    for j in range(q):
        mcf.add_edge(p + j, t, scale // q, 0)
    for i, u in enumerate(supports_x):
        for j, v in enumerate(supports_y):
            d = dist_fn(u, v)
            if d is None:
                raise DomainError(f"no path between supports {u} and {v}")
            mids[(i, j)] = mcf.add_edge(i, p + j, scale, d)
    flow, cost = mcf.run(s, t, max_flow=scale)
    if flow != scale:
        raise DomainError("transportation problem infeasible")
    plan = {}
    for (i, j), e in mids.items():
        f = mcf.edge_flow(e)
        if f:
            plan[(supports_x[i], supports_y[j])] = Fraction(f, scale)
    return Fraction(cost, scale), plan


def ollivier_ricci_edge(graph, x: int, y: int,
                        adj: dict[int, set[int]] | None = None) -> CurvatureRecord:
    """Curvature of the undirected edge {x, y}.

    On a truncated ball, every node within distance 4 of x must have a
    fully known neighborhood (its length plus the longest reflection in
    the slice must fit inside the radius); otherwise the metric could be
    contaminated by missing arcs and the edge is rejected.
    """
    if adj is None:
        adj = undirected_adjacency(graph)
    if y not in adj.get(x, ()):
        raise DomainError(f"({x},{y}) is not an edge")
    ball = graph.ball
    if not ball.is_complete_group:
        margin = max(ball.length(t) for t in graph.x_set)
        for v in _bfs_distances(adj, x, 4):
            if ball.length(v) + margin > ball.radius:
                raise OutOfBallError(
                    f"edge ({x},{y}) is too close to the ball boundary for "
                    f"exact curvature (node {v} lacks margin {margin})")
    nx = sorted(adj[x])
    ny = sorted(adj[y])
    dists = {u: _bfs_distances(adj, u, 3) for u in nx}
    w1, plan = wasserstein_1(nx, ny, lambda u, v: dists[u].get(v))
    return CurvatureRecord(x=x, y=y, kappa=1 - w1, transport_plan=plan)


def curvature_spectrum(graph, edges=None) -> CurvatureReport:
    """Curvature of a batch of edges (default: all undirected edges of
    the graph); per-edge failures are collected, not raised."""
    adj = undirected_adjacency(graph)
    if edges is None:
        edges = sorted({(min(a, b), max(a, b)) for a, b, _t in graph.arcs})
    records = []
    errors = []
    for x, y in edges:
        try:
            records.append(ollivier_ricci_edge(graph, x, y, adj=adj))
        except (DomainError, OutOfBallError) as exc:
            errors.append((x, y, str(exc)))
    return CurvatureReport(records=records, errors=errors)
