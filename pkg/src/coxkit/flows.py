"""Integer min-cost flow and bipartite matching, shared by the Sperner
checker and the exact optimal-transport solver.

All capacities and costs are integers, so optima are exact.
"""
from __future__ import annotations

from collections import deque


class MinCostFlow:
    def __init__(self, n: int):
        self.n = n
        self.head: list[list[int]] = [[] for _ in range(n)]
        self.to: list[int] = []
        self.cap: list[int] = []
        self.cost: list[int] = []

    def add_edge(self, u: int, v: int, cap: int, cost: int) -> int:
        idx = len(self.to)
        self.head[u].append(idx)
        self.to.append(v)
        self.cap.append(cap)
        self.cost.append(cost)
        self.head[v].append(idx + 1)
        self.to.append(u)
        self.cap.append(0)
        self.cost.append(-cost)
        return idx

    def _spfa(self, s: int, t: int):
        INFD = float("inf")
        dist = [INFD] * self.n
        inq = [False] * self.n
        prev_edge = [-1] * self.n
        dist[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            inq[u] = False
            du = dist[u]
            for e in self.head[u]:
                if self.cap[e] > 0:
                    v = self.to[e]
                    nd = du + self.cost[e]
                    if nd < dist[v]:
                        dist[v] = nd
                        prev_edge[v] = e
                        if not inq[v]:
                            inq[v] = True
                            q.append(v)
        return dist, prev_edge

    def run(self, s: int, t: int, max_flow: int | None = None,
            stop_on_nonnegative: bool = False) -> tuple[int, int]:
        """Successive shortest augmenting paths.  Returns (flow, cost).

        With stop_on_nonnegative, augmentation stops once the cheapest
        path cost is >= 0 (global cost minimum over all flow values).
        """
        flow = 0
        total_cost = 0
        while max_flow is None or flow < max_flow:
            dist, prev_edge = self._spfa(s, t)
            if dist[t] == float("inf"):
                break
            if stop_on_nonnegative and dist[t] >= 0:
                break
            push = float("inf") if max_flow is None else max_flow - flow
            v = t
            while v != s:
                e = prev_edge[v]
                push = min(push, self.cap[e])
                v = self.to[e ^ 1]
            v = t
            while v != s:
                e = prev_edge[v]
                self.cap[e] -= push
                self.cap[e ^ 1] += push
                v = self.to[e ^ 1]
            flow += push
            total_cost += push * dist[t]
        return flow, total_cost

    def edge_flow(self, idx: int) -> int:
        return self.cap[idx ^ 1]


def max_bipartite_matching(n_left: int, n_right: int, adj) -> list[int]:
    """Kuhn's algorithm.  adj[u] = iterable of right vertices.
    Returns match_right: right vertex -> left vertex or -1."""
    match_right = [-1] * n_right
    match_left = [-1] * n_left

    def try_kuhn(u, seen):
        for v in adj[u]:
            if not seen[v]:
                seen[v] = True
                if match_right[v] == -1 or try_kuhn(match_right[v], seen):
                    match_right[v] = u
                    match_left[u] = v
                    return True
        return False

    for u in range(n_left):
        try_kuhn(u, [False] * n_right)
    return match_right


def koenig_independent_set(n_left: int, n_right: int, adj, match_right):
    """Maximum independent set (complement of a minimum vertex cover)
    of a bipartite graph, from a maximum matching."""
    match_left = [-1] * n_left
    for v, u in enumerate(match_right):
        if u != -1:
            match_left[u] = v
    visited_l = [False] * n_left
    visited_r = [False] * n_right
    stack = [u for u in range(n_left) if match_left[u] == -1]
    for u in stack:
        visited_l[u] = True
    while stack:
        u = stack.pop()
        for v in adj[u]:
            if not visited_r[v]:
                visited_r[v] = True
                w = match_right[v]
                if w != -1 and not visited_l[w]:
                    visited_l[w] = True
                    stack.append(w)
    # cover = unvisited left + visited right; independent set is the rest
    left_in = [u for u in range(n_left) if visited_l[u]]
    right_in = [v for v in range(n_right) if not visited_r[v]]
    return left_in, right_in
