"""Generic finite-poset algorithms: closure/reduction, gradedness,
antichain families (Greene-Kleitman via min-cost flow), order complexes
and shellability search, isomorphism, and the noncrossing-partition
lattice.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .errors import DomainError, ResourceError
from .flows import MinCostFlow, koenig_independent_set, max_bipartite_matching


class Poset:
    """Finite poset over hashable node labels.

    Stored as the list of nodes, the Hasse (cover) edges as index
    pairs, and reflexive reachability bitmasks.  An optional rank list
    and a metadata dict describe how the poset was built.
    """

    def __init__(self, nodes, covers, rank=None, metadata=None, _up=None):
        self.nodes = list(nodes)
        self.covers = sorted(set(covers))
        self.rank = list(rank) if rank is not None else None
        self.metadata = dict(metadata or {})
        self._index = {x: i for i, x in enumerate(self.nodes)}
        if len(self._index) != len(self.nodes):
            raise DomainError("duplicate node labels")
        self.n = len(self.nodes)
        self._up = _up  # up[i] = bitmask of j >= i (reflexive)
        self._down = None

    # -- construction ---------------------------------------------------

    @classmethod
    def from_relation(cls, nodes, leq_pairs, rank=None, metadata=None) -> "Poset":
        """Build from the full (or generating) set of strict index pairs
        (i, j) meaning node i < node j; covers by transitive reduction."""
        nodes = list(nodes)
        n = len(nodes)
        succ = [0] * n
        for i, j in leq_pairs:
            if i != j:
                succ[i] |= 1 << j
        up = _transitive_closure(succ)
        covers = _covers_from_closure(up)
        return cls(nodes, covers, rank=rank, metadata=metadata, _up=up)

    # -- relation -------------------------------------------------------

    @property
    def up(self):
        if self._up is None:
            succ = [0] * self.n
            for i, j in self.covers:
                succ[i] |= 1 << j
            self._up = _transitive_closure(succ)
        return self._up

    @property
    def down(self):
        if self._down is None:
            down = [0] * self.n
            up = self.up
            for i in range(self.n):
                m = up[i]
                while m:
                    j = (m & -m).bit_length() - 1
                    down[j] |= 1 << i
                    m &= m - 1
            self._down = down
        return self._down

    def index(self, label):
        return self._index[label]

    def leq(self, i: int, j: int) -> bool:
        return bool(self.up[i] >> j & 1)

    def lt(self, i: int, j: int) -> bool:
        return i != j and self.leq(i, j)

    def relation_pairs(self) -> frozenset:
        """All strict pairs (label_i, label_j) with i < j in the order."""
        out = []
        up = self.up
        for i in range(self.n):
            m = up[i] & ~(1 << i)
            while m:
                j = (m & -m).bit_length() - 1
                out.append((self.nodes[i], self.nodes[j]))
                m &= m - 1
        return frozenset(out)

    def minimals(self):
        down = self.down
        return [i for i in range(self.n) if down[i] == 1 << i]

    def maximals(self):
        up = self.up
        return [i for i in range(self.n) if up[i] == 1 << i]

    def up_adj(self):
        adj = [[] for _ in range(self.n)]
        for i, j in self.covers:
            adj[i].append(j)
        return adj

    def down_adj(self):
        adj = [[] for _ in range(self.n)]
        for i, j in self.covers:
            adj[j].append(i)
        return adj

    # -- derived posets ---------------------------------------------------

    def subposet(self, indices) -> "Poset":
        """Induced subposet; covers recomputed for the induced relation."""
        indices = sorted(indices)
        pos = {x: k for k, x in enumerate(indices)}
        pairs = []
        for a in indices:
            m = self.up[a] & ~(1 << a)
            while m:
                b = (m & -m).bit_length() - 1
                m &= m - 1
                if b in pos:
                    pairs.append((pos[a], pos[b]))
        rank = [self.rank[i] for i in indices] if self.rank is not None else None
        return Poset.from_relation([self.nodes[i] for i in indices], pairs,
                                   rank=rank, metadata=self.metadata)

    def interval(self, u, v) -> "Poset":
        """Closed interval [u, v] as an induced subposet (labels)."""
        i, j = self.index(u), self.index(v)
        if not self.leq(i, j):
            raise DomainError(f"{u!r} and {v!r} are not comparable in this order")
        members = self.up[i] & self.down[j]
        idx = _bits(members)
        return self.subposet(idx)

    def components(self):
        """Connected components of the Hasse diagram, as index lists."""
        adj = [[] for _ in range(self.n)]
        for i, j in self.covers:
            adj[i].append(j)
            adj[j].append(i)
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            comp = [s]
            seen[s] = True
            stack = [s]
            while stack:
                x = stack.pop()
                for y in adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        comp.append(y)
                        stack.append(y)
            comps.append(sorted(comp))
        return comps

    def is_antichain(self, indices) -> bool:
        idx = list(indices)
        for a, b in combinations(idx, 2):
            if self.leq(a, b) or self.leq(b, a):
                return False
        return True

    def height_levels(self):
        """height[i] = longest chain below i (0 for minimal elements)."""
        order = self.topological_order()
        h = [0] * self.n
        dadj = self.down_adj()
        for x in order:
            if dadj[x]:
                h[x] = 1 + max(h[y] for y in dadj[x])
        return h

    def topological_order(self):
        indeg = [0] * self.n
        uadj = self.up_adj()
        for i, j in self.covers:
            indeg[j] += 1
        from collections import deque
        q = deque(i for i in range(self.n) if indeg[i] == 0)
        out = []
        while q:
            x = q.popleft()
            out.append(x)
            for y in uadj[x]:
                indeg[y] -= 1
                if indeg[y] == 0:
                    q.append(y)
        if len(out) != self.n:
            raise DomainError("cover relation has a cycle; not a poset")
        return out

    def maximal_chains(self):
        """All maximal chains, as lists of indices (cover paths from
        minimal to maximal elements)."""
        uadj = self.up_adj()
        out = []
        stack = [[m] for m in self.minimals()]
        while stack:
            chain = stack.pop()
            ups = uadj[chain[-1]]
            if not ups:
                out.append(chain)
            else:
                for y in ups:
                    stack.append(chain + [y])
        return out


def _transitive_closure(succ):
    n = len(succ)
    up = [succ[i] | (1 << i) for i in range(n)]
    # process in reverse topological order of the successor DAG
    order = _topo(succ, n)
    for i in reversed(order):
        m = succ[i]
        acc = up[i]
        while m:
            j = (m & -m).bit_length() - 1
            acc |= up[j]
            m &= m - 1
        up[i] = acc
    return up


def _topo(succ, n):
    indeg = [0] * n
    for i in range(n):
        m = succ[i]
        while m:
            j = (m & -m).bit_length() - 1
            indeg[j] += 1
            m &= m - 1
    from collections import deque
    q = deque(i for i in range(n) if indeg[i] == 0)
    out = []
    while q:
        x = q.popleft()
        out.append(x)
        m = succ[x]
        while m:
            j = (m & -m).bit_length() - 1
            m &= m - 1
            indeg[j] -= 1
            if indeg[j] == 0:
                q.append(j)
    if len(out) != n:
        raise DomainError("relation has a cycle; not a partial order")
    return out


def _covers_from_closure(up):
    n = len(up)
    covers = []
    for i in range(n):
        above = up[i] & ~(1 << i)
        m = above
        while m:
            j = (m & -m).bit_length() - 1
            m &= m - 1
            # i < j is a cover iff no k lies strictly between them
            between = above & ~(1 << j)
            ok = True
            b = between
            while b:
                k = (b & -b).bit_length() - 1
                b &= b - 1
                if up[k] >> j & 1:
                    ok = False
                    break
            if ok:
                covers.append((i, j))
    return covers


def _bits(mask):
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length() - 1)
        mask ^= b
    return out


# -- gradedness -------------------------------------------------------------


@dataclass
class GradedReport:
    ok: bool
    bad_covers: list = field(default_factory=list)


def check_graded(poset: Poset, rank_fn) -> GradedReport:
    """Check that every cover edge raises rank_fn by exactly 1.

    Covers of any interval of a poset are covers of the poset itself,
    so this single condition also makes every maximal chain of every
    interval saturated with respect to rank_fn.
    """
    bad = []
    for i, j in poset.covers:
        if rank_fn(poset.nodes[j]) - rank_fn(poset.nodes[i]) != 1:
            bad.append((poset.nodes[i], poset.nodes[j]))
    return GradedReport(ok=not bad, bad_covers=bad)


def is_graded(poset: Poset) -> bool:
    """Whether all maximal chains (minimal to maximal element) have the
    same length, i.e. some rank function grades the poset."""
    if poset.n == 0:
        return True
    order = poset.topological_order()
    dadj = poset.down_adj()
    lo = [0] * poset.n
    hi = [0] * poset.n
    for x in order:
        if dadj[x]:
            lo[x] = 1 + min(lo[y] for y in dadj[x])
            hi[x] = 1 + max(hi[y] for y in dadj[x])
    if any(lo[x] != hi[x] for x in range(poset.n)):
        return False
    tops = {hi[x] for x in poset.maximals()}
    return len(tops) <= 1


# -- order ideals -----------------------------------------------------------


def order_ideals(poset: Poset):
    """All down-closed subsets, as frozensets of indices."""
    order = poset.topological_order()
    dadj = poset.down_adj()

    def rec(k, current):
        if k == len(order):
            yield frozenset(current)
            return
        x = order[k]
        # exclude x
        yield from rec(k + 1, current)
        # include x only if all lower covers are in
        if all(y in current for y in dadj[x]):
            current.add(x)
            yield from rec(k + 1, current)
            current.remove(x)

    yield from rec(0, set())


def is_order_ideal(poset: Poset, indices) -> bool:
    s = set(indices)
    down = poset.down
    for x in s:
        m = down[x]
        while m:
            y = (m & -m).bit_length() - 1
            m &= m - 1
            if y not in s:
                return False
    return True


# -- maximum h-families (Greene-Kleitman) -----------------------------------


def max_h_family_value(poset: Poset, h: int) -> int:
    """Maximum size of a union of h antichains, by min-cost flow on the
    disjoint-chain network (Greene-Kleitman duality: the optimum equals
    n minus the best total excess of chains over length h)."""
    if h < 1:
        raise DomainError("h must be >= 1")
    n = poset.n
    if n == 0:
        return 0
    mcf = MinCostFlow(2 * n + 2)
    s, t = 2 * n, 2 * n + 1
    for i in range(n):
        mcf.add_edge(s, i, 1, h)          # starting a chain costs h
        mcf.add_edge(i, n + i, 1, -1)     # covering an element gains 1
        mcf.add_edge(n + i, t, 1, 0)
        m = poset.up[i] & ~(1 << i)
        while m:
            j = (m & -m).bit_length() - 1
            m &= m - 1
            mcf.add_edge(n + i, j, 1, 0)
    _, cost = mcf.run(s, t, stop_on_nonnegative=True)
    return n + cost


def max_antichain(poset: Poset):
    """A maximum antichain, via Dilworth/Koenig on the comparability
    bipartite graph."""
    n = poset.n
    adj = [[] for _ in range(n)]
    for i in range(n):
        m = poset.up[i] & ~(1 << i)
        while m:
            j = (m & -m).bit_length() - 1
            m &= m - 1
            adj[i].append(j)
    match_right = max_bipartite_matching(n, n, adj)
    left_in, right_in = koenig_independent_set(n, n, adj, match_right)
    anti = sorted(set(left_in) & set(right_in))
    return anti


def _h_family_witness_search(poset: Poset, h: int, target: int, budget: int = 500_000):
    """Backtracking for a union of h antichains of the given size:
    keep/discard nodes in topological order, tracking the Mirsky level
    (longest kept chain ending at each node)."""
    order = poset.topological_order()
    n = poset.n
    down = poset.down
    nodes_left = len(order)
    state: list = [None] * n  # level of kept nodes
    kept: list = []
    count = [0]

    def rec(k, nkept):
        count[0] += 1
        if count[0] > budget:
            raise ResourceError("witness search budget exceeded")
        if nkept + (n - k) < target:
            return False
        if nkept == target:
            return True
        if k == n:
            return False
        x = order[k]
        level = 1
        m = down[x] & ~(1 << x)
        while m:
            y = (m & -m).bit_length() - 1
            m &= m - 1
            if state[y] is not None and state[y] + 1 > level:
                level = state[y] + 1
        if level <= h:
            state[x] = level
            kept.append(x)
            if rec(k + 1, nkept + 1):
                return True
            kept.pop()
            state[x] = None
        return rec(k + 1, nkept)

    found = rec(0, 0)
    if not found:
        return None
    families = [[] for _ in range(h)]
    for x in kept:
        families[state[x] - 1].append(poset.nodes[x])
    return [f for f in families if f]


def max_h_family(poset: Poset, h: int, witness_budget: int = 500_000):
    """(size, witness) for the largest union of h antichains.

    The size comes from the flow computation; the witness from a pruned
    backtracking search (greedy antichain peeling as a fallback), and is
    None when neither produces one within budget.
    """
    value = max_h_family_value(poset, h)
    if h >= 1 and poset.n:
        # greedy peeling: often optimal and cheap
        remaining = set(range(poset.n))
        fams = []
        sub_map = None
        sub = poset
        idx_map = list(range(poset.n))
        total = 0
        for _ in range(h):
            if not remaining:
                break
            sub = poset.subposet(sorted(remaining))
            anti = max_antichain(sub)
            labels = [sub.nodes[a] for a in anti]
            fams.append(labels)
            total += len(labels)
            remaining -= {poset.index(x) for x in labels}
        if total == value:
            return value, fams
    try:
        witness = _h_family_witness_search(poset, h, value, witness_budget)
    except ResourceError:
        witness = None
    return value, witness


@dataclass
class SpernerRow:
    h: int
    flow_value: int
    top_rank_sum: int
    ok: bool


@dataclass
class SpernerReport:
    ok: bool
    rows: list


def strong_sperner_check(poset: Poset, rank_fn=None) -> SpernerReport:
    """For every h, the largest union of h antichains must equal the sum
    of the h largest rank-level sizes."""
    if rank_fn is None:
        if poset.rank is None:
            raise DomainError("strong Sperner check needs a graded poset with ranks")
        ranks = poset.rank
    else:
        ranks = [rank_fn(x) for x in poset.nodes]
    rep = check_graded(poset, lambda x: ranks[poset.index(x)])
    if not rep.ok:
        raise DomainError(f"poset is not graded by the given rank: {rep.bad_covers[:3]}")
    sizes: dict[int, int] = {}
    for r in ranks:
        sizes[r] = sizes.get(r, 0) + 1
    level_sizes = sorted(sizes.values(), reverse=True)
    rows = []
    ok = True
    for h in range(1, len(level_sizes) + 1):
        val = max_h_family_value(poset, h)
        expect = sum(level_sizes[:h])
        good = val == expect
        ok = ok and good
        rows.append(SpernerRow(h, val, expect, good))
    return SpernerReport(ok=ok, rows=rows)


# -- order complexes and shellability ----------------------------------------


@dataclass
class OrderComplex:
    vertices: list
    facets: list  # list of frozensets of vertices (maximal chains)


def order_complex(interval_poset: Poset) -> OrderComplex:
    """Order complex of the OPEN interval: the unique bottom and top are
    removed and the maximal chains of the remainder become facets."""
    mins = interval_poset.minimals()
    maxs = interval_poset.maximals()
    if len(mins) != 1 or len(maxs) != 1:
        raise DomainError("order_complex expects a bounded interval poset")
    keep = [i for i in range(interval_poset.n) if i not in (mins[0], maxs[0])]
    if not keep:
        return OrderComplex(vertices=[], facets=[])
    open_poset = interval_poset.subposet(keep)
    facets = [frozenset(open_poset.nodes[i] for i in ch)
              for ch in open_poset.maximal_chains()]
    return OrderComplex(vertices=list(open_poset.nodes), facets=facets)


@dataclass
class ShellingVerdict:
    status: str  # "shellable" | "not_shellable" | "inconclusive"
    order: list | None = None


def shellability(complex: OrderComplex, facet_cap: int = 5000,
                 node_budget: int = 500_000) -> ShellingVerdict:
    """Search for a (possibly nonpure) shelling order: every added facet
    must meet the union of its predecessors in a nonempty pure
    codimension-1 subcomplex of itself."""
    facets = list(dict.fromkeys(complex.facets))
    m = len(facets)
    if m > facet_cap:
        raise ResourceError(f"facet count {m} exceeds cap {facet_cap}")
    if m <= 1:
        return ShellingVerdict("shellable", order=list(facets))
    inter = [[facets[a] & facets[b] for b in range(m)] for a in range(m)]

    def can_add(f, used):
        ff = facets[f]
        want = len(ff) - 1
        walls = []
        others = []
        for g in used:
            x = inter[f][g]
            if len(x) == len(ff):
                return False  # duplicate facet; filtered above, defensive
            if len(x) == want:
                walls.append(x)
            else:
                others.append(x)
        if not walls:
            return False
        for x in others:
            if not any(x <= w for w in walls):
                return False
        return True

    dead: set[frozenset] = set()
    nodes = [0]
    out: list[int] = []

    def rec(used, used_set):
        if len(used) == m:
            out.extend(used)
            return True
        key = frozenset(used_set)
        if key in dead:
            return False
        nodes[0] += 1
        if nodes[0] > node_budget:
            raise ResourceError("shelling search budget exceeded")
        for f in range(m):
            if f not in used_set and can_add(f, used):
                used.append(f)
                used_set.add(f)
                if rec(used, used_set):
                    return True
                used_set.remove(f)
                used.pop()
        dead.add(key)
        return False

    # any facet may start a shelling, so each is tried as a root
    try:
        for first in sorted(range(m), key=lambda f: -len(facets[f])):
            if rec([first], {first}):
                return ShellingVerdict("shellable", order=[facets[i] for i in out])
    except ResourceError:
        return ShellingVerdict("inconclusive")
    return ShellingVerdict("not_shellable")


# -- isomorphism --------------------------------------------------------------


def _invariants(p: Poset, rounds: int = 2):
    uadj, dadj = p.up_adj(), p.down_adj()
    up, down = p.up, p.down
    inv = [(len(uadj[i]), len(dadj[i]),
            bin(up[i]).count("1"), bin(down[i]).count("1")) for i in range(p.n)]
    for _ in range(rounds):
        inv = [(inv[i],
                tuple(sorted(inv[j] for j in uadj[i])),
                tuple(sorted(inv[j] for j in dadj[i]))) for i in range(p.n)]
    return inv


def poset_isomorphic(p: Poset, q: Poset, size_cap: int = 5000):
    """(verdict, bijection) where the bijection maps p-labels to
    q-labels; backtracking with invariant refinement."""
    if p.n != q.n:
        return False, None
    if p.n > size_cap:
        raise ResourceError(f"poset size {p.n} exceeds isomorphism cap {size_cap}")
    pi, qi = _invariants(p), _invariants(q)
    if sorted(pi) != sorted(qi):
        return False, None
    candidates = [[j for j in range(q.n) if qi[j] == pi[i]] for i in range(p.n)]
    order = sorted(range(p.n), key=lambda i: len(candidates[i]))
    p_up, q_up = p.up_adj(), q.up_adj()
    p_dn, q_dn = p.down_adj(), q.down_adj()
    mapping = [-1] * p.n
    used = [False] * q.n

    def rec(k):
        if k == p.n:
            return True
        i = order[k]
        for j in candidates[i]:
            if used[j]:
                continue
            # cover relation must match exactly on already-mapped nodes
            ok = True
            for x in range(p.n):
                if mapping[x] != -1:
                    if (mapping[x] in q_up_sets[j]) != (x in p_up_sets[i]):
                        ok = False
                        break
                    if (mapping[x] in q_dn_sets[j]) != (x in p_dn_sets[i]):
                        ok = False
                        break
            if ok:
                mapping[i] = j
                used[j] = True
                if rec(k + 1):
                    return True
                used[j] = False
                mapping[i] = -1
        return False

    p_up_sets = [set(a) for a in p_up]
    p_dn_sets = [set(a) for a in p_dn]
    q_up_sets = [set(a) for a in q_up]
    q_dn_sets = [set(a) for a in q_dn]
    if rec(0):
        return True, {p.nodes[i]: q.nodes[mapping[i]] for i in range(p.n)}
    return False, None


# -- noncrossing partitions ----------------------------------------------------


@dataclass
class NCLattice:
    n: int
    elements: list  # frozensets of frozensets (blocks)
    poset: Poset    # refinement order: finer <= coarser


def _is_noncrossing(blocks) -> bool:
    blist = [sorted(b) for b in blocks]
    for (b1, b2) in combinations(blist, 2):
        for a, c in combinations(b1, 2):
            # crossing iff some element of b2 is inside (a, c) and some outside
            inside = any(a < x < c for x in b2)
            outside = any(x < a or x > c for x in b2)
            if inside and outside:
                return False
    return True


def nc_lattice(n: int) -> NCLattice:
    """Noncrossing set partitions of {1..n} under refinement."""
    if not 1 <= n <= 10:
        raise DomainError("nc_lattice supports 1 <= n <= 10")
    parts: list[frozenset] = []

    def gen(k, blocks):
        if k > n:
            fs = frozenset(frozenset(b) for b in blocks)
            if _is_noncrossing(blocks):
                parts.append(fs)
            return
        for b in blocks:
            b.append(k)
            gen(k + 1, blocks)
            b.pop()
        blocks.append([k])
        gen(k + 1, blocks)
        blocks.pop()

    gen(1, [])
    index = {p: i for i, p in enumerate(parts)}
    # covers: merge two blocks, if still noncrossing
    pairs = []
    for p in parts:
        blocks = list(p)
        for b1, b2 in combinations(blocks, 2):
            merged = [b for b in blocks if b not in (b1, b2)] + [b1 | b2]
            if _is_noncrossing([sorted(b) for b in merged]):
                q = frozenset(frozenset(b) for b in merged)
                pairs.append((index[p], index[q]))
    rank = [n - len(p) for p in parts]
    poset = Poset.from_relation(parts, pairs, rank=rank,
                                metadata={"kind": "noncrossing-partitions", "n": n})
    return NCLattice(n=n, elements=parts, poset=poset)


def is_meet_semilattice(poset: Poset) -> bool:
    """Whether every pair of nodes has a greatest lower bound."""
    n = poset.n
    up, down = poset.up, poset.down
    for i in range(n):
        for j in range(i + 1, n):
            common = down[i] & down[j]
            if not common:
                return False
            # the meet must be the unique maximal element of the common
            # lower set
            top = None
            m = common
            while m:
                x = (m & -m).bit_length() - 1
                m &= m - 1
                if up[x] & common == 1 << x:
                    if top is not None:
                        return False
                    top = x
            if top is None:
                return False
    return True
