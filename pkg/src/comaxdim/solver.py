"""Exact solvers: independence / vertex cover, strong metric dimension, metric dimension.

Two independent routes to the strong metric dimension are provided:

* :func:`sdim_via_srg` reduces to a vertex cover of the strong resolving graph;
* :func:`sdim_bruteforce` works straight from the definition. For every
  vertex pair it collects the set of vertices that strongly resolve the pair
  and then searches subsets by increasing size, lexicographically, for one
  that hits all of these sets. It never looks at the strong resolving graph.

Nothing here approximates. Exceeding a cap raises :class:`CapExceededError`.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

from .config import DEFAULT_BRUTE_CAP, DEFAULT_SOLVE_CAP
from .errors import CapExceededError, DisconnectedGraphError
from .graph import Graph, bits
from .strong_resolving import SrGraph, build_srg


@dataclass(frozen=True)
class CoverSolution:
    alpha: int  # vertex cover number
    beta: int  # independence number
    cover_witness: tuple[int, ...]
    independent_witness: tuple[int, ...]


@dataclass(frozen=True)
class SdimResult:
    sdim: int
    witness: tuple[int, ...]
    method: str  # "srg_cover" | "brute_force"


def _require_connected(g: Graph) -> None:
    if not g.is_connected():
        raise DisconnectedGraphError("graph is disconnected; resolving sets need finite distances")


def _mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


# --- maximum independent set ---------------------------------------------

def _clique_cover_bound(adj: tuple[int, ...], cand: int) -> int:
    """Greedy clique partition size of ``cand``: an upper bound on independence."""
    count = 0
    while cand:
        v = (cand & -cand).bit_length() - 1
        common = adj[v] & cand
        cand &= ~(1 << v)
        while common:
            w = (common & -common).bit_length() - 1
            cand &= ~(1 << w)
            common &= adj[w]
        count += 1
    return count


class _MisSearch:
    def __init__(self, adj: tuple[int, ...]):
        self.adj = adj
        self.best = 0
        self.best_size = -1

    def run(self, cand: int, chosen: int, size: int) -> None:
        adj = self.adj
        # vertices of degree <= 1 in the candidate graph are always safe to take
        changed = True
        while changed and cand:
            changed = False
            for v in bits(cand):
                if (adj[v] & cand).bit_count() <= 1:
                    chosen |= 1 << v
                    size += 1
                    cand &= ~(adj[v] | 1 << v)
                    changed = True
                    break
        if not cand:
            if size > self.best_size:
                self.best, self.best_size = chosen, size
            return
        if size + _clique_cover_bound(adj, cand) <= self.best_size:
            return
        pivot, deg = -1, -1
        for v in bits(cand):
            d = (adj[v] & cand).bit_count()
            if d > deg:
                pivot, deg = v, d
        self.run(cand & ~(adj[pivot] | 1 << pivot), chosen | 1 << pivot, size + 1)
        self.run(cand & ~(1 << pivot), chosen, size)


def max_independent_set(g: Graph, cap: int = DEFAULT_SOLVE_CAP) -> CoverSolution:
    if g.n > cap:
        raise CapExceededError(f"exact independence limited to {cap} vertices, graph has {g.n}")
    search = _MisSearch(g.adj)
    search.run((1 << g.n) - 1, 0, 0)
    indep = tuple(bits(search.best))
    cover = tuple(v for v in range(g.n) if not search.best >> v & 1)
    sol = CoverSolution(alpha=len(cover), beta=len(indep), cover_witness=cover, independent_witness=indep)
    assert sol.alpha + sol.beta == g.n
    return sol


def is_vertex_cover(g: Graph, vertices: Iterable[int]) -> bool:
    m = _mask(vertices)
    return all(m >> i & 1 or m >> j & 1 for i, j in g.edges())


# --- strong metric dimension ---------------------------------------------

def sdim_via_srg(g: Graph, cap: int = DEFAULT_SOLVE_CAP, srg: Optional[SrGraph] = None) -> SdimResult:
    """Vertex cover number of the strong resolving graph."""
    _require_connected(g)
    sr = srg if srg is not None else build_srg(g)
    sol = max_independent_set(sr.srg, cap)
    return SdimResult(sdim=sol.alpha, witness=sr.to_base(sol.cover_witness), method="srg_cover")


def strong_resolvers(g: Graph, u: int, v: int) -> int:
    """Bitmask of the ``w`` with ``v`` on a shortest ``u``-``w`` path or ``u`` on a
    shortest ``v``-``w`` path. Always contains ``u`` and ``v``."""
    d = g.dist
    duv = d[u][v]
    mask = 0
    for w in range(g.n):
        if d[w][u] == d[w][v] + duv or d[w][v] == d[w][u] + duv:
            mask |= 1 << w
    return mask


def is_strong_resolving_set(g: Graph, s: Iterable[int]) -> bool:
    _require_connected(g)
    chosen = set(s)
    if any(not 0 <= w < g.n for w in chosen):
        raise KeyError(f"vertex set {sorted(chosen)} not contained in 0..{g.n - 1}")
    d = g.dist
    for u, v in combinations(range(g.n), 2):
        duv = d[u][v]
        if not any(d[w][u] == d[w][v] + duv or d[w][v] == d[w][u] + duv for w in chosen):
            return False
    return True


def _resolver_constraints(g: Graph) -> list[int]:
    cons = {strong_resolvers(g, u, v) for u, v in combinations(range(g.n), 2)}
    # a constraint containing another one is implied by it
    ordered = sorted(cons, key=lambda c: (c.bit_count(), c))
    kept: list[int] = []
    for c in ordered:
        if not any(k & c == k for k in kept):
            kept.append(c)
    return kept


def _hitting_lower_bound(cons: list[int]) -> int:
    """Lower bound on the size of any hitting set for ``cons``.

    Max of: a greedy packing of pairwise disjoint constraints, and a greedy
    clique partition of the graph formed by the 2-element constraints (a
    clique of size c there needs c - 1 hits).
    """
    packed = used = 0
    pair_adj: dict[int, int] = {}
    singles = 0
    for c in cons:  # sorted by size
        if not c & used:
            used |= c
            packed += 1
        size = c.bit_count()
        if size == 1:
            singles |= c
        elif size == 2:
            a = (c & -c).bit_length() - 1
            b = c.bit_length() - 1
            pair_adj[a] = pair_adj.get(a, 0) | 1 << b
            pair_adj[b] = pair_adj.get(b, 0) | 1 << a
    clique_lb = singles.bit_count()
    todo = _mask(pair_adj) & ~singles
    while todo:
        v = (todo & -todo).bit_length() - 1
        todo &= ~(1 << v)
        common = pair_adj[v] & todo
        size = 1
        while common:
            w = (common & -common).bit_length() - 1
            todo &= ~(1 << w)
            common &= pair_adj[w]
            size += 1
        clique_lb += size - 1
    return max(packed, clique_lb)


def _restrict(cons: list[int], chosen: int, avail: int) -> Optional[list[int]]:
    out = []
    for c in cons:
        if c & chosen:
            continue
        r = c & avail
        if not r:
            return None
        out.append(r)
    out.sort(key=lambda c: c.bit_count())
    return out


def _search(cons: list[int], n: int, i: int, chosen: int, budget: int) -> Optional[int]:
    # cons: unhit constraints, restricted to vertices >= i, sorted by size
    if not cons:
        return chosen
    if budget == 0 or _hitting_lower_bound(cons) > budget:
        return None
    useful = 0
    for c in cons:
        useful |= c
    for v in bits(useful):  # including a vertex that hits nothing is never needed
        if v < i:
            continue
        # include v, having excluded every useful vertex in i..v-1
        avail = ~((1 << (v + 1)) - 1)
        sub = _restrict(cons, 1 << v, avail)
        if sub is not None:
            found = _search(sub, n, v + 1, chosen | 1 << v, budget - 1)
            if found is not None:
                return found
        # exclude v: every constraint must still be hittable by vertices > v
        rest = _restrict(cons, 0, avail)
        if rest is None or _hitting_lower_bound(rest) > budget:
            return None
    return None


def sdim_bruteforce(g: Graph, cap: int = DEFAULT_BRUTE_CAP) -> SdimResult:
    """Smallest strong resolving set, first in (size, lexicographic) order.

    Subsets are enumerated by increasing size; within a size, in
    lexicographic order, skipping branches that provably contain no strong
    resolving set (an unhittable pair, or a lower bound above the budget).
    """
    if g.n > cap:
        raise CapExceededError(f"brute-force oracle limited to {cap} vertices, graph has {g.n}")
    _require_connected(g)
    if g.n < 2:
        return SdimResult(sdim=0, witness=(), method="brute_force")
    cons = _resolver_constraints(g)
    cons.sort(key=lambda c: c.bit_count())
    for k in range(_hitting_lower_bound(cons), g.n + 1):
        found = _search(cons, g.n, 0, 0, k)
        if found is not None:
            witness = tuple(bits(found))
            assert is_strong_resolving_set(g, witness)
            return SdimResult(sdim=len(witness), witness=witness, method="brute_force")
    raise AssertionError("the full vertex set always strongly resolves")


# --- metric dimension ----------------------------------------------------

def is_resolving_set(g: Graph, s) -> bool:
    """Distance vectors to ``s`` are pairwise distinct on ``V \\ s``."""
    _require_connected(g)
    order = list(s)
    members = set(order)
    d = g.dist
    seen = set()
    for v in range(g.n):
        if v in members:
            continue
        rep = tuple(d[v][w] for w in order)
        if rep in seen:
            return False
        seen.add(rep)
    return True


def twin_classes(g: Graph) -> list[list[int]]:
    """Classes of the relation N(u) = N(v) or N[u] = N[v] (an equivalence)."""
    groups: dict[tuple[str, int], list[int]] = {}
    for v in range(g.n):
        groups.setdefault(("open", g.adj[v]), []).append(v)
    for v in range(g.n):
        groups.setdefault(("closed", g.adj[v] | 1 << v), []).append(v)
    parent = list(range(g.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for members in groups.values():
        for w in members[1:]:
            parent[find(w)] = find(members[0])
    classes: dict[int, list[int]] = {}
    for v in range(g.n):
        classes.setdefault(find(v), []).append(v)
    return sorted(classes.values())


def dim_bruteforce(g: Graph, cap: int = DEFAULT_BRUTE_CAP) -> int:
    """Metric dimension by exhaustive search from the twin lower bound upward.

    Two twins outside a set have identical distance vectors to it, so every
    resolving set omits at most one vertex per twin class.
    """
    if g.n > cap:
        raise CapExceededError(f"brute-force oracle limited to {cap} vertices, graph has {g.n}")
    _require_connected(g)
    if g.n <= 1:
        return 0
    lower = sum(len(c) - 1 for c in twin_classes(g))
    for k in range(max(lower, 1), g.n):
        if any(is_resolving_set(g, s) for s in combinations(range(g.n), k)):
            return k
    return g.n - 1
