"""Mutually maximally distant pairs, the boundary, and the strong resolving graph."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DisconnectedGraphError
from .graph import Graph, bits


def _require_connected(g: Graph) -> None:
    if not g.is_connected():
        raise DisconnectedGraphError("strong resolving graphs need a connected graph")


def is_maximally_distant(g: Graph, u: int, v: int) -> bool:
    """No neighbour of ``u`` is farther from ``v`` than ``u`` is."""
    _require_connected(g)
    if u == v:
        raise ValueError("maximal distance is defined for distinct vertices")
    dv = g.dist[v]
    duv = dv[u]
    return all(dv[w] <= duv for w in bits(g.adj[u]))


def _md_rows(g: Graph) -> list[int]:
    # row u: bitmask of v such that u is maximally distant from v
    n = g.n
    dist = g.dist
    rows = []
    for u in range(n):
        nbrs = list(bits(g.adj[u]))
        row = 0
        for v in range(n):
            if v == u:
                continue
            dv = dist[v]
            duv = dv[u]
            if all(dv[w] <= duv for w in nbrs):
                row |= 1 << v
        rows.append(row)
    return rows


def mmd_adjacency(g: Graph) -> list[int]:
    """Row ``u``: the vertices mutually maximally distant from ``u``."""
    _require_connected(g)
    rows = _md_rows(g)
    return [sum(1 << v for v in bits(rows[u]) if rows[v] >> u & 1) for u in range(g.n)]


def boundary(g: Graph) -> tuple[int, ...]:
    return tuple(u for u, row in enumerate(mmd_adjacency(g)) if row)


@dataclass(frozen=True)
class SrGraph:
    base: Graph
    boundary: tuple[int, ...]  # base indices; srg vertex i is base vertex boundary[i]
    srg: Graph
    mmd_pairs: tuple[tuple[int, int], ...]  # base indices, u < v

    def to_base(self, srg_vertices) -> tuple[int, ...]:
        return tuple(sorted(self.boundary[i] for i in srg_vertices))


def build_srg(g: Graph) -> SrGraph:
    mmd = mmd_adjacency(g)
    bd = tuple(u for u, row in enumerate(mmd) if row)
    pairs = tuple((u, v) for u in bd for v in bits(mmd[u]) if u < v)
    pos = {u: i for i, u in enumerate(bd)}
    srg = Graph.from_edges([g.labels[u] for u in bd], [(pos[u], pos[v]) for u, v in pairs])
    return SrGraph(base=g, boundary=bd, srg=srg, mmd_pairs=pairs)
