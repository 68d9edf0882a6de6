"""Immutable simple graphs on bitmask adjacency, with all-pairs distances.

Vertex identity is the index ``0..n-1``; labels are carried along as
metadata only. Row ``i`` of the adjacency is an ``int`` whose bit ``j`` is
set iff ``i ~ j``, so neighbourhood intersections are single ``&`` ops.
"""

from __future__ import annotations

import json
import math
from collections import deque
from functools import cached_property
from typing import Any, Hashable, Iterable, Iterator, Sequence

from .errors import EmptyGraphError, GraphFormatError

INF = math.inf  # distance between vertices in different components


def bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    def __init__(self, labels: Sequence[Hashable], adj: Sequence[int]):
        if len(labels) != len(adj):
            raise ValueError("labels and adjacency rows differ in length")
        n = len(adj)
        full = (1 << n) - 1
        for i, row in enumerate(adj):
            if row >> i & 1:
                raise ValueError(f"self-loop at vertex {i}")
            if row & ~full:
                raise ValueError(f"row {i} references vertices beyond {n - 1}")
            for j in bits(row):
                if not adj[j] >> i & 1:
                    raise ValueError(f"adjacency not symmetric at ({i}, {j})")
        self.labels = tuple(labels)
        self.adj = tuple(adj)

    # construction helpers

    @classmethod
    def from_edges(cls, n_or_labels, edges: Iterable[tuple[int, int]]) -> "Graph":
        labels = list(range(n_or_labels)) if isinstance(n_or_labels, int) else list(n_or_labels)
        adj = [0] * len(labels)
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(labels, adj)

    @classmethod
    def from_predicate(cls, labels: Sequence[Hashable], pred) -> "Graph":
        """Edge ``{i, j}`` iff ``pred(labels[i], labels[j])`` (checked for i < j)."""
        n = len(labels)
        adj = [0] * n
        for i in range(n):
            for j in range(i + 1, n):
                if pred(labels[i], labels[j]):
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
        return cls(labels, adj)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls.from_edges(n, ((i, j) for i in range(n) for j in range(i + 1, n)))

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_edges(n, ((i, i + 1) for i in range(n - 1)))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        if n < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def complete_multipartite(cls, *parts: int) -> "Graph":
        owner = [p for p, size in enumerate(parts) for _ in range(size)]
        n = len(owner)
        return cls.from_edges(n, ((i, j) for i in range(n) for j in range(i + 1, n) if owner[i] != owner[j]))

    # basic queries

    def __len__(self) -> int:
        return len(self.adj)

    @property
    def n(self) -> int:
        return len(self.adj)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count()})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.labels == other.labels and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.labels, self.adj))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in bits(self.adj[i] >> (i + 1) << (i + 1))]

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def is_complete(self) -> bool:
        n = self.n
        return self.edge_count() == n * (n - 1) // 2

    def index(self, label: Hashable) -> int:
        try:
            return self._label_index[label]
        except KeyError:
            raise KeyError(f"unknown vertex {label!r}") from None

    @cached_property
    def _label_index(self) -> dict:
        return {lab: i for i, lab in enumerate(self.labels)}

    def labeled_edges(self) -> frozenset:
        """Edges as unordered label pairs; basis of labelled-graph equality."""
        lab = self.labels
        return frozenset(frozenset((lab[i], lab[j])) for i, j in self.edges())

    def same_labeled_graph(self, other: "Graph") -> bool:
        """Equal as labelled graphs, regardless of vertex order."""
        return set(self.labels) == set(other.labels) and self.labeled_edges() == other.labeled_edges()

    # distances

    def bfs(self, source: int) -> list[float]:
        dist: list[float] = [INF] * self.n
        dist[source] = 0
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for w in bits(self.adj[u]):
                if dist[w] == INF:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return dist

    @cached_property
    def dist(self) -> tuple[tuple[float, ...], ...]:
        return tuple(tuple(self.bfs(s)) for s in range(self.n))

    def is_connected(self) -> bool:
        return self.n == 0 or INF not in self.dist[0]

    def neighborhoods(self, v: int) -> tuple[frozenset, frozenset]:
        if not 0 <= v < self.n:
            raise KeyError(f"unknown vertex {v}")
        open_ = frozenset(bits(self.adj[v]))
        return open_, open_ | {v}

    def closed_mask(self, v: int) -> int:
        return self.adj[v] | 1 << v

    # derived graphs

    def induced_subgraph(self, vertices: Iterable[int]) -> "Graph":
        """Subgraph on ``vertices``; original index order is kept."""
        keep = sorted(set(vertices))
        for v in keep:
            if not 0 <= v < self.n:
                raise KeyError(f"unknown vertex {v}")
        pos = {v: i for i, v in enumerate(keep)}
        adj = [0] * len(keep)
        for v, i in pos.items():
            for w in bits(self.adj[v]):
                if w in pos:
                    adj[i] |= 1 << pos[w]
        return Graph([self.labels[v] for v in keep], adj)

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        return Graph(self.labels, [full & ~row & ~(1 << i) for i, row in enumerate(self.adj)])

    def components(self) -> list[list[int]]:
        """Connected components, each sorted, ordered by smallest vertex."""
        seen = 0
        out = []
        for s in range(self.n):
            if seen >> s & 1:
                continue
            comp = 1 << s
            frontier = comp
            while frontier:
                nxt = 0
                for v in bits(frontier):
                    nxt |= self.adj[v]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            out.append(list(bits(comp)))
        return out

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        mask = 0
        for v in vs:
            mask |= 1 << v
        return all((self.adj[v] | 1 << v) & mask == mask for v in vs)

    def is_independent(self, vertices: Iterable[int]) -> bool:
        mask = 0
        vs = list(vertices)
        for v in vs:
            mask |= 1 << v
        return all(not self.adj[v] & mask for v in vs)


def distances(g: Graph):
    return g.dist


def diameter(g: Graph) -> float:
    """Largest distance; ``INF`` if disconnected."""
    if g.n == 0:
        raise EmptyGraphError("diameter of the empty graph is undefined")
    return max(max(row) for row in g.dist)


def neighborhoods(g: Graph, v: int) -> tuple[frozenset, frozenset]:
    return g.neighborhoods(v)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    return g.induced_subgraph(vertices)


def complement(g: Graph) -> Graph:
    return g.complement()


def format_distance(d: float) -> Any:
    return "inf" if d == INF else int(d)


# --- serialization --------------------------------------------------------

def _label_text(label: Hashable, fmt=None) -> str:
    return fmt(label) if fmt is not None else str(label)


def to_dot(g: Graph, label_fmt=None) -> str:
    lines = ["graph {"]
    for i, lab in enumerate(g.labels):
        text = _label_text(lab, label_fmt).replace("\\", "\\\\").replace('"', '\\"')
        lines.append(f'  {i} [label="{text}"];')
    for i, j in g.edges():
        lines.append(f"  {i} -- {j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(g: Graph, label_fmt=None) -> str:
    doc = {
        "vertices": [_label_text(lab, label_fmt) for lab in g.labels],
        "edges": [list(e) for e in g.edges()],
    }
    return json.dumps(doc, separators=(",", ":"))


def from_json(text: str) -> Graph:
    try:
        doc = json.loads(text)
        labels = list(doc["vertices"])
        edges = [(int(u), int(v)) for u, v in doc["edges"]]
    except (ValueError, KeyError, TypeError) as exc:
        raise GraphFormatError(f"not a graph JSON document: {exc}") from None
    n = len(labels)
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise GraphFormatError(f"bad edge [{u}, {v}] for {n} vertices")
    if len(set(map(str, labels))) != n:
        raise GraphFormatError("duplicate vertex labels")
    return Graph.from_edges(labels, edges)


def _g6_size(n: int) -> bytes:
    if n < 63:
        return bytes([n + 63])
    if n < 258048:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])


def to_graph6(g: Graph) -> bytes:
    """Standard graph6 (no ``>>graph6<<`` header, no newline)."""
    n = g.n
    out = bytearray(_g6_size(n))
    acc = nbits = 0
    for j in range(1, n):
        for i in range(j):
            acc = acc << 1 | (g.adj[i] >> j & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out)


def from_graph6(data) -> Graph:
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    if data.startswith(b">>graph6<<"):
        data = data[len(b">>graph6<<"):]
    if not data or any(not 63 <= c <= 126 for c in data):
        raise GraphFormatError("graph6 bytes must lie in 63..126")
    vals = [c - 63 for c in data]
    if vals[0] < 63:
        n, body = vals[0], vals[1:]
    elif len(vals) >= 4 and vals[1] < 63:
        n = vals[1] << 12 | vals[2] << 6 | vals[3]
        body = vals[4:]
    elif len(vals) >= 8:
        n = 0
        for v in vals[2:8]:
            n = n << 6 | v
        body = vals[8:]
    else:
        raise GraphFormatError("truncated graph6 size field")
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise GraphFormatError(f"graph6 body has {len(body)} bytes, expected {need} for n={n}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


EXPORT_FORMATS = ("dot", "graph6", "json")


def export(g: Graph, fmt: str, label_fmt=None) -> bytes:
    if fmt == "dot":
        return to_dot(g, label_fmt).encode("utf-8")
    if fmt == "graph6":
        return to_graph6(g) + b"\n"
    if fmt == "json":
        return (to_json(g, label_fmt) + "\n").encode("utf-8")
    raise ValueError(f"unsupported export format {fmt!r}; choose from {', '.join(EXPORT_FORMATS)}")


def load_graph(path: str) -> Graph:
    """Read a graph6 or JSON graph file (format chosen by content)."""
    try:
        with open(path, "rb") as fh:
            raw = fh.read()
    except OSError as exc:
        raise GraphFormatError(f"cannot read {path}: {exc.strerror}") from None
    text = raw.strip()
    if text.startswith(b"{"):
        return from_json(text.decode("utf-8"))
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if len(lines) != 1:
        raise GraphFormatError(f"{path}: expected a single graph6 line, got {len(lines)}")
    return from_graph6(lines[0])
