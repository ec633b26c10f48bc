"""Immutable simple undirected graphs with bitset adjacency rows.

Includes the idempotent-graph construction (vertices = ring elements,
x ~ y iff x + y is idempotent), structural queries, named pattern
constructors used by the recognizer oracles, and DOT/JSON export.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .rings import DEFAULT_MAX_RING_SIZE, FiniteRing, RingSizeError, idempotents


class Graph:
    """Simple undirected graph; adjacency row i is a Python-int bitset."""

    __slots__ = ("n", "rows", "labels")

    def __init__(self, n: int, rows: list[int], labels: tuple[str, ...] | None = None):
        self.n = n
        self.rows = tuple(rows)
        self.labels = labels
        for i, r in enumerate(self.rows):
            if r >> n:
                raise ValueError(f"row {i} has bits beyond vertex count")
            if r & (1 << i):
                raise ValueError(f"loop at vertex {i}")
        # symmetry check is O(n + m) bit tests; cheap at desk scale
        for i in range(n):
            ri = self.rows[i]
            while ri:
                j = (ri & -ri).bit_length() - 1
                if not (self.rows[j] >> i) & 1:
                    raise ValueError(f"asymmetric adjacency at ({i}, {j})")
                ri &= ri - 1

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def has_edge(self, i: int, j: int) -> bool:
        return bool((self.rows[i] >> j) & 1)

    def edges(self):
        for i in range(self.n):
            ri = self.rows[i] >> (i + 1)
            j = i + 1
            while ri:
                if ri & 1:
                    yield (i, j)
                ri >>= 1
                j += 1

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.edge_count()})"


def graph_from_edges(n: int, edges, labels: tuple[str, ...] | None = None) -> Graph:
    rows = [0] * n
    for i, j in edges:
        if i == j:
            raise ValueError(f"loop at vertex {i}")
        rows[i] |= 1 << j
        rows[j] |= 1 << i
    return Graph(n, rows, labels)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, [full & ~(1 << i) for i in range(n)])


def complete_bipartite_graph(m: int, n: int) -> Graph:
    left = (1 << m) - 1
    right = ((1 << (m + n)) - 1) ^ left
    rows = [right] * m + [left] * n
    return Graph(m + n, rows)


def path_graph(n: int) -> Graph:
    return graph_from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return graph_from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def two_k2() -> Graph:
    return graph_from_edges(4, [(0, 1), (2, 3)])


def empty_graph(n: int) -> Graph:
    return Graph(n, [0] * n)


def build_idempotent_graph(ring: FiniteRing, max_size: int = DEFAULT_MAX_RING_SIZE) -> Graph:
    """Vertices are ring elements in enumeration order; x ~ y iff x + y is
    idempotent (x != y; no loops even when 2x is idempotent)."""
    if ring.size > max_size:
        raise RingSizeError(
            f"ring has {ring.size} elements, exceeding the bound {max_size}"
        )
    ids = idempotents(ring)
    index = ring.index
    rows = [0] * ring.size
    for i, x in enumerate(ring.elements):
        nx = ring.neg(x)
        row = 0
        for e in ids:
            j = index[ring.add(e, nx)]
            if j != i:
                row |= 1 << j
        rows[i] = row
    labels = tuple(ring.label(x) for x in ring.elements)
    return Graph(ring.size, rows, labels)


def components(g: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by least vertex."""
    seen = 0
    out = []
    for v in range(g.n):
        if (seen >> v) & 1:
            continue
        comp = 1 << v
        frontier = comp
        while frontier:
            nxt = 0
            f = frontier
            while f:
                u = (f & -f).bit_length() - 1
                nxt |= g.rows[u]
                f &= f - 1
            frontier = nxt & ~comp
            comp |= nxt
        seen |= comp
        verts = []
        c = comp
        while c:
            verts.append((c & -c).bit_length() - 1)
            c &= c - 1
        out.append(verts)
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


@dataclass(frozen=True)
class ComponentRecord:
    size: int
    shape: str  # path | even-cycle | odd-cycle | complete | other


def component_census(g: Graph) -> list[ComponentRecord]:
    out = []
    for verts in components(g):
        mask = 0
        for v in verts:
            mask |= 1 << v
        degs = [(g.rows[v] & mask).bit_count() for v in verts]
        s = len(verts)
        m = sum(degs) // 2
        if m == s - 1 and max(degs, default=0) <= 2:
            shape = "path"
        elif m == s * (s - 1) // 2:
            shape = "complete"
        elif m == s and all(d == 2 for d in degs):
            shape = "even-cycle" if s % 2 == 0 else "odd-cycle"
        else:
            shape = "other"
        out.append(ComponentRecord(size=s, shape=shape))
    return out


def is_bipartite(g: Graph) -> bool:
    color = {}
    for start in range(g.n):
        if start in color:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            u = stack.pop()
            ri = g.rows[u]
            while ri:
                v = (ri & -ri).bit_length() - 1
                ri &= ri - 1
                if v not in color:
                    color[v] = color[u] ^ 1
                    stack.append(v)
                elif color[v] == color[u]:
                    return False
    return True


def is_path_graph(g: Graph) -> bool:
    return (
        g.n >= 1
        and is_connected(g)
        and g.edge_count() == g.n - 1
        and max((g.degree(v) for v in range(g.n)), default=0) <= 2
    )


def export_dot(g: Graph, labels: bool = False) -> str:
    """Deterministic DOT text: vertices in index order, each edge once."""
    def name(v: int) -> str:
        if labels and g.labels is not None:
            return g.labels[v]
        return str(v)

    lines = ["graph G {"]
    for v in range(g.n):
        lines.append(f'  "{name(v)}";')
    for i, j in g.edges():
        lines.append(f'  "{name(i)}" -- "{name(j)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_json(g: Graph) -> str:
    return json.dumps({"n": g.n, "edges": [[i, j] for i, j in g.edges()]})


def graph_from_json(text: str) -> Graph:
    data = json.loads(text)
    return graph_from_edges(data["n"], [tuple(e) for e in data["edges"]])


def induced_subgraph(g: Graph, verts) -> Graph:
    """Subgraph induced by the given vertices, relabeled 0..k-1 in sorted order."""
    vs = sorted(verts)
    pos = {v: i for i, v in enumerate(vs)}
    edges = [
        (pos[a], pos[b])
        for a in vs
        for b in vs
        if a < b and g.has_edge(a, b)
    ]
    return graph_from_edges(len(vs), edges)


def relabel(g: Graph, perm: list[int]) -> Graph:
    """New graph with vertex v renamed perm[v]."""
    edges = [(perm[i], perm[j]) for i, j in g.edges()]
    return graph_from_edges(g.n, edges)
