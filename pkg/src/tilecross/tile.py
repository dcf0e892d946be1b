"""Tiles, composition, powers, cyclic closure and the framed disk graph.

Layout conventions (relied upon by callers and tests):

* ``power(t, n)`` and ``cyc(t, n)``: copy ``i`` owns vertices
  ``[i*|V|, (i+1)*|V|)``.  Edge ids run copy 0 internal, copy 1 internal,
  seam 0->1, copy 2 internal, seam 1->2, ..., and ``cyc`` appends the closing
  seam (n-1)->0 last.
* ``frame(t, n)``: vertices are v_1..v_k, then the copies of T, then
  v'_1..v'_k, then the apex.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence

from .multigraph import MultiGraph

INTERNAL = "internal"
EXTERNAL = "external"


@dataclass(frozen=True)
class EdgeLabel:
    kind: str
    copy: int

    @property
    def internal(self) -> bool:
        return self.kind == INTERNAL


@dataclass(frozen=True)
class Tile:
    graph: MultiGraph
    A: tuple[int, ...]
    B: tuple[int, ...]

    def __post_init__(self) -> None:
        A = tuple(int(a) for a in self.A)
        B = tuple(int(b) for b in self.B)
        if len(A) != len(B):
            raise ValueError(f"boundary sequences differ in length: |A|={len(A)}, |B|={len(B)}")
        n = self.graph.vertex_count
        for name, seq in (("A", A), ("B", B)):
            for i, x in enumerate(seq):
                if not 0 <= x < n:
                    raise ValueError(f"{name}[{i}] = {x} is not a vertex")
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "B", B)

    @classmethod
    def build(cls, vertex_count: int, edges: Sequence[Sequence[int]], A: Sequence[int], B: Sequence[int]) -> "Tile":
        return cls(MultiGraph.from_edges(vertex_count, edges), tuple(A), tuple(B))

    @property
    def width(self) -> int:
        return len(self.A)


def width(t: Tile) -> int:
    return t.width


def compose(t1: Tile, t2: Tile) -> Tile:
    """T1 T2: disjoint union plus k bridging edges B1(i)-A2(i), bridges last."""
    if t1.width != t2.width:
        raise ValueError(f"cannot compose tiles of width {t1.width} and {t2.width}")
    off = t1.graph.vertex_count
    edges = list(t1.graph.edges)
    edges += [(u + off, v + off) for u, v in t2.graph.edges]
    edges += [(b, a + off) for b, a in zip(t1.B, t2.A)]
    g = MultiGraph(off + t2.graph.vertex_count, tuple(edges))
    return Tile(g, t1.A, tuple(b + off for b in t2.B))


def power(t: Tile, n: int) -> Tile:
    if n < 1:
        raise ValueError("power needs n >= 1")
    result = t
    for _ in range(n - 1):
        result = compose(result, t)
    return result


@dataclass(frozen=True)
class CycGraph:
    """cyc(T^n) with per-edge internal/external labels."""

    graph: MultiGraph
    n: int
    tile_vertices: int
    labels: tuple[EdgeLabel, ...]

    def copy_of_vertex(self, v: int) -> int:
        return v // self.tile_vertices

    def label_kinds(self) -> list[str]:
        return [lab.kind for lab in self.labels]

    def copies_of_edge(self, e: int) -> tuple[int, ...]:
        u, v = self.graph.edges[e]
        return tuple(sorted({self.copy_of_vertex(u), self.copy_of_vertex(v)}))


def cyc(t: Tile, n: int = 1) -> CycGraph:
    """cyc(T^n): n copies joined in a cycle by the k seam edges B(i) -> A(i)."""
    if n < 1:
        raise ValueError("cyc needs n >= 1")
    nv = t.graph.vertex_count
    edges: list[tuple[int, int]] = []
    labels: list[EdgeLabel] = []

    def internal(c: int) -> None:
        off = c * nv
        edges.extend((u + off, v + off) for u, v in t.graph.edges)
        labels.extend(EdgeLabel(INTERNAL, c) for _ in t.graph.edges)

    def seam(c: int) -> None:
        nxt = (c + 1) % n
        edges.extend((b + c * nv, a + nxt * nv) for b, a in zip(t.B, t.A))
        labels.extend(EdgeLabel(EXTERNAL, c) for _ in t.A)

    internal(0)
    for c in range(1, n):
        internal(c)
        seam(c - 1)
    seam(n - 1)
    return CycGraph(MultiGraph(n * nv, tuple(edges)), n, nv, tuple(labels))


def cyc_of(t: Tile) -> MultiGraph:
    """cyc(T) as a bare graph: G plus the closing edges."""
    return t.graph.with_edges(zip(t.B, t.A))


@dataclass(frozen=True)
class FramedGraph:
    """Z T^n Z' wrapped in an uncrossable wheel that pins the disk boundary."""

    graph: MultiGraph
    boundary_order: tuple[int, ...]
    apex: int
    frame_edges: frozenset[int]
    core_edges: tuple[int, ...]
    labels: tuple[EdgeLabel | None, ...]

    def core_label_kinds(self) -> list[str | None]:
        return [lab.kind if lab is not None else None for lab in self.labels]


def frame(t: Tile, n: int = 1) -> FramedGraph:
    if n < 1:
        raise ValueError("frame needs n >= 1")
    k = t.width
    c = cyc(t, n)
    tn = power(t, n)
    nv = t.graph.vertex_count
    core_v = n * nv
    # shift the copies of T past v_1..v_k
    edges = [(u + k, v + k) for u, v in tn.graph.edges]
    labels: list[EdgeLabel | None] = list(c.labels[: tn.graph.edge_count])
    left = list(range(k))
    right = [k + core_v + i for i in range(k)]
    apex = 2 * k + core_v
    edges += [(left[i], tn.A[i] + k) for i in range(k)]
    labels += [EdgeLabel(EXTERNAL, -1)] * k
    edges += [(tn.B[i] + k, right[i]) for i in range(k)]
    labels += [EdgeLabel(EXTERNAL, n - 1)] * k
    core = tuple(range(len(edges)))
    order = tuple(left + right[::-1])
    rim = [(order[i], order[(i + 1) % len(order)]) for i in range(len(order))] if k else []
    spokes = [(apex, x) for x in order]
    frame_ids = frozenset(range(len(edges), len(edges) + len(rim) + len(spokes)))
    edges += rim + spokes
    labels += [None] * (len(rim) + len(spokes))
    g = MultiGraph(apex + 1, tuple(edges))
    return FramedGraph(g, order, apex, frame_ids, core, tuple(labels))


def big_m(t: Tile) -> int:
    """M(T) = C(|E(G)| + 2k, 2)."""
    return comb(t.graph.edge_count + 2 * t.width, 2)


def cyclic_tile_distance(c: CycGraph, e1: int, e2: int) -> int | None:
    """Fewest copies of T that a path from an end of e1 to an end of e2 meets.

    Copies holding the path's end vertices are counted.  Because consecutive
    vertices of a path lie in equal or cyclically adjacent copies, the copies a
    path meets form an arc; so it suffices to find the shortest arc whose
    induced subgraph connects the two edges.  None if no path exists.
    """
    g = c.graph
    for e in (e1, e2):
        if not 0 <= e < g.edge_count:
            raise ValueError(f"edge {e} not in graph")
    n = c.n
    sources = set(g.edges[e1])
    targets = set(g.edges[e2])
    for length in range(1, n + 1):
        for start in range(n):
            arc = {(start + i) % n for i in range(length)}
            if _connected_within(c, arc, sources, targets):
                return length
        if length == n:
            break
    return None


def _connected_within(c: CycGraph, arc: set[int], sources: set[int], targets: set[int]) -> bool:
    g = c.graph
    inside = lambda v: c.copy_of_vertex(v) in arc  # noqa: E731
    frontier = [v for v in sources if inside(v)]
    seen = set(frontier)
    for x in frontier:
        if x in targets:
            return True
        for e in g.incidence[x]:
            y = g.other_end(e, x)
            if y not in seen and inside(y):
                seen.add(y)
                frontier.append(y)
    return False
