"""Finite multigraphs with loops and parallel edges.

Edges are identified by their position in ``MultiGraph.edges``.  Higher layers
(tiles, planarizations) refer to edges only by id, so parallel edges stay
distinguishable.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence


class SearchBudgetExceeded(RuntimeError):
    """An exact search hit its node or time budget before reaching a verdict.

    This is an "unknown" outcome; callers must not read it as a negative answer.
    """


class InfeasibleError(ValueError):
    pass


@dataclass(frozen=True)
class MultiGraph:
    vertex_count: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        if isinstance(self.vertex_count, bool) or not isinstance(self.vertex_count, int):
            raise TypeError("vertex_count must be an int")
        if self.vertex_count < 0:
            raise ValueError("vertex_count must be nonnegative")
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        for eid, (u, v) in enumerate(edges):
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise ValueError(f"edge {eid} = ({u}, {v}) has an endpoint outside [0, {self.vertex_count})")
        object.__setattr__(self, "edges", edges)

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[Sequence[int]]) -> "MultiGraph":
        return cls(vertex_count, tuple((u, v) for u, v in edges))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.vertex_count)

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """Edge ids incident with each vertex, ascending.  A loop is listed once."""
        inc: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for eid, (u, v) in enumerate(self.edges):
            inc[u].append(eid)
            if v != u:
                inc[v].append(eid)
        return tuple(tuple(x) for x in inc)

    def degree(self, v: int) -> int:
        # loops count twice
        return sum(2 if self.edges[e][0] == self.edges[e][1] else 1 for e in self.incidence[v])

    def other_end(self, eid: int, v: int) -> int:
        u, w = self.edges[eid]
        if v == u:
            return w
        if v == w:
            return u
        raise ValueError(f"vertex {v} is not an endpoint of edge {eid}")

    def is_loop(self, eid: int) -> bool:
        u, v = self.edges[eid]
        return u == v

    def adjacent_edges(self, e: int, f: int) -> bool:
        """True if edges e and f share at least one endpoint."""
        return bool(set(self.edges[e]) & set(self.edges[f]))

    def multiplicities(self) -> Counter:
        """Counter over unordered endpoint pairs ``(min, max)``."""
        return Counter((min(u, v), max(u, v)) for u, v in self.edges)

    def simple_edges(self) -> list[tuple[int, int]]:
        """Loops deleted and parallel classes collapsed, sorted."""
        return sorted({(min(u, v), max(u, v)) for u, v in self.edges if u != v})

    def without_edges(self, removed: Iterable[int]) -> "MultiGraph":
        gone = set(removed)
        return MultiGraph(self.vertex_count, tuple(e for i, e in enumerate(self.edges) if i not in gone))

    def with_edges(self, extra: Iterable[Sequence[int]]) -> "MultiGraph":
        return MultiGraph(self.vertex_count, self.edges + tuple((u, v) for u, v in extra))

    def induced(self, keep: Sequence[int]) -> tuple["MultiGraph", dict[int, int]]:
        """Subgraph induced by ``keep`` with vertices relabelled in the given order."""
        index = {v: i for i, v in enumerate(keep)}
        sub = tuple((index[u], index[v]) for u, v in self.edges if u in index and v in index)
        return MultiGraph(len(keep), sub), index

    @staticmethod
    def disjoint_union(graphs: Iterable["MultiGraph"]) -> "MultiGraph":
        offset = 0
        edges: list[tuple[int, int]] = []
        for g in graphs:
            edges.extend((u + offset, v + offset) for u, v in g.edges)
            offset += g.vertex_count
        return MultiGraph(offset, tuple(edges))


def components(g: MultiGraph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by smallest vertex."""
    seen = [False] * g.vertex_count
    blocks: list[list[int]] = []
    for root in g.vertices():
        if seen[root]:
            continue
        seen[root] = True
        stack = [root]
        block = []
        while stack:
            x = stack.pop()
            block.append(x)
            for e in g.incidence[x]:
                y = g.other_end(e, x)
                if not seen[y]:
                    seen[y] = True
                    stack.append(y)
        blocks.append(sorted(block))
    return blocks


def is_connected(g: MultiGraph) -> bool:
    return len(components(g)) <= 1


def girth(g: MultiGraph) -> int | None:
    """Girth of the underlying simple graph, or None if it is a forest."""
    adj: list[set[int]] = [set() for _ in g.vertices()]
    for u, v in g.simple_edges():
        adj[u].add(v)
        adj[v].add(u)
    best: int | None = None
    for root in g.vertices():
        dist = {root: 0}
        parent = {root: -1}
        queue = [root]
        for x in queue:
            for y in adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y:
                    cycle = dist[x] + dist[y] + 1
                    if best is None or cycle < best:
                        best = cycle
    return best


@dataclass(frozen=True)
class Walk:
    """Alternating vertex/edge sequence ``v0 e0 v1 e1 ... vk``."""

    vertices: tuple[int, ...]
    edges: tuple[int, ...] = ()

    @property
    def start(self) -> int:
        return self.vertices[0]

    @property
    def end(self) -> int:
        return self.vertices[-1]

    def __len__(self) -> int:
        return len(self.edges)

    def is_consistent(self, g: MultiGraph) -> bool:
        if len(self.vertices) != len(self.edges) + 1:
            return False
        for i, e in enumerate(self.edges):
            if not 0 <= e < g.edge_count:
                return False
            if {self.vertices[i], self.vertices[i + 1]} != set(g.edges[e]):
                return False
        return True


@dataclass(frozen=True)
class PathSystem:
    paths: tuple[Walk, ...] = field(default_factory=tuple)

    def __len__(self) -> int:
        return len(self.paths)

    def __iter__(self):
        return iter(self.paths)

    def __getitem__(self, i: int) -> Walk:
        return self.paths[i]

    def is_valid(self, g: MultiGraph) -> bool:
        """Incidence-consistent and pairwise edge-disjoint."""
        used: set[int] = set()
        for p in self.paths:
            if not p.is_consistent(g):
                return False
            if used & set(p.edges) or len(set(p.edges)) != len(p.edges):
                return False
            used |= set(p.edges)
        return True


@dataclass(frozen=True)
class EdgeCut:
    size: int
    edges: tuple[int, ...]
    side_s: frozenset[int]
