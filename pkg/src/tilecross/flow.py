"""Unit-capacity max-flow, minimum edge cuts and edge-disjoint path systems.

Augmenting paths are found by BFS that scans incident edges in ascending id
order, so cuts and paths are reproducible.
"""

from __future__ import annotations

from typing import Sequence

from .multigraph import (
    EdgeCut,
    InfeasibleError,
    MultiGraph,
    PathSystem,
    SearchBudgetExceeded,
    Walk,
)

DEFAULT_PATH_BUDGET = 2_000_000


def _augment_once(g: MultiGraph, flow: list[int], s: int, t: int) -> tuple[bool, dict[int, tuple[int, int] | None]]:
    parent: dict[int, tuple[int, int] | None] = {s: None}
    queue = [s]
    for x in queue:
        for e in g.incidence[x]:
            u, v = g.edges[e]
            if u == v:
                continue
            if x == u:
                y, residual = v, 1 - flow[e]
            else:
                y, residual = u, 1 + flow[e]
            if residual > 0 and y not in parent:
                parent[y] = (x, e)
                if y == t:
                    break
                queue.append(y)
        if t in parent:
            break
    if t not in parent:
        return False, parent
    y = t
    while parent[y] is not None:
        x, e = parent[y]
        flow[e] += 1 if g.edges[e][0] == x else -1
        y = x
    return True, parent


def max_flow(g: MultiGraph, s: int, t: int, limit: int | None = None) -> tuple[int, list[int], frozenset[int]]:
    """Return (value, per-edge flow in {-1,0,1}, residual-reachable set of s).

    Flow +1 on edge (u, v) means one unit from u to v.  With ``limit`` the
    augmentation stops early and the reachable set is not meaningful.
    """
    _check_terminals(g, s, t)
    flow = [0] * g.edge_count
    value = 0
    while limit is None or value < limit:
        found, parent = _augment_once(g, flow, s, t)
        if not found:
            return value, flow, frozenset(parent)
        value += 1
    return value, flow, frozenset()


def _check_terminals(g: MultiGraph, s: int, t: int) -> None:
    for x in (s, t):
        if not 0 <= x < g.vertex_count:
            raise ValueError(f"vertex {x} not in graph")
    if s == t:
        raise ValueError("source and sink must differ")


def min_edge_cut(g: MultiGraph, s: int, t: int) -> EdgeCut:
    """Minimum s-t edge cut; the s side is the residual-reachable set (the cut nearest s)."""
    value, _, side = max_flow(g, s, t)
    cut = tuple(e for e, (u, v) in enumerate(g.edges) if (u in side) != (v in side))
    assert len(cut) == value
    return EdgeCut(value, cut, side)


def decompose_flow(g: MultiGraph, flow: Sequence[int], s: int, t: int, count: int) -> PathSystem:
    """Peel ``count`` s-t paths off a flow, cutting out any cycles met on the way."""
    out: dict[int, list[tuple[int, int]]] = {}
    for e, f in enumerate(flow):
        if f == 0:
            continue
        u, v = g.edges[e]
        tail, head = (u, v) if f > 0 else (v, u)
        out.setdefault(tail, []).append((e, head))
    cursor = {x: 0 for x in out}
    paths = []
    for _ in range(count):
        verts, edges = [s], []
        pos = {s: 0}
        x = s
        while x != t:
            arcs = out.get(x, [])
            if cursor.get(x, 0) >= len(arcs):
                raise InfeasibleError("flow does not carry enough s-t paths")
            e, y = arcs[cursor[x]]
            cursor[x] += 1
            if y in pos:
                i = pos[y]
                for w in verts[i + 1:]:
                    del pos[w]
                del verts[i + 1:]
                del edges[i:]
            else:
                pos[y] = len(verts)
                verts.append(y)
                edges.append(e)
            x = y
        paths.append(Walk(tuple(verts), tuple(edges)))
    return PathSystem(tuple(paths))


def edge_disjoint_paths(g: MultiGraph, s: int, t: int, count: int) -> PathSystem:
    """``count`` pairwise edge-disjoint s-t paths via augmenting paths and flow decomposition."""
    if count < 0:
        raise ValueError("count must be nonnegative")
    value, flow, _ = max_flow(g, s, t, limit=count)
    if value < count:
        raise InfeasibleError(f"only {value} edge-disjoint paths exist between {s} and {t}, {count} requested")
    return decompose_flow(g, flow, s, t, count)


def paired_edge_disjoint_paths(
    g: MultiGraph,
    pairs: Sequence[tuple[int, int]],
    budget: int = DEFAULT_PATH_BUDGET,
) -> PathSystem | None:
    """Edge-disjoint paths joining each pair, or None if no such system exists.

    Exact backtracking over simple paths: the most constrained pair is routed
    first, its candidate paths are tried shortest first, and branches are cut
    when a remaining pair is disconnected or some vertex lacks free edges for
    the paths that must start there.  Raises SearchBudgetExceeded after
    ``budget`` node expansions.
    """
    for s, t in pairs:
        for x in (s, t):
            if not 0 <= x < g.vertex_count:
                raise ValueError(f"vertex {x} not in graph")
    used = [False] * g.edge_count
    chosen: dict[int, Walk] = {}
    expansions = 0

    def tick() -> None:
        nonlocal expansions
        expansions += 1
        if expansions > budget:
            raise SearchBudgetExceeded(f"paired path search exceeded {budget} expansions")

    def distances(s: int) -> dict[int, int]:
        dist = {s: 0}
        queue = [s]
        for x in queue:
            for e in g.incidence[x]:
                if used[e]:
                    continue
                y = g.other_end(e, x)
                if y not in dist:
                    dist[y] = dist[x] + 1
                    queue.append(y)
        return dist

    def free_degree(x: int) -> int:
        return sum(1 for e in g.incidence[x] if not used[e] and not g.is_loop(e))

    def prune(todo: list[int]) -> bool:
        demand: dict[int, int] = {}
        for i in todo:
            s, t = pairs[i]
            if s != t:
                demand[s] = demand.get(s, 0) + 1
                demand[t] = demand.get(t, 0) + 1
        return any(free_degree(x) < d for x, d in demand.items())

    def paths_of_length(s: int, t: int, length: int, dist_t: dict[int, int]):
        verts = [s]
        edges: list[int] = []
        on_path = {s}

        def walk(x: int):
            tick()
            left = length - len(edges)
            if x == t:
                if left == 0:
                    yield Walk(tuple(verts), tuple(edges))
                return
            if dist_t.get(x, left + 1) > left:
                return
            for e in g.incidence[x]:
                if used[e]:
                    continue
                y = g.other_end(e, x)
                if y in on_path:
                    continue
                verts.append(y)
                edges.append(e)
                on_path.add(y)
                yield from walk(y)
                on_path.discard(verts.pop())
                edges.pop()

        yield from walk(s)

    def candidate_paths(s: int, t: int):
        if s == t:
            yield Walk((s,))
            return
        dist_t = distances(t)
        if s not in dist_t:
            return
        free = sum(1 for e in range(g.edge_count) if not used[e])
        for length in range(dist_t[s], min(free, g.vertex_count - 1) + 1):
            yield from paths_of_length(s, t, length, dist_t)

    def solve(todo: list[int]) -> bool:
        if not todo:
            return True
        tick()
        if prune(todo):
            return False
        best, best_key = None, None
        for i in todo:
            s, t = pairs[i]
            if s == t:
                key = (-1, 0, i)
            else:
                d = distances(s).get(t)
                if d is None:
                    return False
                key = (min(free_degree(s), free_degree(t)), d, i)
            if best_key is None or key < best_key:
                best, best_key = i, key
        rest = [i for i in todo if i != best]
        s, t = pairs[best]
        for walk in candidate_paths(s, t):
            for e in walk.edges:
                used[e] = True
            chosen[best] = walk
            if solve(rest):
                return True
            del chosen[best]
            for e in walk.edges:
                used[e] = False
        return False

    if solve(list(range(len(pairs)))):
        return PathSystem(tuple(chosen[i] for i in range(len(pairs))))
    return None


def closed_min_cut(
    g: MultiGraph,
    s: int,
    t: int,
    implications: Sequence[tuple[int, int]],
) -> EdgeCut:
    """Minimum s-t edge cut whose s side is closed under ``implications``.

    A pair (x, y) demands that y lies on the s side whenever x does; it is
    modelled as an uncuttable arc x -> y.  The returned side is the one nearest
    s, so with no binding implication this equals ``min_edge_cut``.
    """
    _check_terminals(g, s, t)
    # arcs as [head, residual]; arc i ^ 1 is the reverse of arc i
    arcs: list[list[int]] = []
    out: list[list[int]] = [[] for _ in range(g.vertex_count)]

    def arc(x: int, y: int, cap: int, back: int) -> None:
        out[x].append(len(arcs))
        arcs.append([y, cap])
        out[y].append(len(arcs))
        arcs.append([x, back])

    for u, v in g.edges:
        if u != v:
            arc(u, v, 1, 1)
    infinite = g.edge_count + 1
    for x, y in implications:
        if x != y:
            arc(x, y, infinite, 0)
    value = 0
    while True:
        parent: dict[int, int | None] = {s: None}
        queue = [s]
        for x in queue:
            for i in out[x]:
                y, cap = arcs[i]
                if cap > 0 and y not in parent:
                    parent[y] = i
                    queue.append(y)
            if t in parent:
                break
        if t not in parent:
            break
        y = t
        while parent[y] is not None:
            i = parent[y]
            arcs[i][1] -= 1
            arcs[i ^ 1][1] += 1
            y = arcs[i ^ 1][0]
        value += 1
        if value >= infinite:
            raise InfeasibleError("every s-t cut violates the closure constraints")
    side = frozenset(parent)
    cut = tuple(e for e, (u, v) in enumerate(g.edges) if (u in side) != (v in side))
    assert len(cut) == value
    return EdgeCut(value, cut, side)
