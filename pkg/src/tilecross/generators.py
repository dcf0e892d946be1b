"""Standard graphs and the named test tiles."""

from __future__ import annotations

import random
from itertools import combinations

from .multigraph import MultiGraph
from .tile import Tile


def complete(n: int) -> MultiGraph:
    return MultiGraph(n, tuple(combinations(range(n), 2)))


def complete_bipartite(a: int, b: int) -> MultiGraph:
    return MultiGraph(a + b, tuple((i, a + j) for i in range(a) for j in range(b)))


def cycle(n: int) -> MultiGraph:
    if n < 3:
        raise ValueError("a simple cycle needs at least 3 vertices")
    return MultiGraph(n, tuple((i, (i + 1) % n) for i in range(n)))


def petersen() -> MultiGraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return MultiGraph(10, tuple(outer + inner + spokes))


def random_multigraph(seed: int, vertices: int = 8, edges: int = 14, max_parallel: int = 3) -> MultiGraph:
    """Loopless multigraph with at most ``max_parallel`` copies of any edge."""
    rng = random.Random(seed)
    count: dict[tuple[int, int], int] = {}
    out: list[tuple[int, int]] = []
    while len(out) < edges:
        u, v = rng.sample(range(vertices), 2)
        key = (min(u, v), max(u, v))
        if count.get(key, 0) < max_parallel:
            count[key] = count.get(key, 0) + 1
            out.append(key)
    return MultiGraph(vertices, tuple(out))


def single_vertex_tile() -> Tile:
    return Tile.build(1, [], (0,), (0,))


def edge_tile() -> Tile:
    return Tile.build(2, [(0, 1)], (0,), (1,))


def vertical_path_tile(length: int = 3) -> Tile:
    ids = tuple(range(length))
    return Tile.build(length, [(i, i + 1) for i in range(length - 1)], ids, ids)


def crossing_tile() -> Tile:
    """u1=0, u2=1, v1=2, v2=3 with edges u1-v2 and u2-v1."""
    return Tile.build(4, [(0, 3), (1, 2)], (0, 1), (2, 3))


def swap_tile() -> Tile:
    return Tile.build(2, [], (0, 1), (1, 0))


def random_tile(seed: int = 4, vertices: int = 4, edges: int = 4, width: int = 2) -> Tile:
    rng = random.Random(seed)
    es = [(rng.randrange(vertices), rng.randrange(vertices)) for _ in range(edges)]
    A = [rng.randrange(vertices) for _ in range(width)]
    B = [rng.randrange(vertices) for _ in range(width)]
    return Tile.build(vertices, es, A, B)


def named_tiles() -> dict[str, Tile]:
    return {
        "single-vertex": single_vertex_tile(),
        "edge": edge_tile(),
        "vertical-path-3": vertical_path_tile(3),
        "crossing-x": crossing_tile(),
        "swap": swap_tile(),
        "random-4-2": random_tile(),
    }
