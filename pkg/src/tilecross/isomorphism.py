"""Multigraph isomorphism for small graphs (test harness scale, tens of vertices).

Colour refinement prunes candidate images; a backtracking search then extends
a partial map vertex by vertex, comparing edge multiplicities (loops included)
against everything already mapped.
"""

from __future__ import annotations

from collections import Counter

from .multigraph import MultiGraph, components


def _multiplicity_table(g: MultiGraph) -> list[dict[int, int]]:
    table: list[dict[int, int]] = [dict() for _ in g.vertices()]
    for u, v in g.edges:
        table[u][v] = table[u].get(v, 0) + 1
        if u != v:
            table[v][u] = table[v].get(u, 0) + 1
    return table


def _refine(tables: list[list[dict[int, int]]]) -> list[list[int]]:
    """Joint colour refinement so colours are comparable across graphs."""
    colours = [[(len(t[v]), t[v].get(v, 0), sum(t[v].values())) for v in range(len(t))] for t in tables]
    palette: dict = {}
    cols = [[palette.setdefault(c, len(palette)) for c in cs] for cs in colours]
    classes = len(palette)
    while True:
        palette = {}
        new = []
        for t, cs in zip(tables, cols):
            sig = [
                (cs[v], tuple(sorted((cs[w], k) for w, k in t[v].items() if w != v)))
                for v in range(len(t))
            ]
            new.append([palette.setdefault(s, len(palette)) for s in sig])
        cols = new
        if len(palette) == classes:
            return cols
        classes = len(palette)


def are_isomorphic(g1: MultiGraph, g2: MultiGraph) -> bool:
    if g1.vertex_count != g2.vertex_count or g1.edge_count != g2.edge_count:
        return False
    if sorted(Counter(g1.multiplicities()).values()) != sorted(Counter(g2.multiplicities()).values()):
        return False
    if sorted(len(c) for c in components(g1)) != sorted(len(c) for c in components(g2)):
        return False
    t1, t2 = _multiplicity_table(g1), _multiplicity_table(g2)
    c1, c2 = _refine([t1, t2])
    if Counter(c1) != Counter(c2):
        return False
    n = g1.vertex_count
    if n == 0:
        return True

    # order: rare colours first, then grow along edges so every vertex after
    # the first in its component has a mapped neighbour
    freq = Counter(c1)
    order: list[int] = []
    placed = [False] * n
    for start in sorted(range(n), key=lambda v: (freq[c1[v]], v)):
        if placed[start]:
            continue
        placed[start] = True
        queue = [start]
        for x in queue:
            order.append(x)
            for y in sorted(t1[x], key=lambda y: (freq[c1[y]], y)):
                if not placed[y]:
                    placed[y] = True
                    queue.append(y)
    by_colour: dict[int, list[int]] = {}
    for w in range(n):
        by_colour.setdefault(c2[w], []).append(w)

    fwd: dict[int, int] = {}
    used = [False] * n

    def candidates(v: int):
        for u in t1[v]:
            if u in fwd:
                return [w for w in t2[fwd[u]] if c2[w] == c1[v]]
        return by_colour[c1[v]]

    def consistent(v: int, w: int) -> bool:
        if t1[v].get(v, 0) != t2[w].get(w, 0):
            return False
        for u, k in t1[v].items():
            if u != v and u in fwd and t2[w].get(fwd[u], 0) != k:
                return False
        # mapped neighbours of w must come from neighbours of v
        mapped_nbrs = sum(1 for u in t1[v] if u != v and u in fwd)
        return mapped_nbrs == sum(1 for x in t2[w] if x != w and used[x])

    def extend(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        for w in candidates(v):
            if used[w] or not consistent(v, w):
                continue
            fwd[v] = w
            used[w] = True
            if extend(i + 1):
                return True
            del fwd[v]
            used[w] = False
        return False

    return extend(0)
