"""Structural reductions: weak linking, the linking power, component splitting
and the decomposition of c(T) into connected linked pieces.

Every reduction preserves cyc(T^n) up to isomorphism for all n; the test
suite checks this with the isomorphism oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

from .flow import DEFAULT_PATH_BUDGET, closed_min_cut, decompose_flow, max_flow, paired_edge_disjoint_paths
from .multigraph import MultiGraph, PathSystem, Walk, components
from .tile import Tile, compose, cyc_of, power


def _apex_graph(t: Tile) -> tuple[MultiGraph, int, int]:
    """G plus apex a joined to every A entry and apex b joined to every B entry.

    Edge ids: G's edges, then a-A(j) for j = 0..k-1, then B(j)-b.
    """
    n = t.graph.vertex_count
    a, b = n, n + 1
    edges = t.graph.edges + tuple((a, x) for x in t.A) + tuple((y, b) for y in t.B)
    return MultiGraph(n + 2, edges), a, b


@dataclass(frozen=True)
class CutStep:
    width_before: int
    cut_edges: tuple[int, ...]  # ids in the apex graph of the tile at that step
    u: tuple[int, ...]
    v: tuple[int, ...]


@dataclass(frozen=True)
class WeakLinkResult:
    tile: Tile
    permutation: tuple[int, ...]  # path i runs from A[i] to B[permutation[i]]
    paths: PathSystem
    steps: tuple[CutStep, ...]


def permutation_cycles(perm: Sequence[int]) -> list[list[int]]:
    seen = [False] * len(perm)
    cycles = []
    for i in range(len(perm)):
        if seen[i]:
            continue
        cyc = []
        j = i
        while not seen[j]:
            seen[j] = True
            cyc.append(j)
            j = perm[j]
        cycles.append(cyc)
    return cycles


def cycle_notation(perm: Sequence[int]) -> str:
    """1-based cycle notation, fixed points included, e.g. ``(1 2)(3)``."""
    if not perm:
        return "()"
    return "".join("(" + " ".join(str(i + 1) for i in c) + ")" for c in permutation_cycles(perm))


class NotWeaklyLinkable(ValueError):
    """No cut transformation shrinks the width, yet the tile is not weakly linked.

    Raised only when every minimum apex cut would place some B(j) on a's side
    and A(j) on b's side: the seam edge B(j)-A(j) would then skip a copy of
    the new tile, so no width-reducing tile reproduces cyc(T^n).
    """


def _cut_transform(t: Tile) -> tuple[Tile, CutStep] | None:
    gp, a, b = _apex_graph(t)
    k, m = t.width, t.graph.edge_count
    # B(j) on a's side forces A(j) there too, else seam j crosses two new seams
    cut = closed_min_cut(gp, a, b, list(zip(t.B, t.A)))
    if cut.size >= k:
        if not is_weakly_linked(t):
            raise NotWeaklyLinkable(
                f"tile of width {k} is not weakly linked, but every apex cut below width "
                "would make a seam edge skip a copy"
            )
        return None
    side = cut.side_s
    us, vs, drop = [], [], []
    for s in cut.edges:
        if s < m:
            x, y = gp.edges[s]
            u, v = (x, y) if x in side else (y, x)
            drop.append(s)
        else:
            j = s - m if s < m + k else s - m - k
            u, v = t.B[j], t.A[j]
            drop.append(m + j)  # closing edge j of cyc(T)
        us.append(u)
        vs.append(v)
    assert len(set(drop)) == len(drop)
    closed = cyc_of(t).without_edges(drop)
    step = CutStep(k, cut.edges, tuple(us), tuple(vs))
    return Tile(closed, tuple(vs), tuple(us)), step


def weakly_link(t: Tile) -> WeakLinkResult:
    """Shrink the width along minimum apex cuts until A and B are k-edge-connected.

    Raises NotWeaklyLinkable for the tiles where no such shrinking exists.
    """
    steps = []
    current = t
    while True:
        out = _cut_transform(current)
        if out is None:
            break
        current, step = out
        steps.append(step)
    k, m = current.width, current.graph.edge_count
    if k == 0:
        return WeakLinkResult(current, (), PathSystem(()), tuple(steps))
    gp, a, b = _apex_graph(current)
    value, flow, _ = max_flow(gp, a, b, limit=k)
    assert value == k
    system = decompose_flow(gp, flow, a, b, k)
    perm = [0] * k
    inner: list[Walk | None] = [None] * k
    for walk in system:
        i = walk.edges[0] - m
        j = walk.edges[-1] - m - k
        perm[i] = j
        inner[i] = Walk(walk.vertices[1:-1], walk.edges[1:-1])
    return WeakLinkResult(current, tuple(perm), PathSystem(tuple(inner)), tuple(steps))


def linking_power(w: WeakLinkResult | Sequence[int]) -> int:
    perm = w.permutation if isinstance(w, WeakLinkResult) else w
    return lcm(*(len(c) for c in permutation_cycles(perm))) if perm else 1


def is_weakly_linked(t: Tile) -> bool:
    if t.width == 0:
        return True
    gp, a, b = _apex_graph(t)
    value, _, _ = max_flow(gp, a, b, limit=t.width)
    return value >= t.width


def is_linked(t: Tile, budget: int = DEFAULT_PATH_BUDGET) -> bool:
    """Raises SearchBudgetExceeded when the exact search cannot decide."""
    return paired_edge_disjoint_paths(t.graph, list(zip(t.A, t.B)), budget=budget) is not None


def _subtile(t: Tile, block: Sequence[int]) -> Tile:
    g, index = t.graph.induced(sorted(block))
    return Tile(
        g,
        tuple(index[x] for x in t.A if x in index),
        tuple(index[x] for x in t.B if x in index),
    )


def split_components(t: Tile, check: bool = True) -> list[Tile]:
    """One subtile per component of a linked tile, boundary order preserved."""
    if check and not is_linked(t):
        raise ValueError(
            "split_components needs a linked tile: components of a non-linked tile "
            "may hold different numbers of A and B entries"
        )
    return [_subtile(t, comp) for comp in components(t.graph)]


@dataclass(frozen=True)
class CycleRep:
    tile: Tile
    length: int
    blocks: tuple[int, ...]


@dataclass(frozen=True)
class Decomposition:
    weak: WeakLinkResult
    m: int
    subtiles: tuple[Tile, ...]
    blocks: tuple[Tile, ...]
    block_successor: tuple[int | None, ...]
    cycles: tuple[CycleRep, ...]

    @property
    def r(self) -> int:
        return len(self.subtiles)

    def combine(self, limits: Sequence[Fraction | int]) -> Fraction:
        """c(T) = (c(T_1) + ... + c(T_r)) / m from the subtile limits."""
        if len(limits) != self.r:
            raise ValueError(f"expected {self.r} subtile values, got {len(limits)}")
        return Fraction(sum(Fraction(x) for x in limits), self.m)


def _blocks(t: Tile) -> tuple[list[list[int]], list[int | None]]:
    """Coarsest-needed grouping of the components of a weakly linked tile.

    Groups components so the B positions of each group are exactly the A
    positions of a single group; that group is its successor.
    """
    comps = components(t.graph)
    where = {}
    for i, comp in enumerate(comps):
        for v in comp:
            where[v] = i
    parent = list(range(len(comps)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    k = t.width
    changed = True
    while changed:
        changed = False
        pa: dict[int, list[int]] = {}
        pb: dict[int, list[int]] = {}
        for x in range(k):
            pa.setdefault(find(where[t.A[x]]), []).append(x)
            pb.setdefault(find(where[t.B[x]]), []).append(x)
        for positions, seq in list(((p, t.A) for p in pb.values())) + list(((p, t.B) for p in pa.values())):
            roots = {find(where[seq[x]]) for x in positions}
            first = min(roots)
            for r in roots:
                if r != first:
                    parent[r] = first
                    changed = True
    groups: dict[int, list[int]] = {}
    for i, comp in enumerate(comps):
        groups.setdefault(find(i), []).extend(comp)
    blocks = sorted((sorted(vs) for vs in groups.values()), key=lambda vs: vs[0])
    block_of = {v: i for i, vs in enumerate(blocks) for v in vs}
    succ: list[int | None] = [None] * len(blocks)
    for x in range(k):
        succ[block_of[t.B[x]]] = block_of[t.A[x]]
    return blocks, succ


def limit_decomposition(t: Tile) -> Decomposition:
    weak = weakly_link(t)
    t0 = weak.tile
    m = linking_power(weak)
    subtiles = tuple(split_components(power(t0, m), check=False))
    block_sets, succ = _blocks(t0)
    blocks = tuple(_subtile(t0, vs) for vs in block_sets)
    seen = [False] * len(blocks)
    cycles = []
    for i in range(len(blocks)):
        if seen[i]:
            continue
        chain = [i]
        seen[i] = True
        j = succ[i]
        while j is not None and j != i:
            chain.append(j)
            seen[j] = True
            j = succ[j]
        rep = blocks[chain[0]]
        for j in chain[1:]:
            rep = compose(rep, blocks[j])
        cycles.append(CycleRep(rep, len(chain), tuple(chain)))
    return Decomposition(weak, m, subtiles, blocks, tuple(succ), tuple(cycles))
