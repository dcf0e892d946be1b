"""Exact crossing numbers at desk scale, with uncrossable edges and weights.

The solver works on partial planarizations.  A state fixes some crossings
together with their order along each edge; its planarization H replaces each
crossing by a degree-4 dummy vertex.  If H is non-planar, every drawing that
extends the state crosses two segments of any Kuratowski subgraph of H, so
branching on those segment pairs is complete.  Weight budgets are raised level
by level (iterative deepening); each level is searched exhaustively so the
reported witness is canonical: the lexicographically least sorted crossing
list among optima, then the least crossing order.

Only good drawings are searched: no edge crosses itself or an adjacent edge,
and two edges cross at most once.  Loops are never crossed.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .io import number_json
from .multigraph import MultiGraph, girth
from .planarity import is_planar, is_planar_edges, kuratowski_subgraph
from .tile import EXTERNAL, INTERNAL, Tile, cyc, frame

Number = int | Fraction

OPTIMAL = "optimal"
CEILING = "ceiling"
BUDGET = "budget"


@dataclass(frozen=True)
class CrossingWeights:
    """Crossing weights 1+2β (internal-internal), 1+β (mixed), 1 (external-external)."""

    beta: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        beta = Fraction(self.beta)
        if beta < 0:
            raise ValueError(f"beta must be nonnegative, got {beta}")
        object.__setattr__(self, "beta", beta)

    def weight(self, kind1: str, kind2: str) -> Fraction:
        inner = (kind1 == INTERNAL) + (kind2 == INTERNAL)
        return 1 + inner * self.beta


@dataclass(frozen=True)
class SolveOptions:
    uncrossable: frozenset[int] = frozenset()
    weights: CrossingWeights | None = None
    labels: tuple[str, ...] | None = None  # per-edge INTERNAL/EXTERNAL; c_n and t_n fill these in
    max_k: Number | None = None
    budget: int | None = None  # search nodes
    time_limit: float | None = None  # seconds

    def __post_init__(self) -> None:
        object.__setattr__(self, "uncrossable", frozenset(int(e) for e in self.uncrossable))
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(self.labels))
            for lab in self.labels:
                if lab not in (INTERNAL, EXTERNAL):
                    raise ValueError(f"unknown edge label {lab!r}")
        if self.max_k is not None and self.max_k < 0:
            raise ValueError("max_k must be nonnegative")


@dataclass(frozen=True)
class Planarization:
    """Crossings as sorted edge-id pairs; ``order[e]`` lists e's crossings from its first endpoint."""

    base: MultiGraph
    crossings: tuple[tuple[int, int], ...]
    order: Mapping[int, tuple[int, ...]] = field(default_factory=dict)

    @cached_property
    def planarized(self) -> MultiGraph:
        n = self.base.vertex_count
        edges = []
        for e, (u, v) in enumerate(self.base.edges):
            chain = [u] + [n + i for i in self.order.get(e, ())] + [v]
            edges.extend(zip(chain, chain[1:]))
        return MultiGraph(n + len(self.crossings), tuple(edges))

    def to_json(self, value: Number) -> dict:
        return {
            "value": number_json(value),
            "crossings": [list(p) for p in self.crossings],
            "order": {str(e): list(self.order[e]) for e in sorted(self.order)},
        }

    @classmethod
    def from_json(cls, base: MultiGraph, data: Mapping) -> "Planarization":
        crossings = tuple(tuple(int(x) for x in p) for p in data["crossings"])
        order = {int(e): tuple(int(i) for i in idx) for e, idx in data.get("order", {}).items()}
        return cls(base, crossings, order)


@dataclass(frozen=True)
class CrossingResult:
    """``value`` is exact when status is OPTIMAL, else None.

    ``lower`` is a proven lower bound in every case.  With status CEILING the
    true value exceeds ``ceiling``.
    """

    status: str
    value: Number | None
    witness: Planarization | None
    lower: Number
    nodes: int
    ceiling: Number | None = None

    @property
    def optimal(self) -> bool:
        return self.status == OPTIMAL

    def verdict(self) -> str:
        if self.status == OPTIMAL:
            return str(number_json(self.value))
        if self.status == CEILING:
            return f"> {number_json(self.ceiling)}"
        return f">= {number_json(self.lower)}"


def crn_beta(p: Planarization, labels: Sequence[str], w: CrossingWeights) -> Fraction:
    if len(labels) < p.base.edge_count:
        raise ValueError(f"labels cover {len(labels)} of {p.base.edge_count} edges")
    return sum((w.weight(labels[e], labels[f]) for e, f in p.crossings), Fraction(0))


def euler_lower_bound(g: MultiGraph) -> int:
    """cr(G) >= |E| - g(|V|-2)/(g-2) on the simple graph, with girth g capped at 5."""
    simple = g.simple_edges()
    used = {x for e in simple for x in e}
    n, m = len(used), len(simple)
    gth = girth(MultiGraph(g.vertex_count, tuple(simple)))
    if n < 3 or gth is None:
        return 0
    gth = min(gth, 5)
    bound = Fraction(m) - Fraction(gth * (n - 2), gth - 2)
    return max(0, -((-bound.numerator) // bound.denominator))


class _Abort(Exception):
    pass


class _Search:
    def __init__(self, g: MultiGraph, opts: SolveOptions):
        self.g = g
        self.n = g.vertex_count
        self.opts = opts
        m = g.edge_count
        self.crossable = [not g.is_loop(e) and e not in opts.uncrossable for e in range(m)]
        self.ends = [set(uv) for uv in g.edges]
        if opts.weights is not None:
            labels = opts.labels
            if len(labels) < m:
                raise ValueError(f"labels cover {len(labels)} of {m} edges")
            self.pair_weight = lambda e, f: opts.weights.weight(labels[e], labels[f])
        else:
            self.pair_weight = lambda e, f: 1
        self.nodes = 0
        self.deadline = None if opts.time_limit is None else time.monotonic() + opts.time_limit

    def tick(self) -> None:
        self.nodes += 1
        if self.opts.budget is not None and self.nodes > self.opts.budget:
            raise _Abort
        if self.deadline is not None and self.nodes % 64 == 0 and time.monotonic() > self.deadline:
            raise _Abort

    def can_cross(self, e: int, f: int) -> bool:
        return e != f and self.crossable[e] and self.crossable[f] and not (self.ends[e] & self.ends[f])

    def build(self, orders: dict[int, tuple[int, ...]]):
        """Planarization of a state: segment list with (edge, position) owners."""
        dummies: dict[tuple[int, int], int] = {}
        for e in sorted(orders):
            for f in orders[e]:
                key = (e, f) if e < f else (f, e)
                if key not in dummies:
                    dummies[key] = self.n + len(dummies)
        segs: list[tuple[int, int]] = []
        owner: list[tuple[int, int]] = []
        for e, (u, v) in enumerate(self.g.edges):
            chain = [u]
            for f in orders.get(e, ()):
                chain.append(dummies[(e, f) if e < f else (f, e)])
            chain.append(v)
            for i in range(len(chain) - 1):
                segs.append((chain[i], chain[i + 1]))
                owner.append((e, i))
        return self.n + len(dummies), segs, owner

    def run_level(self, cap: Number) -> list[tuple[tuple[tuple[int, int], ...], tuple, Number]]:
        """All minimal-state solutions of total weight <= cap."""
        self.found: dict = {}
        self.explored: dict = {}
        self.cap = cap
        self._dfs({}, frozenset(), Fraction(0) if self.opts.weights else 0)
        return list(self.found.values())

    def _dfs(self, orders: dict[int, tuple[int, ...]], crossed: frozenset, weight: Number) -> None:
        self.tick()
        key = tuple(sorted(orders.items()))
        room = self.cap - weight
        if self.explored.get(key, -1) >= room:
            return
        self.explored[key] = room
        nv, segs, owner = self.build(orders)
        if is_planar_edges(nv, segs):
            self.found[key] = (tuple(sorted(crossed)), key, weight)
            return
        if room < 1 or not self._euler_ok(nv, segs, room):
            return
        crossable_segs = [i for i, (e, _) in enumerate(owner) if self.crossable[e]]
        k_edges = kuratowski_subgraph(nv, segs, delete_first=crossable_segs)
        children = []
        for x, y in combinations(k_edges, 2):
            (e, i), (f, j) = owner[x], owner[y]
            if not self.can_cross(e, f):
                continue
            pair = (e, f) if e < f else (f, e)
            if pair in crossed:
                continue
            w = self.pair_weight(e, f)
            if w > room:
                continue
            children.append((pair, e, i, f, j, w))
        children.sort()
        for pair, e, i, f, j, w in children:
            new = dict(orders)
            oe = list(orders.get(e, ()))
            oe.insert(i, f)
            of = list(orders.get(f, ()))
            of.insert(j, e)
            new[e] = tuple(oe)
            new[f] = tuple(of)
            self._dfs(new, crossed | {pair}, weight + w)

    @staticmethod
    def _euler_ok(nv: int, segs: list[tuple[int, int]], room: Number) -> bool:
        simple = {(u, v) if u < v else (v, u) for u, v in segs if u != v}
        used = {x for e in simple for x in e}
        if len(used) < 3:
            return True
        return len(simple) - (3 * len(used) - 6) <= room


def _levels(lower: int, weights: CrossingWeights | None):
    """Achievable total weights >= lower, ascending (whole numbers when unweighted)."""
    if weights is None or weights.beta == 0:
        k = lower
        while True:
            yield k
            k += 1
    beta = weights.beta
    seen: set[Fraction] = set()
    pending: list[Fraction] = []
    count = lower
    # totals of `count` crossings lie in [count, count(1+2β)]; a total below
    # count+1 cannot come from any larger count, so it is safe to emit
    while True:
        for a in range(count + 1):
            for b in range(count - a + 1):
                total = a + b * (1 + beta) + (count - a - b) * (1 + 2 * beta)
                if total not in seen:
                    seen.add(total)
                    pending.append(total)
        pending.sort()
        while pending and pending[0] < count + 1:
            yield pending.pop(0)
        count += 1


def crossing_number(g: MultiGraph, opts: SolveOptions | None = None) -> CrossingResult:
    opts = opts or SolveOptions()
    for e in opts.uncrossable:
        if not 0 <= e < g.edge_count:
            raise ValueError(f"uncrossable edge {e} not in graph")
    if opts.weights is not None and (opts.labels is None or len(opts.labels) != g.edge_count):
        raise ValueError("weighted solving needs one internal/external label per edge")
    search = _Search(g, opts)
    levels = _levels(euler_lower_bound(g), opts.weights)
    level = next(levels)
    try:
        while opts.max_k is None or level <= opts.max_k:
            found = search.run_level(level)
            if found:
                pairs, key, weight = min(found, key=lambda s: (s[0], s[1]))
                return CrossingResult(OPTIMAL, weight, _witness(g, pairs, dict(key)), weight, search.nodes)
            level = next(levels)
    except _Abort:
        return CrossingResult(BUDGET, None, None, level, search.nodes)
    return CrossingResult(CEILING, None, None, level, search.nodes, opts.max_k)


def _witness(g: MultiGraph, pairs: tuple[tuple[int, int], ...], orders: dict[int, tuple[int, ...]]) -> Planarization:
    index = {p: i for i, p in enumerate(pairs)}
    order = {}
    for e in sorted(orders):
        if orders[e]:
            order[e] = tuple(index[(e, f) if e < f else (f, e)] for f in orders[e])
    return Planarization(g, pairs, order)


def verify_witness(g: MultiGraph, p: Planarization, opts: SolveOptions | None = None) -> bool:
    opts = opts or SolveOptions()
    if p.base != g:
        return False
    m = g.edge_count
    seen = set()
    incident: dict[int, list[int]] = {}
    for i, pair in enumerate(p.crossings):
        if len(pair) != 2:
            return False
        e, f = pair
        if not (0 <= e < m and 0 <= f < m) or e == f:
            return False
        if g.is_loop(e) or g.is_loop(f) or set(g.edges[e]) & set(g.edges[f]):
            return False
        if e in opts.uncrossable or f in opts.uncrossable:
            return False
        key = (min(e, f), max(e, f))
        if key in seen:
            return False
        seen.add(key)
        incident.setdefault(e, []).append(i)
        incident.setdefault(f, []).append(i)
    for e in set(incident) | set(p.order):
        if sorted(p.order.get(e, ())) != sorted(incident.get(e, [])):
            return False
    return is_planar(p.planarized)


def c_n(t: Tile, n: int, opts: SolveOptions | None = None) -> CrossingResult:
    """Crossing number of cyc(T^n); labels come from the copy structure when weighting."""
    c = cyc(t, n)
    opts = opts or SolveOptions()
    if opts.weights is not None and opts.labels is None:
        opts = _with(opts, labels=tuple(c.label_kinds()))
    return crossing_number(c.graph, opts)


def t_n(t: Tile, n: int, opts: SolveOptions | None = None) -> CrossingResult:
    """Fewest crossings of a tile drawing of T^n, via the uncrossable wheel frame."""
    fr = frame(t, n)
    opts = opts or SolveOptions()
    extra = {"uncrossable": opts.uncrossable | fr.frame_edges}
    if opts.weights is not None and opts.labels is None:
        extra["labels"] = tuple(k if k is not None else EXTERNAL for k in fr.core_label_kinds())
    return crossing_number(fr.graph, _with(opts, **extra))


def _with(opts: SolveOptions, **changes) -> SolveOptions:
    values = {name: getattr(opts, name) for name in SolveOptions.__dataclass_fields__}
    values.update(changes)
    return SolveOptions(**values)


def weighted_value(g: MultiGraph, p: Planarization, opts: SolveOptions) -> Number:
    if opts.weights is None:
        return len(p.crossings)
    return crn_beta(p, opts.labels, opts.weights)


def planarization_from_pairs(g: MultiGraph, pairs: Iterable[Sequence[int]]) -> Planarization | None:
    """Some planar order for a crossing set, or None (exhaustive over orders)."""
    from itertools import permutations, product

    pairs = tuple(sorted(tuple(sorted(p)) for p in pairs))
    per_edge: dict[int, list[int]] = {}
    for i, (e, f) in enumerate(pairs):
        per_edge.setdefault(e, []).append(i)
        per_edge.setdefault(f, []).append(i)
    edges = sorted(per_edge)
    for choice in product(*(permutations(per_edge[e]) for e in edges)):
        p = Planarization(g, pairs, dict(zip(edges, choice)))
        if is_planar(p.planarized):
            return p
    return None
