"""Left-right planarity test (de Fraysseix-Rosenstiehl, as formulated by Brandes).

Loops and parallel edges never affect planarity, so every entry point first
reduces its input to a simple graph.  ``planar_embedding`` additionally runs the
embedding phase and returns a rotation system, which ``is_plane_rotation``
checks independently through Euler's formula.
"""

from __future__ import annotations

import sys
from typing import Iterable, Sequence

from .multigraph import MultiGraph


class _Interval:
    __slots__ = ("low", "high")

    def __init__(self, low=None, high=None):
        self.low = low
        self.high = high

    def empty(self) -> bool:
        return self.low is None and self.high is None

    def copy(self) -> "_Interval":
        return _Interval(self.low, self.high)


class _ConflictPair:
    __slots__ = ("left", "right")

    def __init__(self, left=None, right=None):
        self.left = left if left is not None else _Interval()
        self.right = right if right is not None else _Interval()

    def swap(self) -> None:
        self.left, self.right = self.right, self.left


class _LRState:
    def __init__(self, n: int, adj: list[list[int]]):
        self.n = n
        self.adj = adj
        self.height = [-1] * n
        self.parent_edge: list[tuple[int, int] | None] = [None] * n
        self.lowpt: dict[tuple[int, int], int] = {}
        self.lowpt2: dict[tuple[int, int], int] = {}
        self.nesting: dict[tuple[int, int], int] = {}
        self.out: list[list[int]] = [[] for _ in range(n)]
        self.ordered: list[list[int]] = [[] for _ in range(n)]
        self.roots: list[int] = []
        self.S: list[_ConflictPair] = []
        self.stack_bottom: dict = {}
        self.lowpt_edge: dict = {}
        self.ref: dict = {}
        self.side: dict = {}

    # orientation -----------------------------------------------------------

    def orient(self) -> None:
        oriented: set[tuple[int, int]] = set()
        for v in range(self.n):
            if self.height[v] == -1:
                self.height[v] = 0
                self.roots.append(v)
                self._dfs1(v, oriented)

    def _dfs1(self, v: int, oriented: set) -> None:
        e = self.parent_edge[v]
        height, lowpt, lowpt2 = self.height, self.lowpt, self.lowpt2
        for w in self.adj[v]:
            key = (v, w) if v < w else (w, v)
            if key in oriented:
                continue
            oriented.add(key)
            vw = (v, w)
            self.out[v].append(w)
            lowpt[vw] = lowpt2[vw] = height[v]
            if height[w] == -1:
                self.parent_edge[w] = vw
                height[w] = height[v] + 1
                self._dfs1(w, oriented)
            else:
                lowpt[vw] = height[w]
            self.nesting[vw] = 2 * lowpt[vw] + (1 if lowpt2[vw] < height[v] else 0)
            if e is not None:
                if lowpt[vw] < lowpt[e]:
                    lowpt2[e] = min(lowpt[e], lowpt2[vw])
                    lowpt[e] = lowpt[vw]
                elif lowpt[vw] > lowpt[e]:
                    lowpt2[e] = min(lowpt2[e], lowpt[vw])
                else:
                    lowpt2[e] = min(lowpt2[e], lowpt2[vw])

    # testing ---------------------------------------------------------------

    def test(self) -> bool:
        for v in range(self.n):
            self.ordered[v] = sorted(self.out[v], key=lambda w, v=v: self.nesting[(v, w)])
        for v in self.roots:
            if not self._dfs2(v):
                return False
        return True

    def _conflicting(self, iv: _Interval, b) -> bool:
        return not iv.empty() and self.lowpt[iv.high] > self.lowpt[b]

    def _lowest(self, p: _ConflictPair) -> int:
        if p.left.empty():
            return self.lowpt[p.right.low]
        if p.right.empty():
            return self.lowpt[p.left.low]
        return min(self.lowpt[p.left.low], self.lowpt[p.right.low])

    def _dfs2(self, v: int) -> bool:
        S = self.S
        e = self.parent_edge[v]
        first = self.ordered[v][0] if self.ordered[v] else None
        for w in self.ordered[v]:
            ei = (v, w)
            self.stack_bottom[ei] = S[-1] if S else None
            if ei == self.parent_edge[w]:
                if not self._dfs2(w):
                    return False
            else:
                self.lowpt_edge[ei] = ei
                S.append(_ConflictPair(right=_Interval(ei, ei)))
            if self.lowpt[ei] < self.height[v]:
                if w == first:
                    self.lowpt_edge[e] = self.lowpt_edge[ei]
                elif not self._add_constraints(ei, e):
                    return False
        if e is not None:
            self._remove_back_edges(e)
        return True

    def _add_constraints(self, ei, e) -> bool:
        S, ref, lowpt = self.S, self.ref, self.lowpt
        P = _ConflictPair()
        while True:
            Q = S.pop()
            if not Q.left.empty():
                Q.swap()
            if not Q.left.empty():
                return False
            if lowpt[Q.right.low] > lowpt[e]:
                if P.right.empty():
                    P.right = Q.right.copy()
                else:
                    ref[P.right.low] = Q.right.high
                P.right.low = Q.right.low
            else:
                ref[Q.right.low] = self.lowpt_edge[e]
            if (S[-1] if S else None) is self.stack_bottom[ei]:
                break
        while S and (self._conflicting(S[-1].left, ei) or self._conflicting(S[-1].right, ei)):
            Q = S.pop()
            if self._conflicting(Q.right, ei):
                Q.swap()
            if self._conflicting(Q.right, ei):
                return False
            ref[P.right.low] = Q.right.high
            if Q.right.low is not None:
                P.right.low = Q.right.low
            if P.left.empty():
                P.left = Q.left.copy()
            else:
                ref[P.left.low] = Q.left.high
            P.left.low = Q.left.low
        if not (P.left.empty() and P.right.empty()):
            S.append(P)
        return True

    def _remove_back_edges(self, e) -> None:
        S, ref, side = self.S, self.ref, self.side
        u = e[0]
        while S and self._lowest(S[-1]) == self.height[u]:
            P = S.pop()
            if P.left.low is not None:
                side[P.left.low] = -1
        if S:
            P = S.pop()
            while P.left.high is not None and P.left.high[1] == u:
                P.left.high = ref.get(P.left.high)
            if P.left.high is None and P.left.low is not None:
                ref[P.left.low] = P.right.low
                side[P.left.low] = -1
                P.left.low = None
            while P.right.high is not None and P.right.high[1] == u:
                P.right.high = ref.get(P.right.high)
            if P.right.high is None and P.right.low is not None:
                ref[P.right.low] = P.left.low
                side[P.right.low] = -1
                P.right.low = None
            S.append(P)
        if self.lowpt[e] < self.height[u]:
            hl = S[-1].left.high
            hr = S[-1].right.high
            if hl is not None and (hr is None or self.lowpt[hl] > self.lowpt[hr]):
                ref[e] = hl
            else:
                ref[e] = hr

    # embedding -------------------------------------------------------------

    def _sign(self, e) -> int:
        chain = []
        while self.ref.get(e) is not None:
            chain.append(e)
            e = self.ref[e]
        s = self.side.get(e, 1)
        for x in reversed(chain):
            s *= self.side.get(x, 1)
            self.side[x] = s
            self.ref[x] = None
        return s

    def embed(self) -> dict[int, list[int]]:
        for v in range(self.n):
            for w in self.out[v]:
                self.nesting[(v, w)] *= self._sign((v, w))
        rot: dict[int, list[int]] = {v: [] for v in range(self.n)}
        for v in range(self.n):
            self.ordered[v] = sorted(self.out[v], key=lambda w, v=v: self.nesting[(v, w)])
            rot[v].extend(self.ordered[v])
        left_ref: dict[int, int] = {}
        right_ref: dict[int, int] = {}

        def dfs3(v: int) -> None:
            for w in self.ordered[v]:
                ei = (v, w)
                if ei == self.parent_edge[w]:
                    rot[w].insert(0, v)
                    left_ref[v] = right_ref[v] = w
                    dfs3(w)
                elif self.side.get(ei, 1) == 1:
                    lst = rot[w]
                    lst.insert(lst.index(right_ref[w]) + 1, v)
                else:
                    lst = rot[w]
                    lst.insert(lst.index(left_ref[w]), v)
                    left_ref[w] = v

        for v in self.roots:
            dfs3(v)
        return rot


def _simple_adjacency(n: int, edges: Iterable[Sequence[int]]) -> tuple[list[list[int]], int]:
    seen: set[tuple[int, int]] = set()
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        if u == v:
            continue
        key = (u, v) if u < v else (v, u)
        if key in seen:
            continue
        seen.add(key)
        adj[u].append(v)
        adj[v].append(u)
    return adj, len(seen)


def _ensure_recursion(n: int) -> None:
    need = 4 * n + 200
    if sys.getrecursionlimit() < need:
        sys.setrecursionlimit(need)


def is_planar_edges(n: int, edges: Iterable[Sequence[int]]) -> bool:
    """Planarity of the graph on ``range(n)`` with the given (multi)edge list."""
    adj, m = _simple_adjacency(n, edges)
    if n >= 3 and m > 3 * n - 6:
        return False
    if m <= 8 or n <= 4:
        # K5 and K3,3 both have at least 9 edges and 5 vertices
        return True
    _ensure_recursion(n)
    state = _LRState(n, adj)
    state.orient()
    return state.test()


def is_planar(g: MultiGraph) -> bool:
    return is_planar_edges(g.vertex_count, g.edges)


def planar_embedding(g: MultiGraph) -> dict[int, list[int]] | None:
    """Clockwise rotation system of the simplified graph, or None if non-planar."""
    adj, _ = _simple_adjacency(g.vertex_count, g.edges)
    _ensure_recursion(g.vertex_count)
    state = _LRState(g.vertex_count, adj)
    state.orient()
    if not state.test():
        return None
    return state.embed()


def is_plane_rotation(n: int, edges: Iterable[Sequence[int]], rotation: dict[int, list[int]]) -> bool:
    """Check a rotation system of the simplified graph has genus zero."""
    adj, m = _simple_adjacency(n, edges)
    for v in range(n):
        if sorted(rotation.get(v, [])) != sorted(adj[v]):
            return False
    succ = {}
    for v, nbrs in rotation.items():
        for i, w in enumerate(nbrs):
            succ[(v, w)] = nbrs[(i + 1) % len(nbrs)]
    faces = 0
    seen: set[tuple[int, int]] = set()
    for v in range(n):
        for w in adj[v]:
            if (v, w) in seen:
                continue
            faces += 1
            dart = (v, w)
            while dart not in seen:
                seen.add(dart)
                a, b = dart
                dart = (b, succ[(b, a)])
    nontrivial = [v for v in range(n) if adj[v]]
    comps = 0
    mark = set()
    for r in nontrivial:
        if r in mark:
            continue
        comps += 1
        stack = [r]
        mark.add(r)
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in mark:
                    mark.add(y)
                    stack.append(y)
    return len(nontrivial) - m + faces == 2 * comps


def kuratowski_subgraph(n: int, edges: Sequence[Sequence[int]], delete_first: Sequence[int] = ()) -> list[int] | None:
    """Indices of an edge-minimal non-planar subgraph, or None if planar.

    Minimal non-planar graphs are Kuratowski subdivisions.  Edges listed in
    ``delete_first`` are tried for deletion before the rest, so the result
    tends to keep the others.
    """
    if is_planar_edges(n, edges):
        return None
    first = list(dict.fromkeys(delete_first))
    seen = set(first)
    order = first + [i for i in range(len(edges)) if i not in seen]
    keep = set(range(len(edges)))
    # loops and repeated parallel edges never matter
    simple_seen: set[tuple[int, int]] = set()
    for i in sorted(keep, key=lambda i: (i in seen, i)):
        u, v = edges[i]
        key = (u, v) if u < v else (v, u)
        if u == v or key in simple_seen:
            keep.discard(i)
        else:
            simple_seen.add(key)
    order = [i for i in order if i in keep]

    def planar_without(block: list[int]) -> bool:
        gone = set(block)
        return is_planar_edges(n, [edges[j] for j in keep if j not in gone])

    # drop whole blocks while the rest stays non-planar; split blocks that cannot go
    pending = [order]
    while pending:
        block = pending.pop()
        if not block:
            continue
        if not planar_without(block):
            keep.difference_update(block)
        elif len(block) > 1:
            mid = len(block) // 2
            pending.append(block[mid:])
            pending.append(block[:mid])
    return sorted(keep)
