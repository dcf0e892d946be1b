from __future__ import annotations

from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

import frozen
import oracles
from tilecross.flow import (
    closed_min_cut,
    edge_disjoint_paths,
    max_flow,
    min_edge_cut,
    paired_edge_disjoint_paths,
)
from tilecross.generators import complete, complete_bipartite, cycle, petersen
from tilecross.isomorphism import are_isomorphic
from tilecross.multigraph import InfeasibleError, MultiGraph, SearchBudgetExceeded, components, girth, is_connected
from tilecross.planarity import is_planar, is_plane_rotation, kuratowski_subgraph, planar_embedding


@st.composite
def multigraphs(draw, max_vertices: int = 7, max_edges: int = 12, loops: bool = True):
    n = draw(st.integers(1, max_vertices))
    v = st.integers(0, n - 1)
    edges = draw(st.lists(st.tuples(v, v), max_size=max_edges))
    if not loops:
        edges = [(a, b) for a, b in edges if a != b]
    return MultiGraph(n, tuple(edges))


def separates(g: MultiGraph, removed, s: int, t: int) -> bool:
    h = g.without_edges(removed)
    return not any(s in c and t in c for c in map(set, components(h)))


# ------------------------------------------------------------------ structure


def test_edges_validated():
    with pytest.raises(ValueError):
        MultiGraph(2, ((0, 2),))
    with pytest.raises(ValueError):
        MultiGraph(-1)


def test_loops_and_parallels_kept_by_id():
    g = MultiGraph(2, ((0, 1), (0, 1), (1, 1)))
    assert g.edge_count == 3
    assert g.is_loop(2) and not g.is_loop(0)
    assert g.multiplicities()[(0, 1)] == 2
    assert g.degree(1) == 4


@pytest.mark.parametrize(
    "g, expected",
    [
        (MultiGraph(0), []),
        (MultiGraph(3, ((0, 1),)), [[0, 1], [2]]),
        (cycle(6), [[0, 1, 2, 3, 4, 5]]),
    ],
)
def test_components_examples(g, expected):
    assert sorted(sorted(c) for c in components(g)) == expected


@given(multigraphs())
def test_components_match_networkx(g):
    ours = sorted(sorted(c) for c in components(g))
    theirs = sorted(sorted(c) for c in nx.connected_components(oracles.nx_multigraph(g.vertex_count, g.edges)))
    assert ours == theirs
    assert is_connected(g) == (len(ours) <= 1)


def test_girth():
    assert girth(cycle(5)) == 5
    assert girth(petersen()) == 5
    assert girth(complete(4)) == 3
    assert girth(MultiGraph(3, ((0, 1), (1, 2)))) is None


# ------------------------------------------------------------------- cuts/flow


def test_min_cut_single_edge():
    cut = min_edge_cut(MultiGraph(2, ((0, 1),)), 0, 1)
    assert (cut.size, cut.edges) == (1, (0,))
    assert 0 in cut.side_s and 1 not in cut.side_s


def test_min_cut_k4():
    for s, t in combinations(range(4), 2):
        assert min_edge_cut(complete(4), s, t).size == frozen.MIN_CUT_K4


def test_min_cut_disconnected_terminals():
    assert min_edge_cut(MultiGraph(4, ((0, 1), (2, 3))), 0, 3).size == 0


def test_min_cut_rejects_equal_terminals():
    with pytest.raises(ValueError):
        min_edge_cut(complete(3), 1, 1)


@given(multigraphs(max_vertices=6, max_edges=10), st.data())
def test_min_cut_optimal_and_minimal(g, data):
    if g.vertex_count < 2:
        return
    s, t = data.draw(st.lists(st.integers(0, g.vertex_count - 1), min_size=2, max_size=2, unique=True))
    cut = min_edge_cut(g, s, t)
    assert cut.size == len(cut.edges) == oracles.brute_min_cut(g.vertex_count, g.edges, s, t)
    assert separates(g, cut.edges, s, t)
    for e in cut.edges:
        assert not separates(g, [x for x in cut.edges if x != e], s, t)


@given(multigraphs(max_vertices=6, max_edges=12), st.data())
def test_menger_duality(g, data):
    if g.vertex_count < 2:
        return
    s, t = data.draw(st.lists(st.integers(0, g.vertex_count - 1), min_size=2, max_size=2, unique=True))
    size = min_edge_cut(g, s, t).size
    paths = edge_disjoint_paths(g, s, t, size)
    assert len(paths) == size and paths.is_valid(g)
    assert all(p.start == s and p.end == t for p in paths)
    with pytest.raises(InfeasibleError):
        edge_disjoint_paths(g, s, t, size + 1)


def test_edge_disjoint_paths_examples():
    p = edge_disjoint_paths(MultiGraph(2, ((0, 1),)), 0, 1, 1)
    assert [w.edges for w in p] == [(0,)]
    p = edge_disjoint_paths(MultiGraph(2, ((0, 1), (0, 1))), 0, 1, 2)
    assert sorted(w.edges for w in p) == [(0,), (1,)]
    p = edge_disjoint_paths(complete(4), 0, 3, 3)
    assert p.is_valid(complete(4)) and len(p) == 3


def test_max_flow_values():
    value, flow, _ = max_flow(complete_bipartite(2, 3), 0, 1)
    assert value == 3
    assert all(f in (-1, 0, 1) for f in flow)


def test_paired_paths_examples():
    assert len(paired_edge_disjoint_paths(complete(3), [])) == 0
    path = MultiGraph(3, ((0, 1), (1, 2)))
    ps = paired_edge_disjoint_paths(path, [(0, 2)])
    assert ps[0].vertices == (0, 1, 2)
    star = MultiGraph(4, ((0, 1), (0, 2), (0, 3)))  # centre 0, leaves x=1, y=2, z=3
    ps = paired_edge_disjoint_paths(star, [(1, 2), (3, 0)])
    assert ps is not None and ps.is_valid(star)
    assert ps[0].vertices == (1, 0, 2) and ps[1].vertices == (3, 0)


def test_paired_paths_infeasible_is_none():
    # two pairs must share the single bridge
    g = MultiGraph(4, ((0, 1), (1, 2), (2, 3)))
    assert paired_edge_disjoint_paths(g, [(0, 3), (1, 2)]) is None


def test_paired_paths_budget():
    with pytest.raises(SearchBudgetExceeded):
        paired_edge_disjoint_paths(complete(6), [(0, 1), (2, 3), (4, 5), (0, 5)], budget=3)


@given(multigraphs(max_vertices=5, max_edges=7), st.data())
def test_paired_paths_match_exhaustive(g, data):
    v = st.integers(0, g.vertex_count - 1)
    pairs = data.draw(st.lists(st.tuples(v, v), max_size=3))
    ps = paired_edge_disjoint_paths(g, pairs)
    assert (ps is not None) == oracles.brute_paired_paths(g.vertex_count, g.edges, pairs)
    if ps is not None:
        assert ps.is_valid(g)
        assert [(p.start, p.end) for p in ps] == list(pairs)


@given(multigraphs(max_vertices=6, max_edges=10), st.data())
def test_closed_cut_is_least_closed_cut(g, data):
    if g.vertex_count < 2:
        return
    s, t = data.draw(st.lists(st.integers(0, g.vertex_count - 1), min_size=2, max_size=2, unique=True))
    others = [x for x in range(g.vertex_count) if x not in (s, t)]
    v = st.sampled_from(others) if others else st.nothing()
    imps = data.draw(st.lists(st.tuples(v, v), max_size=3)) if others else []
    cut = closed_min_cut(g, s, t, imps)
    side = cut.side_s
    assert s in side and t not in side
    assert all(y in side for x, y in imps if x in side)
    best = None
    for r in range(len(others) + 1):
        for extra in combinations(others, r):
            sd = {s, *extra}
            if all(y in sd for x, y in imps if x in sd):
                size = sum(1 for a, b in g.edges if (a in sd) != (b in sd))
                best = size if best is None else min(best, size)
    assert cut.size == best
    if not imps:
        assert cut == min_edge_cut(g, s, t)


# ------------------------------------------------------------------ planarity


@pytest.mark.parametrize(
    "g, planar",
    [(complete(4), True), (complete(5), False), (complete_bipartite(3, 3), False), (petersen(), False), (cycle(4), True)],
)
def test_planarity_examples(g, planar):
    assert is_planar(g) is planar


def test_loops_and_parallels_do_not_affect_planarity():
    g = MultiGraph(4, complete(4).edges + ((0, 0), (0, 1), (0, 1)))
    assert is_planar(g)


def atlas_graphs(max_nodes: int = 6):
    for i, g in enumerate(nx.graph_atlas_g()):
        if 1 <= g.number_of_nodes() <= max_nodes:
            yield i, MultiGraph(g.number_of_nodes(), tuple(g.edges()))


def test_planarity_matches_kuratowski_search_on_atlas():
    nonplanar = 0
    for _, g in atlas_graphs():
        sub = kuratowski_subgraph(g.vertex_count, g.edges)
        assert (sub is None) == is_planar(g)
        assert is_planar(g) == oracles.nx_planar(g.vertex_count, g.edges)
        if sub is not None:
            nonplanar += 1
            chosen = [g.edges[i] for i in sub]
            assert oracles.is_kuratowski_subdivision(g.vertex_count, chosen)
            assert oracles.minimal_nonplanar_brute(g.vertex_count, chosen)
    assert nonplanar > 0


@given(multigraphs(max_vertices=8, max_edges=20))
def test_planarity_matches_networkx(g):
    assert is_planar(g) == oracles.nx_planar(g.vertex_count, g.edges)


@given(multigraphs(max_vertices=8, max_edges=18, loops=False))
def test_embedding_certificate(g):
    rot = planar_embedding(g)
    if rot is None:
        assert not is_planar(g)
    else:
        assert is_plane_rotation(g.vertex_count, g.simple_edges(), rot)


def test_kuratowski_prefers_keeping_non_deletable_edges():
    g = complete(5)
    sub = kuratowski_subgraph(5, g.edges, delete_first=[0, 1])
    assert sub == list(range(10))  # K5 is itself minimal
    g6 = complete(6)
    sub = kuratowski_subgraph(6, g6.edges, delete_first=range(5))
    assert oracles.is_kuratowski_subdivision(6, [g6.edges[i] for i in sub])


# --------------------------------------------------------------- isomorphism


def test_isomorphism_examples():
    assert are_isomorphic(petersen(), petersen())
    p4 = MultiGraph(4, ((0, 1), (1, 2), (2, 3)))
    assert not are_isomorphic(cycle(4), p4)
    two_triangles = MultiGraph(6, ((0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)))
    assert not are_isomorphic(cycle(6), two_triangles)


def test_isomorphism_respects_multiplicity_and_loops():
    a = MultiGraph(2, ((0, 1), (0, 1), (0, 0)))
    b = MultiGraph(2, ((1, 0), (1, 1), (0, 1)))
    c = MultiGraph(2, ((0, 1), (0, 1), (0, 1)))
    assert are_isomorphic(a, b)
    assert not are_isomorphic(a, c)


@st.composite
def relabelled(draw):
    g = draw(multigraphs(max_vertices=7, max_edges=12))
    perm = draw(st.permutations(list(range(g.vertex_count))))
    order = draw(st.permutations(list(range(g.edge_count))))
    h = MultiGraph(g.vertex_count, tuple((perm[g.edges[i][1]], perm[g.edges[i][0]]) for i in order))
    return g, h


@given(relabelled())
def test_isomorphic_under_relabelling(pair):
    g, h = pair
    assert are_isomorphic(g, h) and are_isomorphic(h, g)


@given(multigraphs(max_vertices=6, max_edges=9), multigraphs(max_vertices=6, max_edges=9))
def test_isomorphism_matches_networkx(g, h):
    expected = oracles.nx_isomorphic(g.vertex_count, g.edges, h.vertex_count, h.edges)
    assert are_isomorphic(g, h) == expected


@given(relabelled(), multigraphs(max_vertices=7, max_edges=12))
def test_isomorphism_transitive(pair, k):
    g, h = pair
    assert are_isomorphic(g, k) == are_isomorphic(h, k)
