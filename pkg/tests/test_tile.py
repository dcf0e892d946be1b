from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

import frozen
import oracles
from tilecross.generators import crossing_tile, edge_tile, named_tiles, single_vertex_tile, vertical_path_tile
from tilecross.isomorphism import are_isomorphic
from tilecross.multigraph import MultiGraph, components
from tilecross.tile import (
    EXTERNAL,
    INTERNAL,
    Tile,
    big_m,
    compose,
    cyc,
    cyc_of,
    cyclic_tile_distance,
    frame,
    power,
    width,
)


@st.composite
def tiles(draw, max_vertices: int = 4, max_edges: int = 5, max_width: int = 3, min_width: int = 0):
    n = draw(st.integers(1, max_vertices))
    v = st.integers(0, n - 1)
    edges = draw(st.lists(st.tuples(v, v), max_size=max_edges))
    k = draw(st.integers(min_width, max_width))
    A = draw(st.lists(v, min_size=k, max_size=k))
    B = draw(st.lists(v, min_size=k, max_size=k))
    return Tile.build(n, edges, A, B)


def test_width_examples():
    assert width(Tile.build(1, [], (), ())) == 0
    assert width(Tile.build(1, [], (0,), (0,))) == 1
    assert width(Tile.build(2, [], (0, 0), (1, 1))) == 2


def test_tile_validation():
    with pytest.raises(ValueError):
        Tile.build(2, [], (0,), (0, 1))
    with pytest.raises(ValueError):
        Tile.build(2, [], (2,), (0,))


def test_compose_examples():
    z = Tile.build(1, [], (), ())
    zz = compose(z, z)
    assert zz.graph.vertex_count == 2 and zz.graph.edge_count == 0
    v = single_vertex_tile()
    vv = compose(v, v)
    assert (vv.graph.vertex_count, vv.graph.edges, vv.A, vv.B) == (2, ((0, 1),), (0,), (1,))
    e2 = compose(edge_tile(), edge_tile())
    assert are_isomorphic(e2.graph, MultiGraph(4, ((0, 1), (1, 2), (2, 3))))
    with pytest.raises(ValueError):
        compose(v, Tile.build(1, [], (), ()))


def test_compose_bridging_edges_last():
    t1 = Tile.build(3, [(0, 1), (1, 2)], (0, 1), (2, 2))
    t2 = Tile.build(2, [(0, 1)], (0, 1), (1, 0))
    t = compose(t1, t2)
    assert t.graph.edges[-2:] == ((2, 3), (2, 4))
    assert t.A == (0, 1) and t.B == (4, 3)


def test_power_examples():
    t = crossing_tile()
    assert power(t, 1) == t
    p = power(single_vertex_tile(), 4)
    assert p.graph.edges == ((0, 1), (1, 2), (2, 3)) and p.A == (0,) and p.B == (3,)
    z = power(Tile.build(1, [], (), ()), 3)
    assert z.graph.vertex_count == 3 and z.graph.edge_count == 0
    with pytest.raises(ValueError):
        power(t, 0)


def test_cyc_examples():
    c = cyc(single_vertex_tile(), 5)
    assert c.graph.vertex_count == 5 and c.label_kinds() == [EXTERNAL] * 5
    assert are_isomorphic(c.graph, MultiGraph(5, tuple((i, (i + 1) % 5) for i in range(5))))
    c = cyc(vertical_path_tile(3), 4)
    assert c.graph.vertex_count == 12
    assert c.label_kinds().count(INTERNAL) == 8 and c.label_kinds().count(EXTERNAL) == 12
    grid = MultiGraph(12, tuple(
        [(3 * i + j, 3 * i + j + 1) for i in range(4) for j in range(2)]
        + [(3 * i + j, 3 * ((i + 1) % 4) + j) for i in range(4) for j in range(3)]
    ))
    assert are_isomorphic(c.graph, grid)
    c = cyc(edge_tile(), 1)
    assert sorted(c.graph.edges) == [(0, 1), (1, 0)] or c.graph.multiplicities()[(0, 1)] == 2
    assert sorted(c.label_kinds()) == [EXTERNAL, INTERNAL]
    with pytest.raises(ValueError):
        cyc(edge_tile(), 0)


def test_cyc_of_matches_cyc_1():
    for t in named_tiles().values():
        assert cyc_of(t) == cyc(t, 1).graph


@given(tiles(), st.integers(1, 6))
def test_cyc_counts_and_seams(t, n):
    c = cyc(t, n)
    k, nv, ne = t.width, t.graph.vertex_count, t.graph.edge_count
    assert c.graph.vertex_count == n * nv
    assert c.graph.edge_count == n * (ne + k)
    for i in range(n):
        seam = [e for e, lab in enumerate(c.labels) if lab.kind == EXTERNAL and lab.copy == i]
        assert len(seam) == k
        assert [c.graph.edges[e] for e in seam] == [(b + i * nv, a + ((i + 1) % n) * nv) for b, a in zip(t.B, t.A)]
    for e, lab in enumerate(c.labels):
        if lab.internal:
            assert c.copies_of_edge(e) == (lab.copy,)


@given(tiles(), st.integers(1, 4))
def test_cyc_matches_definition(t, n):
    c = cyc(t, n)
    bn, be = oracles.brute_cyc(t.graph.vertex_count, t.graph.edges, t.A, t.B, n)
    assert oracles.nx_isomorphic(c.graph.vertex_count, c.graph.edges, bn, be)


@given(tiles(max_vertices=3, max_edges=3, max_width=2), st.sampled_from([(1, 2), (2, 2), (1, 4), (2, 4), (3, 3)]))
def test_cyc_power_consistency(t, mn):
    m, n = mn
    assert are_isomorphic(cyc(t, n).graph, cyc(power(t, m), n // m).graph)


@given(st.data())
def test_compose_associative(data):
    k = data.draw(st.integers(0, 2))
    t1, t2, t3 = (data.draw(tiles(max_vertices=3, max_edges=3, max_width=k, min_width=k)) for _ in range(3))
    left = compose(compose(t1, t2), t3)
    right = compose(t1, compose(t2, t3))
    assert are_isomorphic(left.graph, right.graph)
    assert left.graph.edge_count == sum(t.graph.edge_count for t in (t1, t2, t3)) + 2 * k


def test_frame_examples():
    fr = frame(single_vertex_tile(), 1)
    assert len(fr.boundary_order) == 2
    rim = [e for e in fr.frame_edges if fr.apex not in fr.graph.edges[e]]
    spokes = [e for e in fr.frame_edges if fr.apex in fr.graph.edges[e]]
    assert len(rim) == 2 and len(spokes) == 2
    assert {tuple(sorted(fr.graph.edges[e])) for e in rim} == {tuple(sorted(fr.boundary_order))}

    fr = frame(crossing_tile(), 1)
    v1, v2, w2, w1 = fr.boundary_order
    rim = sorted(fr.graph.edges[e] for e in fr.frame_edges if fr.apex not in fr.graph.edges[e])
    assert sorted(rim) == sorted([(v1, v2), (v2, w2), (w2, w1), (w1, v1)])
    kinds = [fr.labels[e].kind for e in fr.core_edges]
    assert kinds.count(INTERNAL) == 2 and kinds.count(EXTERNAL) == 4
    assert not set(fr.core_edges) & fr.frame_edges


def test_frame_width_zero():
    t = Tile.build(3, [(0, 1), (1, 2)], (), ())
    fr = frame(t, 2)
    assert fr.boundary_order == () and not fr.frame_edges
    assert fr.graph.edge_count == 4 and fr.graph.vertex_count == 7


@given(tiles(), st.integers(1, 3))
def test_frame_boundary_attachment(t, n):
    fr = frame(t, n)
    k = t.width
    tn = power(t, n)
    left, right = fr.boundary_order[:k], fr.boundary_order[k:][::-1]
    core = [fr.graph.edges[e] for e in fr.core_edges]
    for i in range(k):
        assert (left[i], tn.A[i] + k) in core
        assert (tn.B[i] + k, right[i]) in core
    assert len(fr.core_edges) == tn.graph.edge_count + 2 * k


def test_big_m_examples():
    assert big_m(Tile.build(1, [], (), ())) == 0
    assert big_m(edge_tile()) == 3
    assert big_m(Tile.build(3, [(0, 1), (1, 2)], (0, 1), (1, 2))) == 15


@given(tiles())
def test_big_m_strictly_monotone(t):
    bigger = Tile(t.graph.with_edges([(0, 0)]), t.A, t.B)
    assert big_m(bigger) > big_m(t) or (t.graph.edge_count + 2 * t.width == 0 and big_m(bigger) == 0)


def _internal_edge(c, copy):
    return next(e for e, lab in enumerate(c.labels) if lab.internal and lab.copy == copy)


def test_tile_distance_examples():
    t = vertical_path_tile(3)
    c = cyc(t, 6)
    same = [e for e, lab in enumerate(c.labels) if lab.internal and lab.copy == 2]
    assert cyclic_tile_distance(c, same[0], same[1]) == 1
    ext = next(e for e, lab in enumerate(c.labels) if not lab.internal and lab.copy == 0)
    assert cyclic_tile_distance(c, ext, _internal_edge(c, 1)) == 1
    assert cyclic_tile_distance(c, _internal_edge(c, 0), _internal_edge(c, 3)) == frozen.TILE_DISTANCE_GRID_0_3


def test_tile_distance_disconnected():
    t = Tile.build(2, [(0, 0), (1, 1)], (), ())
    c = cyc(t, 2)
    assert cyclic_tile_distance(c, 0, 1) is None
    with pytest.raises(ValueError):
        cyclic_tile_distance(c, 0, 9)


@given(tiles(max_vertices=3, max_edges=3, max_width=2), st.integers(1, 5), st.data())
def test_tile_distance_matches_path_enumeration(t, n, data):
    c = cyc(t, n)
    if c.graph.edge_count == 0:
        return
    e = st.integers(0, c.graph.edge_count - 1)
    e1, e2 = data.draw(e), data.draw(e)
    got = cyclic_tile_distance(c, e1, e2)
    assert got == cyclic_tile_distance(c, e2, e1)
    want = oracles.brute_tile_distance(n, t.graph.vertex_count, c.graph.edges, e1, e2)
    assert got == want
    if got is not None:
        assert got >= 1


def test_width_zero_cyc_is_disjoint_copies():
    t = Tile.build(2, [(0, 1)], (), ())
    c = cyc(t, 3)
    assert len(components(c.graph)) == 3
