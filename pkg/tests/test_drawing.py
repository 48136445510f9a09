from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import count_crossings_float
from stringob.drawing import (
    DrawingError,
    apply_finger_move,
    crossing_count,
    crossing_vector,
    drawing_from_json,
    drawing_to_json,
    layout_convex_order,
    layout_figure,
    layout_moment_curve,
    layout_random,
    load_drawing,
    make_drawing,
    random_finger_moves,
    save_drawing,
    subdivide_drawing,
    validate_generic,
)
from stringob.graph import (
    DELTA,
    S,
    barycentric_subdivision,
    c_cbar,
    complete,
    gnp,
    gp,
    heawood,
    make_graph,
    pair_set,
    path,
)
from stringob.obstruction import finger_move_vector
from stringob.svg import export_svg

# the graph of the finger-move figure, labels 1..6 shifted to 0..5
FIG1_EDGES = [(0, 1), (1, 3), (2, 3), (3, 4), (3, 5), (2, 5)]
FIG1_POS = [(0, 0), (0, 6), ("394/100", 6), ("488/100", "255/100"), ("687/100", "162/100"),
            ("232/100", 0)]


def fig1():
    g = make_graph(6, FIG1_EDGES)
    return make_drawing(g, FIG1_POS)


def total_crossings(d, pairs):
    return sum(crossing_count(d, i, j) for i, j in pairs.pairs)


def test_triangle_moment_curve_has_no_crossings():
    d = layout_moment_curve(complete(3))
    assert validate_generic(d) == []
    assert total_crossings(d, pair_set(complete(3), DELTA)) == 0


def test_k4_and_k5_convex_crossings():
    k4 = complete(4)
    pairs = pair_set(k4, DELTA)
    o = crossing_vector(layout_moment_curve(k4), pairs)
    assert o.odd_pairs() == [(k4.edge_id((0, 2)), k4.edge_id((1, 3)))]
    k5 = complete(5)
    o5 = crossing_vector(layout_moment_curve(k5), pair_set(k5, DELTA))
    assert sum(o5.mod2) == 5
    assert validate_generic(layout_moment_curve(k5)) == []


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 9), st.integers(0, 10**6))
def test_convex_layout_matches_moment_curve(n, seed):
    g = gnp(n, 0.5, seed)
    pairs = pair_set(g, DELTA)
    a = crossing_vector(layout_moment_curve(g), pairs)
    b = crossing_vector(layout_convex_order(g, list(range(n))), pairs)
    assert a.mod2 == b.mod2


def test_empty_graph_layouts():
    g = make_graph(4, [])
    assert layout_convex_order(g, [0, 1, 2, 3]).edge_path == ()
    with pytest.raises(DrawingError):
        layout_convex_order(g, [0, 1, 2])


def test_violations_are_reported():
    g = path(3)
    d = make_drawing(g, [(0, 0), (2, 0), (1, 0)])
    kinds = {v.kind for v in validate_generic(d)}
    assert "vertex on segment interior" in kinds
    overlap = make_drawing(make_graph(4, [(0, 1), (2, 3)]), [(0, 0), (4, 0), (2, 0), (6, 0)])
    assert "non-transversal intersection" in {v.kind for v in validate_generic(overlap)}
    dup = make_drawing(make_graph(2, []), [(1, 1), (1, 1)])
    assert "duplicate point" in {v.kind for v in validate_generic(dup)}


def test_make_drawing_rejects_bad_paths():
    g = path(2)
    with pytest.raises(DrawingError):
        make_drawing(g, [(0, 0), (1, 0)], [[(0, 0), (5, 5)]])
    d = make_drawing(g, [(0, 0), (1, 0)], [[(1, 0), (0, 1), (0, 0)]])
    assert d.edge_path[0][0] == (0, 0)


@settings(max_examples=20, deadline=None)
@given(st.integers(2, 8), st.integers(0, 10**6))
def test_random_layout_generic_and_seeded(n, seed):
    g = gnp(n, 0.6, seed)
    d = layout_random(g, seed)
    assert validate_generic(d) == []
    assert layout_random(g, seed) == d


@settings(max_examples=20, deadline=None)
@given(st.integers(2, 8), st.integers(0, 10**6))
def test_crossing_counts_match_float_oracle(n, seed):
    g = gnp(n, 0.6, seed)
    d = layout_random(g, seed, box=1000)
    for i in range(g.m):
        for j in range(i + 1, g.m):
            assert crossing_count(d, i, j) == count_crossings_float(d.edge_path[i], d.edge_path[j])


def test_signed_crossing_convention():
    # edge (0,1) points right, edge (2,3) points up: counter-clockwise frame
    g = make_graph(4, [(0, 1), (2, 3)])
    d = make_drawing(g, [(0, 0), (2, 0), (1, -1), (1, 1)])
    o = crossing_vector(d, pair_set(g, DELTA))
    assert o.signed == (1,)
    flipped = make_drawing(g, [(0, 0), (2, 0), (1, 1), (1, -1)])
    assert crossing_vector(flipped, pair_set(g, DELTA)).signed == (-1,)


def test_heawood_figure_has_seven_odd_pairs():
    d = layout_figure("heawood")
    assert validate_generic(d) == []
    o = crossing_vector(d, pair_set(heawood(), S))
    assert sum(o.mod2) == 7
    assert sum(o.mod2) % 2 == 1


@pytest.mark.parametrize("name, n", [("gp", None)] + [("c_cbar", n) for n in range(5, 11)])
def test_figure3_layouts_avoid_s_crossings(name, n):
    d = layout_figure(name, n)
    g = gp() if name == "gp" else c_cbar(n)
    assert d.graph == g
    assert validate_generic(d) == []
    o = crossing_vector(d, pair_set(g, S))
    assert not any(o.signed) and not any(o.mod2)


def test_fig1_finger_move():
    d = fig1()
    g = d.graph
    pairs = pair_set(g, DELTA)
    before = crossing_vector(d, pairs)
    after_d = apply_finger_move(d, (0, 1), 3)
    after = crossing_vector(after_d, pairs)
    w = g.edge_id((0, 1))
    toggled = {g.edges[j if i == w else i] for (i, j), a, b in
               zip(pairs.pairs, before.mod2, after.mod2) if a != b}
    assert toggled == {(2, 3), (3, 4), (3, 5)}
    # the edge 36 (here (2,5)) meets the tube twice without changing parity
    assert crossing_count(after_d, w, g.edge_id((2, 5))) - crossing_count(d, w, g.edge_id((2, 5))) == 2


def test_finger_move_twice_restores_parity():
    d = fig1()
    pairs = pair_set(d.graph, DELTA)
    twice = apply_finger_move(apply_finger_move(d, (0, 1), 3), (0, 1), 3)
    assert crossing_vector(twice, pairs).mod2 == crossing_vector(d, pairs).mod2


def test_finger_move_around_isolated_vertex_changes_nothing():
    g = make_graph(4, [(0, 1), (1, 2)])
    d = layout_moment_curve(g)
    pairs = pair_set(g, DELTA)
    after = apply_finger_move(d, (0, 1), 3)
    assert crossing_vector(after, pairs) == crossing_vector(d, pairs)


def test_finger_move_rejects_endpoint():
    with pytest.raises(DrawingError):
        apply_finger_move(fig1(), (0, 1), 1)


def test_random_finger_moves_postcondition():
    rng = random.Random(7)
    checked = 0
    for trial in range(30):
        g = gnp(rng.randint(4, 8), 0.5, rng.getrandbits(32))
        if g.m == 0:
            continue
        pairs = pair_set(g, DELTA)
        d = layout_random(g, trial)
        base = crossing_vector(d, pairs)
        for w, u in random_finger_moves(g, rng, 4):
            after = crossing_vector(apply_finger_move(d, w, u), pairs)
            assert tuple(a ^ b for a, b in zip(base.mod2, after.mod2)) == finger_move_vector(pairs, w, u)
            checked += 1
    assert checked >= 60


def eq1_holds(d):
    g = d.graph
    sub = barycentric_subdivision(g)
    ds = subdivide_drawing(d, sub)
    assert validate_generic(ds) == []
    for i, j in pair_set(g, DELTA).pairs:
        total = sum(crossing_count(ds, sub.star_edge(v, i), sub.star_edge(w, j))
                    for v in g.edges[i] for w in g.edges[j])
        if total != crossing_count(d, i, j):
            return False
    return True


def test_subdivision_recount_examples():
    k4 = layout_moment_curve(complete(4))
    assert eq1_holds(k4)
    sub = barycentric_subdivision(complete(4))
    ds = subdivide_drawing(k4, sub)
    nonzero = [(x, y) for x in range(ds.graph.m) for y in range(x + 1, ds.graph.m)
               if crossing_count(ds, x, y)]
    assert len(nonzero) == 1
    assert eq1_holds(layout_figure("heawood"))
    tri = subdivide_drawing(layout_moment_curve(complete(3)), barycentric_subdivision(complete(3)))
    assert all(crossing_count(tri, x, y) == 0 for x in range(6) for y in range(x + 1, 6))


@settings(max_examples=25, deadline=None)
@given(st.integers(2, 9), st.integers(0, 10**6))
def test_subdivision_recount_random(n, seed):
    g = gnp(n, 0.5, seed)
    assert eq1_holds(layout_random(g, seed))
    for w, u in random_finger_moves(g, random.Random(seed), 1):
        assert eq1_holds(apply_finger_move(layout_random(g, seed), w, u))


def test_json_round_trip(tmp_path):
    d = apply_finger_move(fig1(), (0, 1), 3)
    assert drawing_from_json(drawing_to_json(d)) == d
    save_drawing(d, tmp_path / "d.json")
    assert load_drawing(tmp_path / "d.json") == d
    assert all(isinstance(x, Fraction) for p in d.vertex_pos for x in p)


def test_svg_export():
    tri = export_svg(layout_moment_curve(complete(3)))
    assert tri.count('class="edge"') == 3
    d = layout_figure("heawood")
    o = crossing_vector(d, pair_set(heawood(), S))
    svg = export_svg(d, highlight=o.odd_pairs())
    assert svg.count('class="edge"') == 21
    assert svg.count('class="crossing"') == 7
    assert svg == export_svg(d, highlight=o.odd_pairs())
