from __future__ import annotations

import pytest

from corpora import representation_corpus
from stringob import geometry as geo
from stringob.drawing import make_drawing
from stringob.graph import barycentric_subdivision, complete, make_graph, path
from stringob.strings import (
    RepresentationError,
    drawing_from_strings,
    make_representation,
    representation_from_json,
    strings_from_drawing,
    verify_sd_disjointness,
    verify_string_representation,
)


def k2(crossing=True):
    if crossing:
        return make_representation(complete(2), [[(0, 0), (2, 2)], [(0, 2), (2, 0)]])
    return make_representation(complete(2), [[(0, 0), (1, 0)], [(0, 1), (1, 1)]])


def test_verify_examples():
    assert verify_string_representation(k2()).valid
    report = verify_string_representation(k2(crossing=False))
    assert report.missing == ((0, 1),) and report.extra == ()
    through_origin = make_representation(complete(3), [[(-1, 0), (1, 0)], [(0, -1), (0, 1)],
                                                       [(-1, -1), (1, 1)]])
    assert verify_string_representation(through_origin).valid
    extra = make_representation(make_graph(2, []), [[(0, 0), (2, 2)], [(0, 2), (2, 0)]])
    assert verify_string_representation(extra).extra == ((0, 1),)


def test_single_point_curves():
    rep = make_representation(path(2), [[(1, 1)], [(0, 0), (2, 2)]])
    assert verify_string_representation(rep).valid
    sub, d = drawing_from_strings(rep)
    assert verify_sd_disjointness(sub, d).passed


def test_k2_drawing_follows_the_curves():
    sub, d = drawing_from_strings(k2())
    assert d.graph == sub.star and (sub.star.n, sub.star.m) == (3, 2)
    meet = geo.point(1, 1)
    assert d.vertex_pos[2] == meet
    for k, (v, _) in enumerate(sub.edge_origin):
        curve = k2().curves[v]
        assert all(geo.on_segment(p, curve[0], curve[-1]) for p in d.edge_path[k])


def test_invalid_representation_is_rejected():
    with pytest.raises(RepresentationError):
        drawing_from_strings(k2(crossing=False))


def test_sd_disjointness_failure_example():
    g = path(3)
    sub = barycentric_subdivision(g)
    # G* vertices: 0, 1, 2, a = 3 (edge 01), b = 4 (edge 12)
    d = make_drawing(sub.star, [(0, 0), (3, 1), (0, 2), (2, 2), (2, 0)])
    report = verify_sd_disjointness(sub, d)
    assert report.clashes == (tuple(sorted((sub.star_edge(0, 0), sub.star_edge(2, 1)))),)
    with pytest.raises(RepresentationError):
        strings_from_drawing(sub, d)


def test_planar_triangle_drawing_gives_strings():
    g = complete(3)
    sub = barycentric_subdivision(g)
    pos = [(0, 0), (4, 0), (0, 4)] + [None] * 3
    for i, (u, v) in enumerate(g.edges):
        pos[3 + i] = geo.midpoint(geo.point(*pos[u]), geo.point(*pos[v]))
    d = make_drawing(sub.star, pos)
    assert verify_sd_disjointness(sub, d).passed
    rep = strings_from_drawing(sub, d)
    assert verify_string_representation(rep).valid
    # each curve covers exactly its star: the vertex and its half-edges
    for v in range(3):
        pts = set(rep.curves[v])
        assert d.vertex_pos[v] in pts
        for i in g.incident[v]:
            assert set(d.edge_path[sub.star_edge(v, i)]) <= pts


@pytest.mark.parametrize("name, rep", representation_corpus(), ids=lambda x: x if isinstance(x, str) else "")
def test_round_trip(name, rep):
    assert verify_string_representation(rep).valid
    sub, d = drawing_from_strings(rep)
    assert verify_sd_disjointness(sub, d).passed
    back = strings_from_drawing(sub, d)
    assert back.graph == rep.graph
    assert verify_string_representation(back).valid


def test_json_round_trip():
    rep = k2()
    again = representation_from_json(rep.to_json())
    assert again == rep
    data = rep.to_json()
    del data["edges"]
    assert representation_from_json(data).graph == complete(2)
