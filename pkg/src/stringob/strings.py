"""String representations and the two constructions linking them to drawings of G*.

Curves -> drawing: put each original vertex at the first point of its curve,
each edge barycentre at the lexicographically least common point of the two
curves, and run every half-edge along the curve of its vertex.

Drawing -> curves: the curve of v walks the star of v in G*, going out and
back along each half-edge. Polylines may retrace themselves; curves are only
required to be continuous images of an interval.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

from . import geometry as geo
from .drawing import Drawing
from .geometry import Point
from .graph import SD, Graph, SubdivisionMap, barycentric_subdivision, graph_from_json, pair_set


class RepresentationError(ValueError):
    pass


@dataclass(frozen=True)
class StringRepresentation:
    graph: Graph
    curves: tuple[tuple[Point, ...], ...]

    def to_json(self) -> dict:
        return {"n": self.graph.n,
                "edges": [list(e) for e in self.graph.edges],
                "curves": [[[geo.format_rational(x), geo.format_rational(y)] for x, y in c]
                           for c in self.curves]}


def make_representation(graph: Graph, curves: Sequence[Sequence]) -> StringRepresentation:
    if len(curves) != graph.n:
        raise RepresentationError(f"expected {graph.n} curves, got {len(curves)}")
    out = []
    for c in curves:
        pts = tuple(geo.point(x, y) for x, y in c)
        if not pts:
            raise RepresentationError("a curve needs at least one point")
        out.append(pts)
    return StringRepresentation(graph, tuple(out))


def intersection_graph(curves: Sequence[Sequence[Point]]) -> Graph:
    from .graph import make_graph

    n = len(curves)
    return make_graph(n, [(v, w) for v in range(n) for w in range(v + 1, n)
                          if geo.polylines_intersect(curves[v], curves[w])])


def representation_from_json(data: dict, graph: Graph | None = None) -> StringRepresentation:
    curves = data["curves"]
    if graph is None:
        if "edges" in data:
            graph = graph_from_json({"n": data["n"], "edges": data["edges"]})
        else:
            pts = [tuple(geo.point(x, y) for x, y in c) for c in curves]
            graph = intersection_graph(pts)
    return make_representation(graph, curves)


def load_representation(path, graph: Graph | None = None) -> StringRepresentation:
    with open(path) as fh:
        return representation_from_json(json.load(fh), graph)


@dataclass(frozen=True)
class RepresentationReport:
    missing: tuple[tuple[int, int], ...]  # edges whose curves are disjoint
    extra: tuple[tuple[int, int], ...]    # non-edges whose curves meet

    @property
    def valid(self) -> bool:
        return not self.missing and not self.extra

    def to_json(self) -> dict:
        return {"valid": self.valid,
                "missing": [list(p) for p in self.missing],
                "extra": [list(p) for p in self.extra]}


def verify_string_representation(rep: StringRepresentation) -> RepresentationReport:
    g = rep.graph
    missing, extra = [], []
    for v in range(g.n):
        for w in range(v + 1, g.n):
            meet = geo.polylines_intersect(rep.curves[v], rep.curves[w])
            if g.has_edge(v, w) and not meet:
                missing.append((v, w))
            elif meet and not g.has_edge(v, w):
                extra.append((v, w))
    return RepresentationReport(tuple(missing), tuple(extra))


def _prefix_to(curve: Sequence[Point], target: Point) -> tuple[Point, ...]:
    """The part of the curve from its start to the first visit of ``target``."""
    if len(curve) == 1 or curve[0] == target:
        return (curve[0], target)
    for k, (a, b) in enumerate(zip(curve, curve[1:])):
        if geo.on_segment(target, a, b):
            out = list(curve[:k + 1])
            if out[-1] != target:
                out.append(target)
            return tuple(out)
    raise RepresentationError("point is not on the curve")


def drawing_from_strings(rep: StringRepresentation) -> tuple[SubdivisionMap, Drawing]:
    """A drawing of G* whose half-edge ``v-alpha`` lies inside the curve of v.

    The result is generally not in general position (half-edges overlap along
    a shared curve); check it with :func:`verify_sd_disjointness`.
    """
    report = verify_string_representation(rep)
    if not report.valid:
        raise RepresentationError(f"invalid representation: missing {list(report.missing)}, "
                                  f"extra {list(report.extra)}")
    g = rep.graph
    sub = barycentric_subdivision(g)
    pos = [c[0] for c in rep.curves]
    for v, w in g.edges:
        pos.append(geo.least_common_point(rep.curves[v], rep.curves[w]))
    paths = [_prefix_to(rep.curves[v], pos[g.n + i]) for v, i in sub.edge_origin]
    return sub, Drawing(sub.star, tuple(pos), tuple(paths))


@dataclass(frozen=True)
class DisjointnessReport:
    clashes: tuple[tuple[int, int], ...]  # G*-edge index pairs from P_sd that meet

    @property
    def passed(self) -> bool:
        return not self.clashes


def verify_sd_disjointness(sub: SubdivisionMap, d: Drawing) -> DisjointnessReport:
    """Set-level test: no two half-edges ``v-alpha``, ``w-beta`` with vw not an edge may meet."""
    if d.graph != sub.star:
        raise RepresentationError("drawing is not a drawing of the subdivision")
    pairs = pair_set(sub.source, SD)
    clashes = tuple((x, y) for x, y in pairs.pairs
                    if geo.polylines_intersect(d.edge_path[x], d.edge_path[y]))
    return DisjointnessReport(clashes)


def strings_from_drawing(sub: SubdivisionMap, d: Drawing) -> StringRepresentation:
    report = verify_sd_disjointness(sub, d)
    if not report.passed:
        raise RepresentationError(f"drawing violates P_sd disjointness at {list(report.clashes)}")
    g = sub.source
    curves = []
    for v in range(g.n):
        curve = [d.vertex_pos[v]]
        for i in g.incident[v]:
            half = d.edge_path[sub.star_edge(v, i)]
            curve.extend(half[1:])
            curve.extend(reversed(half[:-1]))
        curves.append(tuple(curve))
    return StringRepresentation(g, tuple(curves))
