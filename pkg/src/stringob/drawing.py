"""Piecewise-linear drawings with rational coordinates.

A drawing stores one point per vertex and one polyline per edge, the
polyline running from the edge's low vertex to its high vertex. Crossing
signs use that orientation: a crossing of edges ``i < j`` counts
``sign(cross(dir_i, dir_j))``.
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from . import geometry as geo
from .geometry import Point
from .graph import EdgePairSet, Graph, GraphError, SubdivisionMap, c_cbar, gp, heawood


class DrawingError(ValueError):
    pass


@dataclass(frozen=True)
class Drawing:
    graph: Graph
    vertex_pos: tuple[Point, ...]
    edge_path: tuple[tuple[Point, ...], ...]

    @cached_property
    def _scale(self) -> int:
        # common denominator, so the hot loops can run on ints
        pts = list(self.vertex_pos) + [p for path in self.edge_path for p in path]
        return geo.integer_scale(pts)

    @cached_property
    def _int_vertices(self) -> tuple[tuple[int, int], ...]:
        k = self._scale
        return tuple((int(x * k), int(y * k)) for x, y in self.vertex_pos)

    @cached_property
    def _int_paths(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        k = self._scale
        return tuple(tuple((int(x * k), int(y * k)) for x, y in path)
                     for path in self.edge_path)

    @cached_property
    def _int_segments(self):
        out = []
        for path in self._int_paths:
            segs = []
            for a, b in zip(path, path[1:]):
                segs.append((a, b, min(a[0], b[0]), max(a[0], b[0]),
                             min(a[1], b[1]), max(a[1], b[1])))
            out.append(tuple(segs))
        return tuple(out)

    def bends(self, edge: int) -> tuple[Point, ...]:
        return self.edge_path[edge][1:-1]

    def segment_count(self) -> int:
        return sum(len(p) - 1 for p in self.edge_path)


def make_drawing(graph: Graph, vertex_pos: Sequence, edge_path: Sequence | None = None) -> Drawing:
    """Build a drawing; edges default to straight segments.

    Polylines may be given in either direction; they are stored low to high.
    """
    pos = tuple(geo.point(x, y) for x, y in vertex_pos)
    if len(pos) != graph.n:
        raise DrawingError(f"expected {graph.n} vertex positions, got {len(pos)}")
    if edge_path is None:
        paths = tuple((pos[u], pos[v]) for u, v in graph.edges)
    else:
        if len(edge_path) != graph.m:
            raise DrawingError(f"expected {graph.m} edge paths, got {len(edge_path)}")
        paths = []
        for (u, v), pts in zip(graph.edges, edge_path):
            pts = tuple(geo.point(x, y) for x, y in pts)
            if len(pts) < 2:
                raise DrawingError("an edge polyline needs at least two points")
            if pts[0] == pos[v] and pts[-1] == pos[u] and pos[u] != pos[v]:
                pts = pts[::-1]
            if pts[0] != pos[u] or pts[-1] != pos[v]:
                raise DrawingError(f"polyline of edge {(u, v)} does not join its endpoints")
            paths.append(pts)
        paths = tuple(paths)
    return Drawing(graph, pos, paths)


# ---------------------------------------------------------------------------
# Layouts
# ---------------------------------------------------------------------------


def layout_moment_curve(graph: Graph) -> Drawing:
    """Vertex i at (i, i^2); edges straight."""
    return make_drawing(graph, [(i, i * i) for i in range(graph.n)])


def _circle(angle: float, radius: Fraction = Fraction(1)) -> Point:
    angle = math.remainder(angle, 2 * math.pi)
    if abs(abs(angle) - math.pi) < 1e-9:
        x, y = Fraction(-1), Fraction(0)
    else:
        x, y = geo.circle_point(angle)
    return (x * radius, y * radius)


def layout_convex_order(graph: Graph, order: Sequence[int]) -> Drawing:
    """Vertices on rational points of the unit circle, counter-clockwise in ``order``."""
    if sorted(order) != list(range(graph.n)):
        raise DrawingError("order must be a permutation of the vertices")
    pos: list[Point] = [None] * graph.n  # type: ignore[list-item]
    for k, v in enumerate(order):
        pos[v] = _circle(2 * math.pi * k / max(graph.n, 1))
    return make_drawing(graph, pos)


def layout_random(graph: Graph, seed: int, box: int = 10**6, max_tries: int = 100) -> Drawing:
    """Straight-line drawing at random integer points, resampled until generic."""
    rng = random.Random(seed)
    for _ in range(max_tries):
        pos = [(rng.randrange(box), rng.randrange(box)) for _ in range(graph.n)]
        d = make_drawing(graph, pos)
        if not validate_generic(d):
            return d
    raise DrawingError("could not sample a generic random layout")


_INNER = Fraction(7, 5)
_OUTER = Fraction(5, 2)
# tikz "bend left=15" approximated by one bend point offset 2/15 of the chord length
_BEND = Fraction(2, 15)


def layout_figure(family: str, n: int | None = None) -> Drawing:
    """The drawings shown in the source figures for heawood, gp and c_cbar(n).

    Circle coordinates are replaced by nearby exact rational circle points;
    subdivision dots sit at exact midpoints.
    """
    if family == "heawood":
        g = heawood()
        return layout_convex_order(g, list(range(g.n)))
    if family == "gp":
        g = gp()
        deg = math.pi / 180
        inner = [_circle((90 - 72 * k) * deg, _INNER) for k in range(5)]
        outer = [_circle((90 - 72 * k) * deg, _OUTER) for k in range(5)]
        mids = [geo.midpoint(outer[0], outer[1]), geo.midpoint(outer[1], outer[2]),
                geo.midpoint(outer[2], outer[3]), geo.midpoint(outer[3], outer[4]),
                geo.midpoint(outer[0], outer[4]), geo.midpoint(inner[1], outer[1]),
                geo.midpoint(inner[3], outer[3]), geo.midpoint(inner[4], outer[4])]
        return make_drawing(g, inner + outer + mids)
    if family == "c_cbar":
        if n is None:
            raise GraphError("c_cbar layout needs n")
        g = c_cbar(n)
        deg = math.pi / 180
        inner = [_circle((120 - 360 * i / n) * deg, _INNER) for i in range(n)]
        outer = [_circle((120 - 360 * i / n) * deg, _OUTER) for i in range(n)]
        zs = [geo.midpoint(outer[i], outer[(i + 1) % n]) for i in range(n)]
        ps = [geo.midpoint(inner[i], outer[i]) for i in range(n)]
        pos = inner + outer + zs + ps
        paths = []
        for u, v in g.edges:
            if v < n and n % 2 == 0 and v - u == n // 2:
                a, b = pos[u], pos[v]
                mid = geo.midpoint(a, b)
                bend = (mid[0] - _BEND * (b[1] - a[1]), mid[1] + _BEND * (b[0] - a[0]))
                paths.append((a, bend, b))
            else:
                paths.append((pos[u], pos[v]))
        return make_drawing(g, pos, paths)
    raise GraphError(f"no figure layout for {family!r}")


# ---------------------------------------------------------------------------
# Genericity
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Violation:
    kind: str
    where: tuple

    def __str__(self) -> str:
        return f"{self.kind}: {self.where}"


def validate_generic(d: Drawing) -> list[Violation]:
    """Every way the drawing fails to be in general position (empty when generic)."""
    g = d.graph
    out: list[Violation] = []
    for i, (u, v) in enumerate(g.edges):
        path = d.edge_path[i]
        if len(path) < 2 or path[0] != d.vertex_pos[u] or path[-1] != d.vertex_pos[v]:
            out.append(Violation("endpoint mismatch", (i,)))
    if out:
        return out

    ipaths = d._int_paths
    scale_pts = {}
    labels = []
    pos_int = d._int_vertices
    for v in range(g.n):
        labels.append((pos_int[v], ("vertex", v)))
    for i, path in enumerate(ipaths):
        for k in range(1, len(path) - 1):
            labels.append((path[k], ("bend", i, k)))
    for p, lab in labels:
        if p in scale_pts:
            out.append(Violation("duplicate point", (scale_pts[p], lab)))
        else:
            scale_pts[p] = lab

    segs = []
    for i, path in enumerate(ipaths):
        for k in range(len(path) - 1):
            a, b = path[k], path[k + 1]
            if a == b:
                out.append(Violation("zero-length segment", (i, k)))
            segs.append((i, k, a, b))

    for i, k, a, b in segs:
        lo_x, hi_x = min(a[0], b[0]), max(a[0], b[0])
        lo_y, hi_y = min(a[1], b[1]), max(a[1], b[1])
        for p, lab in labels:
            if p == a or p == b:
                continue
            if lo_x <= p[0] <= hi_x and lo_y <= p[1] <= hi_y and geo.orient(a, b, p) == 0:
                kind = "vertex on segment interior" if lab[0] == "vertex" else "bend on segment interior"
                out.append(Violation(kind, (lab, (i, k))))

    boxes = [(min(a[0], b[0]), max(a[0], b[0]), min(a[1], b[1]), max(a[1], b[1])) for _, _, a, b in segs]
    for s in range(len(segs)):
        i, k, a, b = segs[s]
        bx = boxes[s]
        for t in range(s + 1, len(segs)):
            j, l, c, e = segs[t]
            by = boxes[t]
            if bx[1] < by[0] or by[1] < bx[0] or bx[3] < by[2] or by[3] < bx[2]:
                continue
            if i == j and abs(k - l) == 1:
                # consecutive pieces of one polyline: only a fold-back is bad
                if geo.orient(a, b, e if l > k else c) == 0 and geo.orient(a, b, c if l > k else e) == 0:
                    shared = b if l > k else a
                    other_end = e if l > k else c
                    mine = a if l > k else b
                    dot = (mine[0] - shared[0]) * (other_end[0] - shared[0]) + \
                          (mine[1] - shared[1]) * (other_end[1] - shared[1])
                    if dot > 0:
                        out.append(Violation("non-transversal intersection", ((i, k), (j, l))))
                continue
            if geo.proper_crossing(a, b, c, e):
                continue
            hit = geo.segment_intersection(a, b, c, e)
            if hit is None:
                continue
            if hit[0] == "point" and i != j:
                p = hit[1]
                shared = set(g.edges[i]) & set(g.edges[j])
                if any(pos_int[v] == p for v in shared) and p in (a, b) and p in (c, e):
                    continue
            out.append(Violation("non-transversal intersection", ((i, k), (j, l))))
    return out


def require_generic(d: Drawing) -> None:
    bad = validate_generic(d)
    if bad:
        shown = "; ".join(str(v) for v in bad[:5])
        raise DrawingError(f"drawing is not in general position ({len(bad)} violations): {shown}")


# ---------------------------------------------------------------------------
# Crossings
# ---------------------------------------------------------------------------


def _edge_crossings(d: Drawing, i: int, j: int) -> tuple[int, int]:
    """(number of proper crossings, signed sum) between the polylines of edges i and j."""
    count = 0
    signed = 0
    for a, b, ax0, ax1, ay0, ay1 in d._int_segments[i]:
        for c, e, cx0, cx1, cy0, cy1 in d._int_segments[j]:
            if ax1 < cx0 or cx1 < ax0 or ay1 < cy0 or cy1 < ay0:
                continue
            if geo.proper_crossing(a, b, c, e):
                count += 1
                signed += geo.sign(geo.cross(geo.sub(b, a), geo.sub(e, c)))
    return count, signed


def crossing_count(d: Drawing, i: int, j: int) -> int:
    return _edge_crossings(d, i, j)[0]


def crossing_points(d: Drawing, i: int, j: int) -> list[Point]:
    pts = []
    pi, pj = d.edge_path[i], d.edge_path[j]
    for a, b in zip(pi, pi[1:]):
        for c, e in zip(pj, pj[1:]):
            if geo.proper_crossing(a, b, c, e):
                pts.append(geo.crossing_point(a, b, c, e))
    return pts


@dataclass(frozen=True)
class CrossingVector:
    """Crossing parity and signed crossing count for every indexed pair."""

    pair_set: EdgePairSet
    mod2: tuple[int, ...]
    signed: tuple[int, ...]

    def __post_init__(self):
        if len(self.mod2) != len(self.pair_set) or len(self.signed) != len(self.pair_set):
            raise ValueError("vector length does not match the pair set")
        if any((s - m) % 2 for s, m in zip(self.signed, self.mod2)):
            raise ValueError("mod2 must be the reduction of signed")

    @property
    def bits(self) -> int:
        """mod2 packed into an int, pair k at bit k."""
        out = 0
        for k, x in enumerate(self.mod2):
            if x:
                out |= 1 << k
        return out

    def odd_pairs(self) -> list[tuple[int, int]]:
        return [p for p, x in zip(self.pair_set.pairs, self.mod2) if x]

    def __sub__(self, other: CrossingVector) -> CrossingVector:
        if other.pair_set != self.pair_set:
            raise ValueError("crossing vectors over different pair sets")
        signed = tuple(a - b for a, b in zip(self.signed, other.signed))
        return CrossingVector(self.pair_set, tuple(x % 2 for x in signed), signed)


def crossing_vector(d: Drawing, pairs: EdgePairSet, check: bool = True) -> CrossingVector:
    if pairs.base != d.graph:
        raise DrawingError("pair set belongs to a different graph")
    if check:
        require_generic(d)
    mod2 = []
    signed = []
    for i, j in pairs.pairs:
        c, s = _edge_crossings(d, i, j)
        mod2.append(c & 1)
        signed.append(s)
    return CrossingVector(pairs, tuple(mod2), tuple(signed))


# ---------------------------------------------------------------------------
# Finger moves
# ---------------------------------------------------------------------------


def _free_points(d: Drawing, edge: int):
    """Candidate (segment, parameter) spots on an edge away from every crossing.

    Yields midpoints of the crossing-free gaps along each segment, widest gap
    first, followed by off-centre spots in the same gaps.
    """
    path = d.edge_path[edge]
    gaps = []
    for k, (a, b) in enumerate(zip(path, path[1:])):
        params = {Fraction(0), Fraction(1)}
        for j, other in enumerate(d.edge_path):
            for l, (c, e) in enumerate(zip(other, other[1:])):
                if j == edge and l == k:
                    continue
                hit = geo.segment_intersection(a, b, c, e)
                if hit is not None:
                    for p in hit[1:]:
                        params.add(geo.segment_parameter(p, a, b))
        params = sorted(params)
        for lo, hi in zip(params, params[1:]):
            gaps.append((hi - lo, k, lo, hi))
    gaps.sort(key=lambda g: (-g[0], g[1], g[2]))
    for frac in (Fraction(1, 2), Fraction(1, 3), Fraction(2, 3), Fraction(1, 5), Fraction(4, 5)):
        for _, k, lo, hi in gaps:
            yield k, lo, hi, lo + (hi - lo) * frac


def apply_finger_move(d: Drawing, omega, u: int, max_attempts: int = 48) -> Drawing:
    """Reroute edge ``omega`` around vertex ``u`` through a thin tube.

    The tube leaves ``omega`` at a crossing-free spot, runs straight to ``u``
    and circles it along a small square. Every edge at ``u`` then crosses
    ``omega`` once more; any other edge meets the tube an even number of times.
    """
    g = d.graph
    w = g.edge_id(omega)
    if u in g.edges[w]:
        raise DrawingError(f"vertex {u} lies on edge {g.edges[w]}")
    require_generic(d)
    target = d.vertex_pos[u]
    path = d.edge_path[w]

    foreign = [p for v, p in enumerate(d.vertex_pos) if v != u]
    for i, pts in enumerate(d.edge_path):
        foreign.extend(pts[1:-1])

    near2 = None
    for p in foreign:
        dist = (p[0] - target[0]) ** 2 + (p[1] - target[1]) ** 2
        near2 = dist if near2 is None else min(near2, dist)
    for i, pts in enumerate(d.edge_path):
        for a, b in zip(pts, pts[1:]):
            if a == target or b == target:
                continue
            dist = geo.squared_distance_point_segment(target, a, b)
            near2 = dist if near2 is None else min(near2, dist)

    for k, lo, hi, lam in _free_points(d, w):
        a, b = path[k], path[k + 1]
        m = geo.lerp(a, b, lam)
        if any(geo.on_segment(p, m, target) for p in foreign):
            continue
        result = _try_tube(d, w, k, lo, hi, lam, target, foreign, near2, max_attempts)
        if result is not None:
            return result
    raise DrawingError(f"could not reroute edge {g.edges[w]} around vertex {u}")


def _try_tube(d, w, k, lo, hi, lam, target, foreign, near2, attempts):
    path = d.edge_path[w]
    a, b = path[k], path[k + 1]
    m = geo.lerp(a, b, lam)
    dvec = geo.sub(target, m)
    nvec = (-dvec[1], dvec[0])
    dd = dvec[0] ** 2 + dvec[1] ** 2
    if near2 is None:
        near2 = dd
    s = geo.rational_below_sqrt(Fraction(near2) / (18 * dd))
    h = s / 2
    delta = min(lam - lo, hi - lam) / 2
    evec = geo.sub(b, a)
    side = geo.sign(evec[0] * nvec[0] + evec[1] * nvec[1])

    def frame(x, y):
        return (target[0] + x * dvec[0] + y * nvec[0], target[1] + x * dvec[1] + y * nvec[1])

    for _ in range(attempts):
        p1 = geo.lerp(a, b, lam - delta)
        p2 = geo.lerp(a, b, lam + delta)
        hi_side = [frame(-2 * s, h), frame(-s, s), frame(s, s), frame(s, -s), frame(-s, -s), frame(-2 * s, -h)]
        tube = hi_side[::-1] if side > 0 else hi_side
        new_path = path[:k + 1] + (p1,) + tuple(tube) + (p2,) + path[k + 1:]
        polygon = [p1] + tube + [p2]
        if not any(geo.point_in_polygon(p, polygon) or _on_boundary(p, polygon) for p in foreign):
            paths = list(d.edge_path)
            paths[w] = new_path
            cand = Drawing(d.graph, d.vertex_pos, tuple(paths))
            if not validate_generic(cand):
                return cand
        s /= 2
        h /= 2
        delta /= 2
    return None


def _on_boundary(p, polygon) -> bool:
    n = len(polygon)
    return any(geo.on_segment(p, polygon[i], polygon[(i + 1) % n]) for i in range(n))


# ---------------------------------------------------------------------------
# Barycentric subdivision of a drawing
# ---------------------------------------------------------------------------


def subdivide_drawing(d: Drawing, sub: SubdivisionMap) -> Drawing:
    """Drawing of G* with the same point set per edge.

    The barycentre of each edge is placed in the middle of a crossing-free
    stretch of that edge, so every crossing of the original edge lands on
    exactly one of its two halves.
    """
    if sub.source != d.graph:
        raise DrawingError("subdivision map belongs to a different graph")
    require_generic(d)
    g = d.graph
    split = []
    for i in range(g.m):
        k, _, _, lam = next(_free_points(d, i))
        path = d.edge_path[i]
        split.append((k, geo.lerp(path[k], path[k + 1], lam)))
    pos = list(d.vertex_pos) + [pt for _, pt in split]
    paths = []
    for v, i in sub.edge_origin:
        k, pt = split[i]
        path = d.edge_path[i]
        if v == g.edges[i][0]:
            paths.append(path[:k + 1] + (pt,))
        else:
            paths.append(tuple(reversed(path[k + 1:])) + (pt,))
    return Drawing(sub.star, tuple(pos), tuple(paths))


# ---------------------------------------------------------------------------
# JSON
# ---------------------------------------------------------------------------


def _pt_json(p: Point) -> list[str]:
    return [geo.format_rational(p[0]), geo.format_rational(p[1])]


def drawing_to_json(d: Drawing) -> dict:
    return {
        "graph": d.graph.to_json(),
        "vertices": [_pt_json(p) for p in d.vertex_pos],
        "edges": [[_pt_json(p) for p in path] for path in d.edge_path],
    }


def drawing_from_json(data: dict) -> Drawing:
    from .graph import graph_from_json

    g = graph_from_json(data["graph"])
    return make_drawing(g, data["vertices"], data["edges"])


def save_drawing(d: Drawing, path) -> None:
    with open(path, "w") as fh:
        json.dump(drawing_to_json(d), fh)
        fh.write("\n")


def load_drawing(path) -> Drawing:
    with open(path) as fh:
        return drawing_from_json(json.load(fh))


def random_finger_moves(graph: Graph, rng: random.Random, count: int) -> Iterable[tuple[int, int]]:
    """Random admissible (edge index, vertex) pairs."""
    choices = [(w, u) for w, e in enumerate(graph.edges) for u in range(graph.n) if u not in e]
    if not choices:
        return
    for _ in range(count):
        yield rng.choice(choices)
