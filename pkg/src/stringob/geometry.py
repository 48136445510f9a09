"""Exact planar predicates over rationals.

Every predicate here is decided with :class:`fractions.Fraction` (or plain
``int``) arithmetic, so there is no tolerance anywhere. Points are
``(x, y)`` tuples.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence, Tuple, Union

Number = Union[int, Fraction]
Point = Tuple[Fraction, Fraction]


def point(x: Number | str, y: Number | str) -> Point:
    return (parse_rational(x), parse_rational(y))


def parse_rational(value: Number | str) -> Fraction:
    """Accept ints, Fractions and ``"num/den"`` strings. Floats are rejected."""
    if isinstance(value, float):
        raise TypeError("floats are not exact; pass a Fraction or 'num/den' string")
    return Fraction(value)


def format_rational(value: Fraction) -> str:
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def orient(a, b, c) -> Number:
    """Twice the signed area of triangle abc (positive when counter-clockwise)."""
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def sign(x: Number) -> int:
    return (x > 0) - (x < 0)


def cross(u, v) -> Number:
    return u[0] * v[1] - u[1] * v[0]


def sub(p, q):
    return (p[0] - q[0], p[1] - q[1])


def lerp(a, b, t) -> Point:
    return (a[0] + (b[0] - a[0]) * t, a[1] + (b[1] - a[1]) * t)


def midpoint(a, b) -> Point:
    return lerp(a, b, Fraction(1, 2))


def _in_box(p, a, b) -> bool:
    return (min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= p[1] <= max(a[1], b[1]))


def on_segment(p, a, b) -> bool:
    """True if p lies on the closed segment ab (ab may be degenerate)."""
    return orient(a, b, p) == 0 and _in_box(p, a, b)


def in_relative_interior(p, a, b) -> bool:
    return p != a and p != b and on_segment(p, a, b)


def boxes_overlap(a, b, c, d) -> bool:
    return not (max(a[0], b[0]) < min(c[0], d[0]) or max(c[0], d[0]) < min(a[0], b[0])
                or max(a[1], b[1]) < min(c[1], d[1]) or max(c[1], d[1]) < min(a[1], b[1]))


def proper_crossing(a, b, c, d) -> bool:
    """Segments ab and cd cross transversally at a point interior to both."""
    o1 = orient(a, b, c)
    o2 = orient(a, b, d)
    if o1 == 0 or o2 == 0 or (o1 > 0) == (o2 > 0):
        return False
    o3 = orient(c, d, a)
    o4 = orient(c, d, b)
    return o3 != 0 and o4 != 0 and (o3 > 0) != (o4 > 0)


def crossing_point(a, b, c, d) -> Point:
    """Intersection of the lines ab and cd; the lines must not be parallel."""
    r = sub(b, a)
    s = sub(d, c)
    denom = cross(r, s)
    t = Fraction(cross(sub(c, a), s)) / denom
    return lerp(a, b, t)


def segment_parameter(p, a, b) -> Fraction:
    """Position of p (assumed on line ab) as a fraction of the way from a to b."""
    if a[0] != b[0]:
        return Fraction(p[0] - a[0]) / (b[0] - a[0])
    return Fraction(p[1] - a[1]) / (b[1] - a[1])


def segment_intersection(a, b, c, d):
    """Closed-segment intersection.

    Returns ``None``, ``("point", p)`` or ``("overlap", p, q)`` with ``p < q``
    lexicographically. Degenerate segments (a == b) are handled.
    """
    if not boxes_overlap(a, b, c, d):
        return None
    if a == b:
        return ("point", a) if on_segment(a, c, d) else None
    if c == d:
        return ("point", c) if on_segment(c, a, b) else None
    o1 = orient(a, b, c)
    o2 = orient(a, b, d)
    if o1 == 0 and o2 == 0:
        lo = max(min(a, b), min(c, d))
        hi = min(max(a, b), max(c, d))
        if lo > hi:
            return None
        if lo == hi:
            return ("point", lo)
        return ("overlap", lo, hi)
    o3 = orient(c, d, a)
    o4 = orient(c, d, b)
    if sign(o1) * sign(o2) > 0 or sign(o3) * sign(o4) > 0:
        return None
    if o1 == 0:
        return ("point", c)
    if o2 == 0:
        return ("point", d)
    if o3 == 0:
        return ("point", a)
    if o4 == 0:
        return ("point", b)
    return ("point", crossing_point(a, b, c, d))


def segments_intersect(a, b, c, d) -> bool:
    return segment_intersection(a, b, c, d) is not None


def polyline_segments(points: Sequence[Point]):
    if len(points) == 1:
        return [(points[0], points[0])]
    return [(points[i], points[i + 1]) for i in range(len(points) - 1)]


def polylines_intersect(p: Sequence[Point], q: Sequence[Point]) -> bool:
    for a, b in polyline_segments(p):
        for c, d in polyline_segments(q):
            if segment_intersection(a, b, c, d) is not None:
                return True
    return False


def least_common_point(p: Sequence[Point], q: Sequence[Point]) -> Point | None:
    """Lexicographically least point of the intersection of two polylines."""
    best = None
    for a, b in polyline_segments(p):
        for c, d in polyline_segments(q):
            hit = segment_intersection(a, b, c, d)
            if hit is not None and (best is None or hit[1] < best):
                best = hit[1]
    return best


def point_in_polygon(p, polygon: Sequence[Point]) -> bool:
    """Even-odd rule; p must not lie on the boundary."""
    inside = False
    n = len(polygon)
    for i in range(n):
        a = polygon[i]
        b = polygon[(i + 1) % n]
        if (a[1] > p[1]) != (b[1] > p[1]):
            # x-coordinate of the edge at height p[1], compared without division
            lhs = (p[0] - a[0]) * (b[1] - a[1])
            rhs = (b[0] - a[0]) * (p[1] - a[1])
            if (b[1] - a[1] > 0 and lhs < rhs) or (b[1] - a[1] < 0 and lhs > rhs):
                inside = not inside
    return inside


def squared_distance_point_segment(p, a, b) -> Fraction:
    d = sub(b, a)
    dd = d[0] * d[0] + d[1] * d[1]
    if dd == 0:
        t = Fraction(0)
    else:
        t = Fraction((p[0] - a[0]) * d[0] + (p[1] - a[1]) * d[1]) / dd
        t = min(max(t, Fraction(0)), Fraction(1))
    q = lerp(a, b, t)
    return Fraction((p[0] - q[0]) ** 2 + (p[1] - q[1]) ** 2)


def rational_below_sqrt(q: Fraction) -> Fraction:
    """A positive rational r with r*r <= q (q > 0), within a few percent of sqrt(q)."""
    q = Fraction(q)
    r = Fraction(math.sqrt(q)).limit_denominator(1 << 20)
    if r <= 0:
        r = min(q, Fraction(1))
    while r * r > q:
        r *= Fraction(15, 16)
    return r


def circle_point(angle: float, denominator: int = 10**6) -> Point:
    """An exact rational point on the unit circle near the given angle.

    Uses the rational parametrisation via t = tan(angle / 2), so the result is
    exactly on the circle; angle must lie strictly inside (-pi, pi).
    """
    t = Fraction(math.tan(angle / 2)).limit_denominator(denominator)
    den = 1 + t * t
    return ((1 - t * t) / den, 2 * t / den)


def integer_scale(points: Iterable[Point]) -> int:
    """Least common multiple of all coordinate denominators."""
    scale = 1
    for x, y in points:
        for c in (x, y):
            den = Fraction(c).denominator
            scale = scale * den // math.gcd(scale, den)
    return scale
