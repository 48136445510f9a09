"""Shared test corpora: string representations and small finger-move systems."""

from __future__ import annotations

import random
from fractions import Fraction

from stringob.drawing import crossing_vector, layout_moment_curve
from stringob.graph import DELTA, S, complete, complete_bipartite, cycle, make_graph, pair_set, path
from stringob.obstruction import build_system
from stringob.strings import StringRepresentation, intersection_graph, make_representation


def concurrent_segments(n: int) -> StringRepresentation:
    """K_n: n segments through the origin with distinct slopes."""
    curves = [[(-1, -k), (1, k)] for k in range(n)]
    return make_representation(complete(n), curves)


def tangent_segments(n: int) -> StringRepresentation:
    """K_n: tangent lines to a parabola, clipped; any two cross at distinct points."""
    curves = []
    for k in range(n):
        # tangent at x = k: y = 2k x - k^2
        curves.append([(-n - 1, 2 * k * (-n - 1) - k * k), (n + 1, 2 * k * (n + 1) - k * k)])
    return make_representation(complete(n), curves)


def grid_crossing(a: int, b: int) -> StringRepresentation:
    """K_{a,b}: a horizontal segments crossed by b vertical ones."""
    horiz = [[(0, i + 1), (b + 1, i + 1)] for i in range(a)]
    vert = [[(j + 1, 0), (j + 1, a + 1)] for j in range(b)]
    return make_representation(complete_bipartite(a, b), horiz + vert)


def staircase(n: int) -> StringRepresentation:
    """A path: consecutive L-shaped curves overlapping along a shared piece."""
    curves = [[(2 * i, 0), (2 * i + 3, 0), (2 * i + 3, 1)] for i in range(n)]
    return make_representation(intersection_graph([tuple((Fraction(x), Fraction(y)) for x, y in c)
                                                   for c in curves]), curves)


def random_polylines(seed: int, n: int, bends: int = 2, box: int = 12) -> StringRepresentation:
    """Random curves; the graph is whatever their intersection pattern is."""
    rng = random.Random(seed)
    curves = []
    for _ in range(n):
        k = rng.randint(1, bends + 2)
        curves.append([(rng.randint(0, box), rng.randint(0, box)) for _ in range(k)])
    pts = [tuple((Fraction(x), Fraction(y)) for x, y in c) for c in curves]
    return make_representation(intersection_graph(pts), curves)


def representation_corpus() -> list[tuple[str, StringRepresentation]]:
    out = []
    for n in range(1, 7):
        out.append((f"concurrent-{n}", concurrent_segments(n)))
        out.append((f"tangent-{n}", tangent_segments(n)))
    for a in range(1, 4):
        for b in range(1, 4):
            out.append((f"grid-{a}x{b}", grid_crossing(a, b)))
    for n in (2, 4, 6):
        out.append((f"staircase-{n}", staircase(n)))
    for seed in range(30):
        out.append((f"random-{seed}", random_polylines(seed, 3 + seed % 6)))
    return out


def curated_small_systems():
    """Systems with at most 16 rows, each paired with several targets."""
    graphs = [path(4), path(5), cycle(4), cycle(5), make_graph(5, [(0, 1), (2, 3), (3, 4)]),
              make_graph(6, [(0, 1), (2, 3), (4, 5)]), complete_bipartite(1, 3),
              make_graph(4, [(0, 1), (2, 3)]), complete(4)]
    rng = random.Random(5)
    out = []
    for g in graphs:
        for kind in (DELTA, S):
            pairs = pair_set(g, kind)
            system = build_system(pairs)
            if system.row_count > 16:
                continue
            targets = [crossing_vector(layout_moment_curve(g), pairs).mod2]
            for _ in range(6):
                targets.append(tuple(rng.randint(0, 1) for _ in range(len(pairs))))
            out.append((g, kind, system, targets))
    return out
