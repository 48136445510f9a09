"""Finger-move systems and the vanishing decision for modified obstructions.

A pair set P fixes which crossings are forbidden. The finger move that drags
edge ``w`` around vertex ``u`` changes the crossing parity exactly on the
pairs ``{w, b}`` of P with ``u`` in ``b``. The obstruction vanishes when the
crossing vector of one generic drawing is a combination of those rows; any
two generic drawings differ by such a combination, so one drawing suffices.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from . import gf2, lattice
from .drawing import (
    CrossingVector,
    Drawing,
    crossing_vector,
    layout_convex_order,
    layout_moment_curve,
    layout_random,
    subdivide_drawing,
)
from .geometry import format_rational
from .graph import DELTA, S, SD, EdgePairSet, Graph, pair_set

MOD2 = "mod2"
INTEGER = "integer"
LAYOUTS = ("moment", "random", "convex")


@dataclass(frozen=True)
class FingerMoveSystem:
    """One row per admissible (edge, vertex) move, columns indexed like the pair set.

    ``mod2_rows[r]`` is a bitset over pair indices; ``signed_rows[r]`` maps a
    pair index to +1 or -1. For the pair ``(i, j)``, ``i < j``, touched by
    moving ``w`` around ``u`` (``b`` the other edge of the pair) the signed
    entry is ``+1`` if ``u`` is the high end of ``b`` else ``-1``, negated
    when ``w`` is the second edge ``j``.
    """

    pair_set: EdgePairSet
    moves: tuple[tuple[int, int], ...]
    mod2_rows: tuple[int, ...]
    signed_rows: tuple[dict[int, int], ...] = field(repr=False)

    @property
    def row_count(self) -> int:
        return len(self.moves)

    def row_of(self, omega, u: int) -> int:
        w = self.pair_set.base.edge_id(omega)
        return self.moves.index((w, u))

    def restrict(self, rows) -> FingerMoveSystem:
        rows = list(rows)
        return FingerMoveSystem(self.pair_set,
                                tuple(self.moves[r] for r in rows),
                                tuple(self.mod2_rows[r] for r in rows),
                                tuple(self.signed_rows[r] for r in rows))

    def dense_mod2(self) -> list[list[int]]:
        width = len(self.pair_set)
        return [[(row >> k) & 1 for k in range(width)] for row in self.mod2_rows]


def _check_move(graph: Graph, omega, u: int) -> int:
    w = graph.edge_id(omega)
    if u in graph.edges[w]:
        raise ValueError(f"vertex {u} lies on edge {graph.edges[w]}")
    if not 0 <= u < graph.n:
        raise ValueError(f"vertex {u} out of range")
    return w


def finger_move_vector(pairs: EdgePairSet, omega, u: int) -> tuple[int, ...]:
    """The mod-2 change caused by moving ``omega`` around ``u``, one entry per pair."""
    g = pairs.base
    w = _check_move(g, omega, u)
    out = []
    for i, j in pairs.pairs:
        hit = (i == w and u in g.edges[j]) or (j == w and u in g.edges[i])
        out.append(int(hit))
    return tuple(out)


def build_system(pairs: EdgePairSet) -> FingerMoveSystem:
    g = pairs.base
    moves = [(w, u) for w, e in enumerate(g.edges) for u in range(g.n) if u not in e]
    where = {mv: r for r, mv in enumerate(moves)}
    cols: list[list[int]] = [[] for _ in moves]
    signed: list[dict[int, int]] = [{} for _ in moves]
    edges = g.edges
    for k, (i, j) in enumerate(pairs.pairs):
        for w, b, first in ((i, j, 1), (j, i, -1)):
            for u in edges[b]:
                r = where[(w, u)]
                cols[r].append(k)
                signed[r][k] = first * (1 if u == edges[b][1] else -1)
    return FingerMoveSystem(pairs, tuple(moves), tuple(gf2.pack(c) for c in cols), tuple(signed))


# ---------------------------------------------------------------------------
# Reports
# ---------------------------------------------------------------------------


@dataclass
class ObstructionReport:
    """Outcome of a vanishing decision.

    ``witness`` maps row index to coefficient (all 1 for mod 2) and is set
    exactly when the obstruction vanishes; ``certificate`` maps pair index to
    a functional value otherwise. Mod 2 certificates are 0/1 functionals that
    kill every row and pair to 1 with the crossing vector; integer
    certificates are rational functionals integral on every row but not on
    the crossing vector.
    """

    kind: str
    mode: str
    vanishes: bool
    rank: int
    witness: dict[int, int] | None
    certificate: dict[int, Fraction | int] | None
    system: FingerMoveSystem = field(repr=False)
    crossings: CrossingVector = field(repr=False)
    timings: dict[str, float] = field(default_factory=dict)

    @property
    def pair_count(self) -> int:
        return len(self.system.pair_set)

    @property
    def row_count(self) -> int:
        return self.system.row_count

    def verify(self) -> bool:
        if (self.witness is None) == (self.certificate is None):
            return False
        rows_m = self.system.mod2_rows
        rows_s = self.system.signed_rows
        if self.mode == MOD2:
            if self.witness is not None:
                return gf2.combine(rows_m, gf2.pack(self.witness)) == self.crossings.bits
            y = gf2.pack(self.certificate)
            return gf2.annihilates(y, rows_m) and gf2.parity(y & self.crossings.bits) == 1
        target = {k: x for k, x in enumerate(self.crossings.signed) if x}
        if self.witness is not None:
            return lattice.combine(rows_s, self.witness) == target
        y = self.certificate
        return (all(Fraction(lattice.dot(y, r)).denominator == 1 for r in rows_s)
                and Fraction(lattice.dot(y, target)).denominator != 1)

    def to_json(self) -> dict:
        edges = self.system.pair_set.base.edges
        moves = self.system.moves
        witness = certificate = None
        if self.witness is not None:
            if self.mode == MOD2:
                witness = [[list(edges[moves[r][0]]), moves[r][1]] for r in sorted(self.witness)]
            else:
                witness = [[list(edges[moves[r][0]]), moves[r][1], c]
                           for r, c in sorted(self.witness.items())]
        if self.certificate is not None:
            if self.mode == MOD2:
                certificate = sorted(self.certificate)
            else:
                certificate = [[k, format_rational(v)] for k, v in sorted(self.certificate.items())]
        return {
            "kind": self.kind,
            "mode": self.mode,
            "vanishes": self.vanishes,
            "rank": self.rank,
            "witness": witness,
            "certificate": certificate,
            "pair_count": self.pair_count,
            "row_count": self.row_count,
            "millis": int(round(sum(self.timings.values()))),
        }


def _check_index(system: FingerMoveSystem, o: CrossingVector) -> None:
    if o.pair_set != system.pair_set:
        raise ValueError("index mismatch: crossing vector and system use different pair sets")


def decide_mod2(system: FingerMoveSystem, o: CrossingVector) -> ObstructionReport:
    _check_index(system, o)
    t0 = time.perf_counter()
    witness, cert, rank = gf2.solve(system.mod2_rows, o.bits)
    ms = (time.perf_counter() - t0) * 1000
    return ObstructionReport(
        kind=system.pair_set.kind,
        mode=MOD2,
        vanishes=witness is not None,
        rank=rank,
        witness=None if witness is None else {r: 1 for r in gf2.bits_of(witness)},
        certificate=None if cert is None else {k: 1 for k in gf2.bits_of(cert)},
        system=system,
        crossings=o,
        timings={"solve": ms},
    )


def decide_integer(system: FingerMoveSystem, o: CrossingVector) -> ObstructionReport:
    _check_index(system, o)
    t0 = time.perf_counter()
    target = {k: x for k, x in enumerate(o.signed) if x}
    coeffs, cert, rank = lattice.lattice_solve(system.signed_rows, target)
    ms = (time.perf_counter() - t0) * 1000
    return ObstructionReport(
        kind=system.pair_set.kind,
        mode=INTEGER,
        vanishes=coeffs is not None,
        rank=rank,
        witness=coeffs,
        certificate=cert,
        system=system,
        crossings=o,
        timings={"solve": ms},
    )


def decide(system: FingerMoveSystem, o: CrossingVector, mode: str = MOD2) -> ObstructionReport:
    if mode == MOD2:
        return decide_mod2(system, o)
    if mode == INTEGER:
        return decide_integer(system, o)
    raise ValueError(f"unknown mode {mode!r}")


# ---------------------------------------------------------------------------
# Front doors
# ---------------------------------------------------------------------------


def make_layout(graph: Graph, layout: str = "moment", seed: int = 0) -> Drawing:
    if layout == "moment":
        return layout_moment_curve(graph)
    if layout == "random":
        return layout_random(graph, seed)
    if layout == "convex":
        return layout_convex_order(graph, list(range(graph.n)))
    raise ValueError(f"unknown layout {layout!r}; choose from {', '.join(LAYOUTS)}")


def obstruction(graph: Graph, kind: str, mode: str = MOD2, layout: str = "moment",
                seed: int = 0, drawing: Drawing | None = None) -> ObstructionReport:
    """Decide the obstruction of ``graph`` modified for the pair set ``kind``.

    For ``Sd`` the computation runs on G*; a supplied drawing of G itself is
    subdivided first.
    """
    timings = {}
    t0 = time.perf_counter()
    pairs = pair_set(graph, kind)
    timings["pairs"] = (time.perf_counter() - t0) * 1000

    t0 = time.perf_counter()
    base = pairs.base
    if drawing is None:
        drawing = make_layout(base, layout, seed)
    elif kind == SD and drawing.graph == graph:
        drawing = subdivide_drawing(drawing, pairs.subdivision)
    timings["layout"] = (time.perf_counter() - t0) * 1000

    t0 = time.perf_counter()
    o = crossing_vector(drawing, pairs)
    timings["crossings"] = (time.perf_counter() - t0) * 1000

    t0 = time.perf_counter()
    system = build_system(pairs)
    timings["system"] = (time.perf_counter() - t0) * 1000

    report = decide(system, o, mode)
    report.timings = {**timings, **report.timings}
    return report


def string_obstruction(graph: Graph, mode: str = MOD2, **kwargs) -> ObstructionReport:
    return obstruction(graph, S, mode, **kwargs)


def subdivided_obstruction(graph: Graph, mode: str = MOD2, **kwargs) -> ObstructionReport:
    return obstruction(graph, SD, mode, **kwargs)


def planarity_obstruction(graph: Graph, mode: str = MOD2, **kwargs) -> ObstructionReport:
    return obstruction(graph, DELTA, mode, **kwargs)


def all_ones_certificate(system: FingerMoveSystem, o: CrossingVector) -> bool:
    """Does the all-ones functional separate ``o`` from the span of the moves?"""
    y = (1 << len(system.pair_set)) - 1
    return gf2.annihilates(y, system.mod2_rows) and gf2.parity(y & o.bits) == 1


def vector_from_values(pairs: EdgePairSet, signed: Mapping[int, int] | list[int]) -> CrossingVector:
    """Wrap raw per-pair values (e.g. for oracle tests) as a crossing vector."""
    if isinstance(signed, Mapping):
        signed = [signed.get(k, 0) for k in range(len(pairs))]
    signed = tuple(int(x) for x in signed)
    return CrossingVector(pairs, tuple(x % 2 for x in signed), signed)
