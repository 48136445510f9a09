"""GF(2) row reduction on int bitsets.

Row ``r`` is an ``int`` whose bit ``c`` is the entry in column ``c``. Rows
are inserted in order and each one is reduced by the pivots found so far,
always at its lowest set bit, so a column's pivot comes from the earliest
row that reaches it. Each pivot carries the set of source rows it is the
sum of, which gives witnesses without a second pass.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


def lowbit(x: int) -> int:
    return (x & -x).bit_length() - 1


def bits_of(x: int) -> list[int]:
    out = []
    while x:
        low = x & -x
        out.append(low.bit_length() - 1)
        x ^= low
    return out


def pack(indices) -> int:
    out = 0
    for i in indices:
        out |= 1 << i
    return out


def parity(x: int) -> int:
    return x.bit_count() & 1


@dataclass
class Echelon:
    """Echelon basis of the row space: pivot column -> (row bits, source rows)."""

    pivots: dict[int, tuple[int, int]]
    nrows: int

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, target: int) -> tuple[int, int]:
        """Reduce at lowest bits until stuck. Returns (residual, source rows used)."""
        combo = 0
        pivots = self.pivots
        while target:
            hit = pivots.get(lowbit(target))
            if hit is None:
                break
            target ^= hit[0]
            combo ^= hit[1]
        return target, combo

    def fully_reduced(self, target: int) -> int:
        """The unique vector in ``target + rowspace`` with no pivot-column bits."""
        mask = pack(self.pivots)
        todo = target & mask
        while todo:
            c = lowbit(todo)
            target ^= self.pivots[c][0]
            todo = target & mask & ~((1 << (c + 1)) - 1)
        return target

    def reduced_rows(self) -> dict[int, int]:
        """Reduced row echelon form: pivot column -> row with no other pivot bits."""
        mask = pack(self.pivots)
        out: dict[int, int] = {}
        for c in sorted(self.pivots, reverse=True):
            row = self.pivots[c][0]
            extra = row & mask & ~(1 << c)
            for j in bits_of(extra):
                row ^= out[j]
            out[c] = row
        return out


def echelon(rows: Sequence[int]) -> Echelon:
    pivots: dict[int, tuple[int, int]] = {}
    for i, row in enumerate(rows):
        combo = 1 << i
        while row:
            c = lowbit(row)
            hit = pivots.get(c)
            if hit is None:
                pivots[c] = (row, combo)
                break
            row ^= hit[0]
            combo ^= hit[1]
    return Echelon(pivots, len(rows))


def rank(rows: Sequence[int]) -> int:
    return echelon(rows).rank


def solve(rows: Sequence[int], target: int, basis: Echelon | None = None):
    """Decide whether ``target`` is a sum of rows.

    Returns ``(witness, certificate, rank)``: exactly one of the first two is
    not ``None``. The witness is a bitset of row indices summing to
    ``target``; the certificate is a column bitset ``y`` with ``y . row = 0``
    for every row and ``y . target = 1``.
    """
    basis = basis or echelon(rows)
    residual, combo = basis.reduce(target)
    if residual == 0:
        return combo, None, basis.rank
    return None, certificate(basis, target), basis.rank


def certificate(basis: Echelon, target: int) -> int:
    residual = basis.fully_reduced(target)
    if residual == 0:
        raise ValueError("target lies in the row space")
    j = lowbit(residual)
    y = 1 << j
    for c, row in basis.reduced_rows().items():
        if (row >> j) & 1:
            y |= 1 << c
    return y


def combine(rows: Sequence[int], selection: int) -> int:
    out = 0
    for i in bits_of(selection):
        out ^= rows[i]
    return out


def annihilates(y: int, rows: Sequence[int]) -> bool:
    return all(not parity(y & r) for r in rows)
