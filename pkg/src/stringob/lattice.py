"""Integer row lattices in Hermite normal form.

Vectors are sparse ``{column: value}`` dicts with Python ints, so nothing
overflows. Rows are inserted one at a time; a clash at a pivot column is
resolved with the extended gcd, which is a unimodular change of basis and
keeps the lattice unchanged. Every basis row remembers its expression in the
inserted rows.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence

Vec = dict[int, int]


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with x*a + y*b == g == gcd(a, b) >= 0."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def _axpy(y: dict, a: int, x: Mapping) -> None:
    """y += a * x, dropping zeros."""
    if not a:
        return
    for k, v in x.items():
        t = y.get(k, 0) + a * v
        if t:
            y[k] = t
        else:
            y.pop(k, None)


def _combo(a: int, x: Mapping, b: int, y: Mapping) -> dict:
    out: dict = {}
    _axpy(out, a, x)
    _axpy(out, b, y)
    return out


def dot(x: Mapping, y: Mapping):
    if len(x) > len(y):
        x, y = y, x
    return sum(v * y[k] for k, v in x.items() if k in y)


class HermiteBasis:
    """Row lattice basis kept in echelon form, one row per pivot column."""

    def __init__(self) -> None:
        self.rows: dict[int, tuple[Vec, Vec]] = {}  # pivot column -> (row, expression)
        self.count = 0

    @property
    def rank(self) -> int:
        return len(self.rows)

    def add(self, vec: Mapping[int, int]) -> None:
        tag = self.count
        self.count += 1
        v = {k: x for k, x in vec.items() if x}
        t = {tag: 1}
        while v:
            c = min(v)
            hit = self.rows.get(c)
            if hit is None:
                if v[c] < 0:
                    v = {k: -x for k, x in v.items()}
                    t = {k: -x for k, x in t.items()}
                self.rows[c] = (v, t)
                return
            p, pt = hit
            a, b = p[c], v[c]
            if b % a == 0:
                q = b // a
                _axpy(v, -q, p)
                _axpy(t, -q, pt)
                continue
            g, x, y = xgcd(a, b)
            new_p = _combo(x, p, y, v)
            new_pt = _combo(x, pt, y, t)
            v2 = _combo(a // g, v, -(b // g), p)
            t2 = _combo(a // g, t, -(b // g), pt)
            self.rows[c] = (new_p, new_pt)
            v, t = v2, t2

    def normalize(self) -> None:
        """Reduce entries above each pivot into ``[0, pivot)``."""
        cols = sorted(self.rows)
        for c in cols:
            p, pt = self.rows[c]
            a = p[c]
            for c2 in cols:
                if c2 >= c:
                    break
                r, rt = self.rows[c2]
                x = r.get(c, 0)
                q = x // a
                if q:
                    _axpy(r, -q, p)
                    _axpy(rt, -q, pt)

    def express(self, target: Mapping[int, int]):
        """Integer coefficients over the inserted rows giving ``target``, or None."""
        v = {k: x for k, x in target.items() if x}
        combo: dict = {}
        while v:
            c = min(v)
            hit = self.rows.get(c)
            if hit is None or v[c] % hit[0][c]:
                return None
            q = v[c] // hit[0][c]
            _axpy(v, -q, hit[0])
            _axpy(combo, q, hit[1])
        return combo

    def separating_functional(self, target: Mapping[int, int]) -> dict[int, Fraction]:
        """Rational y with y.row integral on the lattice and y.target not integral.

        Only meaningful when ``target`` is outside the lattice.
        """
        cols = sorted(self.rows)
        basis = [self.rows[c][0] for c in cols]
        # rational coordinates of target along the basis, by forward substitution
        rest = {k: Fraction(x) for k, x in target.items() if x}
        coords = []
        for c, h in zip(cols, basis):
            q = rest.get(c, Fraction(0)) / h[c]
            coords.append(q)
            if q:
                _axpy(rest, -q, h)
        if rest:
            j = min(rest)
            w = self._dual_solve(cols, basis, [h.get(j, 0) for h in basis])
            y = {j: Fraction(1)}
            for c, val in w.items():
                if val:
                    y[c] = y.get(c, Fraction(0)) - val
            scale = 1 / (2 * rest[j])
            return {k: v * scale for k, v in y.items() if v}
        for i, q in enumerate(coords):
            if q.denominator != 1:
                rhs = [1 if k == i else 0 for k in range(len(cols))]
                return {k: v for k, v in self._dual_solve(cols, basis, rhs).items() if v}
        raise ValueError("target lies in the lattice")

    @staticmethod
    def _dual_solve(cols, basis, rhs) -> dict[int, Fraction]:
        """z on pivot columns with basis[k] . z == rhs[k] for every k."""
        z: dict[int, Fraction] = {}
        for k in range(len(cols) - 1, -1, -1):
            h = basis[k]
            acc = Fraction(rhs[k]) - sum(h.get(c, 0) * z[c] for c in cols[k + 1:] if c in z and c in h)
            z[cols[k]] = acc / h[cols[k]]
        return z


def hermite_basis(rows: Sequence[Mapping[int, int]]) -> HermiteBasis:
    basis = HermiteBasis()
    for r in rows:
        basis.add(r)
    basis.normalize()
    return basis


def lattice_solve(rows: Sequence[Mapping[int, int]], target: Mapping[int, int]):
    """Returns ``(coefficients, certificate, rank)``; exactly one of the first two is set."""
    basis = hermite_basis(rows)
    combo = basis.express(target)
    if combo is not None:
        return combo, None, basis.rank
    return None, basis.separating_functional(target), basis.rank


def combine(rows: Sequence[Mapping[int, int]], coefficients: Mapping[int, int]) -> dict:
    out: dict = {}
    for i, a in coefficients.items():
        _axpy(out, a, rows[i])
    return out
