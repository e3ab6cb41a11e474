"""Exact determinants over the package's commutative rings."""

from __future__ import annotations

from . import alpha as _alpha
from .laurent import LaurentPoly, StructureError
from .series import TruncatedSeries

COFACTOR_LIMIT = 12


class SquareMatrix:
    """Square array of ring elements sharing one ring."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(tuple(r) for r in rows)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise StructureError("matrix is not square")
        _check_ring(rows)
        self.rows = rows

    @property
    def size(self) -> int:
        return len(self.rows)

    def swap_rows(self, i: int, j: int) -> "SquareMatrix":
        rows = list(self.rows)
        rows[i], rows[j] = rows[j], rows[i]
        return SquareMatrix(rows)

    def det(self, method: str = "auto", one=None):
        return determinant(self, method=method, one=one)


def _ring_signature(x):
    if isinstance(x, LaurentPoly):
        return ("laurent", x.nvars)
    if isinstance(x, TruncatedSeries):
        return ("series", x.nvars, x.cap)
    if isinstance(x, (int, _alpha.AlphaPoly)):
        return None
    raise TypeError(f"unsupported ring element {type(x).__name__}")


def _check_ring(rows):
    sig = None
    for r in rows:
        for x in r:
            s = _ring_signature(x)
            if s is None:
                continue
            if sig is None:
                sig = s
            elif s != sig:
                raise StructureError(f"matrix mixes rings {sig} and {s}")


def _one_like(rows, one):
    if one is not None:
        return one
    for r in rows:
        for x in r:
            if isinstance(x, LaurentPoly):
                return LaurentPoly.const(x.nvars, 1)
            if isinstance(x, TruncatedSeries):
                return TruncatedSeries.const(x.nvars, x.cap, 1)
    return 1


def determinant(m, method: str = "auto", one=None):
    """Exact determinant of a :class:`SquareMatrix` or list of rows.

    ``cofactor`` is Laplace expansion memoized over column subsets (2^n n
    products, zero entries skipped); ``bareiss`` is fraction-free elimination
    and needs exact division, so it is unavailable for truncated series.
    ``auto`` uses cofactor up to ``COFACTOR_LIMIT`` rows.
    """
    if not isinstance(m, SquareMatrix):
        m = SquareMatrix(m)
    rows = m.rows
    one = _one_like(rows, one)
    if method == "auto":
        has_series = any(isinstance(x, TruncatedSeries) for r in rows for x in r)
        method = "cofactor" if len(rows) <= COFACTOR_LIMIT or has_series else "bareiss"
    if method == "cofactor":
        return _det_cofactor(rows, one)
    if method == "bareiss":
        return _det_bareiss(rows, one)
    raise ValueError(f"unknown determinant method {method!r}")


def _det_cofactor(rows, one):
    n = len(rows)
    zero = one - one
    if n == 0:
        return one
    # minors[mask] = det of the first popcount(mask) rows on the columns in mask
    minors = {0: one}
    for k in range(n):
        row = rows[k]
        nxt = {}
        for mask, minor in minors.items():
            if not minor:
                continue
            # columns not yet used, each with the sign of its position in the new mask
            above = 0
            for j in range(n - 1, -1, -1):
                bit = 1 << j
                if mask & bit:
                    above += 1
                    continue
                a = row[j]
                if not a:
                    continue
                term = minor * a if above % 2 == 0 else -(minor * a)
                key = mask | bit
                prev = nxt.get(key)
                nxt[key] = term if prev is None else prev + term
        minors = nxt
        if not minors:
            return zero
    result = minors.get((1 << n) - 1)
    return zero if result is None else result


def _exact(a, b):
    if isinstance(a, LaurentPoly) or isinstance(b, LaurentPoly):
        if not isinstance(a, LaurentPoly):
            a = LaurentPoly.const(b.nvars, a)
        return a.exact_div(b)
    return _alpha.exact_div(a, b)


def _det_bareiss(rows, one):
    if any(isinstance(x, TruncatedSeries) for r in rows for x in r):
        raise StructureError("fraction-free elimination needs exact division; use cofactor for series")
    n = len(rows)
    zero = one - one
    if n == 0:
        return one
    a = [list(r) for r in rows]
    sign = 1
    prev = one
    for k in range(n - 1):
        if not a[k][k]:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return zero
        piv = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            for j in range(k + 1, n):
                a[i][j] = _exact(piv * a[i][j] - aik * a[k][j], prev)
            a[i][k] = zero
        prev = piv
    d = a[n - 1][n - 1]
    d = d * one if not isinstance(d, LaurentPoly) else d
    return d if sign == 1 else -d
