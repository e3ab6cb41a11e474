"""Coefficient families of the generating functions used as determinant entries."""

from __future__ import annotations

import enum

from .ring import ALPHA, LaurentPoly, TruncatedSeries


class Kind(enum.Enum):
    H_PM = "h_pm"            # prod 1/((1 - x_i z)(1 - x_i^{-1} z))
    E_PM = "e_pm"            # prod (1 + x_i z)(1 + x_i^{-1} z)
    H_PLAIN = "h"            # prod 1/(1 - x_i z)
    F_TRUNC = "f"            # prod 1/((1 - y_i z)(1 - y_i z^{-1})), truncated in y
    HBAR_ALPHA = "hbar"      # (1 - alpha z) * H_PM
    H_BC_ALPHA = "h_bc"      # H_PM / (1 - alpha z)
    HTILDE_ALPHA = "htilde"  # (1 - alpha z^2) * H_PM


class SeriesFamily:
    """Cached coefficients ``[z^n]`` of one generating function.

    ``nvars`` is the alphabet size (the ``y`` count ``K`` for ``F_TRUNC``);
    ``cap`` is the total-degree cap, required for ``F_TRUNC`` only.
    """

    def __init__(self, kind: Kind | str, nvars: int, cap: int | None = None):
        self.kind = Kind(kind)
        if nvars < 1:
            raise ValueError("alphabet needs at least one variable")
        if self.kind is Kind.F_TRUNC and cap is None:
            raise ValueError("F_TRUNC needs a degree cap")
        self.nvars = nvars
        self.cap = cap
        self._cache: list = []

    def __repr__(self):
        return f"SeriesFamily({self.kind.name}, nvars={self.nvars}, cap={self.cap})"

    def zero(self):
        if self.kind is Kind.F_TRUNC:
            return TruncatedSeries.zero(self.nvars, self.cap)
        return LaurentPoly.zero(self.nvars)

    def __call__(self, n: int):
        return self.coeff(n)

    def coeff(self, n: int):
        if self.kind is Kind.F_TRUNC:
            n = abs(n)
            if n > self.cap:
                return self.zero()
        elif n < 0:
            return self.zero()
        elif self.kind is Kind.E_PM and n > 2 * self.nvars:
            return self.zero()
        if n >= len(self._cache):
            self._fill(max(n + 1, 2 * len(self._cache), 8))
        return self._cache[n]

    def _fill(self, order: int):
        if self.kind is Kind.F_TRUNC:
            order = min(order, self.cap + 1)
            self._cache = _f_coeffs(self.nvars, self.cap, order)
            return
        base = _base_coeffs(self.kind, self.nvars, order)
        self._cache = base


def _monomials_pm(nvars: int):
    for i in range(nvars):
        yield LaurentPoly.var(nvars, i, 1)
        yield LaurentPoly.var(nvars, i, -1)


def _geometric_product(nvars: int, monomials, order: int) -> list:
    """Coefficients 0..order-1 of prod 1/(1 - m z) over the given monomials."""
    c = [LaurentPoly.const(nvars, 1)] + [LaurentPoly.zero(nvars)] * (order - 1)
    for m in monomials:
        # multiplying by 1/(1 - m z):  c'_k = c_k + m * c'_{k-1}
        for k in range(1, order):
            c[k] = c[k] + m * c[k - 1]
    return c


def _base_coeffs(kind: Kind, nvars: int, order: int) -> list:
    if kind is Kind.H_PLAIN:
        return _geometric_product(nvars, [LaurentPoly.var(nvars, i) for i in range(nvars)], order)
    if kind is Kind.E_PM:
        c = [LaurentPoly.const(nvars, 1)] + [LaurentPoly.zero(nvars)] * (order - 1)
        for m in _monomials_pm(nvars):
            for k in range(order - 1, 0, -1):
                c[k] = c[k] + m * c[k - 1]
        return c
    h = _geometric_product(nvars, _monomials_pm(nvars), order)
    if kind is Kind.H_PM:
        return h
    if kind is Kind.HBAR_ALPHA:
        return [h[0]] + [h[k] - h[k - 1] * ALPHA for k in range(1, order)]
    if kind is Kind.HTILDE_ALPHA:
        return h[:2] + [h[k] - h[k - 2] * ALPHA for k in range(2, order)]
    if kind is Kind.H_BC_ALPHA:
        out = [h[0]]
        for k in range(1, order):
            out.append(h[k] + out[k - 1] * ALPHA)
        return out
    raise ValueError(f"unsupported kind {kind}")


def _h_plain_series(nvars: int, cap: int) -> list:
    """``h_i(y)`` as truncated series for ``i = 0..cap``."""
    out = []
    for i in range(cap + 1):
        terms = {c: 1 for c in _compositions(i, nvars)}
        out.append(TruncatedSeries.from_terms(nvars, cap, terms))
    return out


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _f_coeffs(nvars: int, cap: int, order: int) -> list:
    """``f_n = sum_i h_i h_{i+n}`` for ``n < order``; terms with ``2i + n > cap`` vanish."""
    h = _h_plain_series(nvars, cap)
    out = []
    for n in range(order):
        acc = TruncatedSeries.zero(nvars, cap)
        i = 0
        while 2 * i + n <= cap:
            acc = acc + h[i] * h[i + n]
            i += 1
        out.append(acc)
    return out


def coeff(family: SeriesFamily, n: int):
    return family.coeff(n)
