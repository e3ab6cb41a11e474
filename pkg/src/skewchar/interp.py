"""Interpolating Schur polynomials s^BD, s^BC and s^CD.

Each is a determinant over alpha-polynomial coefficients.  ``alpha=None``
keeps alpha formal; an integer specializes the result afterwards, which is
legitimate because specialization is a ring homomorphism.
"""

from __future__ import annotations

from .characters import so_jt
from .genseries import Kind, SeriesFamily
from .partitions import as_ints, epsilon_subtractions, pad, strip
from .ring import ALPHA, LaurentPoly, determinant

FAMILIES = ("BD", "BC", "CD")


def _finish(p: LaurentPoly, alpha):
    return p if alpha is None else p.specialize_alpha(int(alpha))


def _prepare(lam, n: int) -> tuple:
    lam = strip(as_ints(lam))
    if len(lam) > n:
        raise ValueError(f"partition {lam} has more than {n} nonzero parts")
    return lam


def _two_term(lam, n, kind, h=None) -> LaurentPoly:
    h = h or SeriesFamily(kind, n)
    l = len(lam)
    rows = [[h(lam[i] - i + j) + h(lam[i] - i - j - 1) for j in range(l)] for i in range(l)]
    return determinant(rows, one=LaurentPoly.const(n, 1))


def s_BD(lam, n: int, alpha=None, h: SeriesFamily | None = None) -> LaurentPoly:
    """``det(hbar_{lam_i-i+j} + hbar_{lam_i-i-j+1})`` with ``hbar`` from ``(1 - alpha z) H(z)``."""
    return _finish(_two_term(_prepare(lam, n), n, Kind.HBAR_ALPHA, h), alpha)


def s_BC(lam, n: int, alpha=None, h: SeriesFamily | None = None) -> LaurentPoly:
    """Same shape as s_BD over ``H(z) / (1 - alpha z)``."""
    return _finish(_two_term(_prepare(lam, n), n, Kind.H_BC_ALPHA, h), alpha)


def s_CD(lam, n: int, alpha=None, h: SeriesFamily | None = None) -> LaurentPoly:
    """``det(htilde_{lam_i-i+j} + [j>1] htilde_{lam_i-i-j+2})``, ``htilde`` from ``(1 - alpha z^2) H(z)``."""
    lam = _prepare(lam, n)
    h = h or SeriesFamily(Kind.HTILDE_ALPHA, n)
    l = len(lam)
    rows = []
    for i in range(l):
        row = []
        for j in range(l):
            entry = h(lam[i] - i + j)
            if j > 0:
                entry = entry + h(lam[i] - i - j)
            row.append(entry)
        rows.append(row)
    return _finish(determinant(rows, one=LaurentPoly.const(n, 1)), alpha)


def bd_epsilon_expansion(lam, n: int, alpha=None, h: SeriesFamily | None = None) -> LaurentPoly:
    """``sum over valid lam - eps of (-alpha)^{|eps|} so_{lam - eps}``."""
    lam = pad(_prepare(lam, n), n)
    h = h if h is not None else SeriesFamily(Kind.H_PM, n)
    total = LaurentPoly.zero(n)
    for mu, k in epsilon_subtractions(lam):
        total = total + so_jt(mu.ints(), n, h) * ((-ALPHA) ** k)
    return _finish(total, alpha)


def interpolating(family: str, lam, n: int, alpha=None) -> LaurentPoly:
    try:
        fn = {"BD": s_BD, "BC": s_BC, "CD": s_CD}[family]
    except KeyError:
        raise ValueError(f"unknown interpolating family {family!r}") from None
    return fn(lam, n, alpha)
