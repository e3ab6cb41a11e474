"""Odd orthogonal, symplectic, even orthogonal and Schur characters.

Every evaluator returns a :class:`LaurentPoly` in ``x_1..x_N``.  The determinant
evaluators accept an optional prebuilt :class:`SeriesFamily` so grid runs can
share coefficient caches; without one, a private family is built per call.
"""

from __future__ import annotations

from collections import Counter
from typing import Sequence

from .genseries import Kind, SeriesFamily
from .partitions import (
    as_ints,
    conjugate_parts,
    epsilon_subtractions,
    gt_chains,
    pad,
    strip,
)
from .ring import LaurentPoly, TruncatedSeries, determinant
from .ring.laurent import pack

FAMILIES = ("so", "sp", "o", "schur")
METHODS = ("bialternant", "jacobi_trudi", "skew_jt", "dual_jt", "gt_sum", "transition")


def _family(h, kind: Kind, n: int) -> SeriesFamily:
    if h is None:
        return SeriesFamily(kind, n)
    if h.kind is not kind or h.nvars != n:
        raise ValueError(f"expected a {kind.name} family on {n} variables, got {h!r}")
    return h


def _check_length(lam: tuple, n: int):
    if len(strip(lam)) > n:
        raise ValueError(f"partition {lam} has more than {n} nonzero parts")


def _one(n: int) -> LaurentPoly:
    return LaurentPoly.const(n, 1)


# odd orthogonal ----------------------------------------------------------

def _alternant(n: int, shifts_doubled: Sequence[int]) -> LaurentPoly:
    rows = []
    for i in range(n):
        row = []
        for a in shifts_doubled:
            e_pos = [0] * n
            e_pos[i] = a
            e_neg = [0] * n
            e_neg[i] = -a
            row.append(LaurentPoly(n, {pack(e_pos): 1, pack(e_neg): -1}))
        rows.append(row)
    return determinant(rows, one=_one(n))


def so_bialternant(lam, n: int) -> LaurentPoly:
    """Weyl ratio of alternants with exponents ``lam_j + N - j + 1/2`` (doubled internally)."""
    lam = pad(as_ints(lam), n)
    num = _alternant(n, [2 * (lam[j] + n - 1 - j) + 1 for j in range(n)])
    den = _alternant(n, [2 * (n - 1 - j) + 1 for j in range(n)])
    out = num.exact_div(den)
    if not out.is_integral:
        raise ArithmeticError("odd orthogonal character came out with half-integer exponents")
    return out


def so_jt(lam, n: int, h: SeriesFamily | None = None) -> LaurentPoly:
    """``det(h_{lam_i-i+j} + h_{lam_i-i-j+1})`` over the nonzero rows of ``lam``."""
    lam = strip(as_ints(lam))
    _check_length(lam, n)
    h = _family(h, Kind.H_PM, n)
    l = len(lam)
    rows = [[h(lam[i] - i + j) + h(lam[i] - i - j - 1) for j in range(l)] for i in range(l)]
    return determinant(rows, one=_one(n))


def so_skew_jt(lam, mu, n: int, h: SeriesFamily | None = None) -> LaurentPoly:
    """Skew odd orthogonal character as an ``(l+N) x (l+N)`` determinant.

    ``mu`` keeps its declared length ``l``; ``lam`` is zero-padded to ``l+N``.
    Columns ``j <= l`` hold ``h_{lam_i - mu_j - i + j}``, the rest
    ``h_{lam_i-i+j} + h_{lam_i-i-j+2l+1}``.
    """
    mu = as_ints(mu)
    l = len(mu)
    lam = pad(as_ints(lam), l + n)
    h = _family(h, Kind.H_PM, n)
    size = l + n
    rows = []
    for i in range(1, size + 1):
        row = []
        for j in range(1, size + 1):
            if j <= l:
                row.append(h(lam[i - 1] - mu[j - 1] - i + j))
            else:
                row.append(h(lam[i - 1] - i + j) + h(lam[i - 1] - i - j + 2 * l + 1))
        rows.append(row)
    return determinant(rows, one=_one(n))


def so_skew_dual_jt(lam, mu, s: int, n: int, e: SeriesFamily | None = None) -> LaurentPoly:
    """``det(e_{lam'_i-mu'_j-i+j} + e_{lam'_i+mu'_j-i-j-2l+1})`` of size ``s``."""
    lam = strip(as_ints(lam))
    mu = as_ints(mu)
    l = len(mu)
    if lam and lam[0] > s:
        raise ValueError(f"column bound s={s} is smaller than lam_1={lam[0]}")
    if strip(mu) and mu[0] > s:
        raise ValueError(f"column bound s={s} is smaller than mu_1={mu[0]}")
    if len(lam) > l + n:
        raise ValueError(f"partition {lam} has more than l+N={l + n} nonzero parts")
    e = _family(e, Kind.E_PM, n)
    lc = pad(conjugate_parts(lam), s)
    mc = pad(conjugate_parts(strip(mu)), s)
    rows = [
        [e(lc[i - 1] - mc[j - 1] - i + j) + e(lc[i - 1] + mc[j - 1] - i - j - 2 * l + 1)
         for j in range(1, s + 1)]
        for i in range(1, s + 1)
    ]
    return determinant(rows, one=_one(n))


def so_skew_gt(lam, mu, n: int) -> LaurentPoly:
    """Sum over odd-orthogonal GT chains of the monomials they weigh."""
    counts: Counter = Counter()
    for chain in gt_chains(lam, mu, n):
        counts[pack(chain.weight_doubled())] += 1
    return LaurentPoly(n, dict(counts))


# Schur -------------------------------------------------------------------

def schur(lam, n: int, method: str = "bialternant", h: SeriesFamily | None = None) -> LaurentPoly:
    """Schur polynomial ``s_lam(x_1..x_N)`` by bialternant or Jacobi-Trudi."""
    lam = strip(as_ints(lam))
    if len(lam) > n:
        return LaurentPoly.zero(n)
    if method == "bialternant":
        lp = pad(lam, n)

        def alt(exps):
            rows = [[LaurentPoly.var(n, i, exps[j]) for j in range(n)] for i in range(n)]
            return determinant(rows, one=_one(n))

        return alt([lp[j] + n - 1 - j for j in range(n)]).exact_div(alt([n - 1 - j for j in range(n)]))
    if method in ("jt", "jacobi_trudi"):
        return skew_schur(lam, (), n, h=h)
    raise ValueError(f"unknown Schur method {method!r}")


def skew_schur(eta, gamma, n: int, h: SeriesFamily | None = None) -> LaurentPoly:
    """``det(h_{eta_i - gamma_j - i + j})`` over the plain alphabet ``x_1..x_N``."""
    eta = strip(as_ints(eta))
    gamma = strip(as_ints(gamma))
    size = max(len(eta), len(gamma))
    eta, gamma = pad(eta, size), pad(gamma, size)
    h = _family(h, Kind.H_PLAIN, n)
    rows = [[h(eta[i] - gamma[j] - i + j) for j in range(size)] for i in range(size)]
    return determinant(rows, one=_one(n))


# symplectic / even orthogonal via transitions -----------------------------

def interlacing_below(lam: Sequence[int]) -> list:
    """Integer ``mu`` of the same length with ``lam_{i+1} <= mu_i <= lam_i`` (``lam_{N+1} = 0``)."""
    lam = tuple(lam)
    out = [()]
    for i in range(len(lam)):
        lo = lam[i + 1] if i + 1 < len(lam) else 0
        out = [m + (v,) for m in out for v in range(lo, lam[i] + 1)]
    return out


def sp_char(lam, n: int, h: SeriesFamily | None = None) -> LaurentPoly:
    """``sp_lam = sum over mu interlacing lam (same length) of (-1)^{|lam/mu|} so_mu``."""
    lam = pad(as_ints(lam), n)
    h = _family(h, Kind.H_PM, n)
    total = LaurentPoly.zero(n)
    for mu in interlacing_below(lam):
        term = so_jt(mu, n, h)
        total = total + (term if (sum(lam) - sum(mu)) % 2 == 0 else -term)
    return total


def o_char(lam, n: int, h: SeriesFamily | None = None) -> LaurentPoly:
    """``o_lam = sum over valid lam - eps of (-1)^{|eps|} so_{lam - eps}``."""
    lam = pad(as_ints(lam), n)
    h = _family(h, Kind.H_PM, n)
    total = LaurentPoly.zero(n)
    for mu, k in epsilon_subtractions(lam):
        term = so_jt(mu.ints(), n, h)
        total = total + (term if k % 2 == 0 else -term)
    return total


def _pm_alternant(n: int, exps: Sequence[int], sign: int) -> LaurentPoly:
    rows = []
    for i in range(n):
        row = []
        for a in exps:
            row.append(LaurentPoly.var(n, i, a) + LaurentPoly.var(n, i, -a) * sign)
        rows.append(row)
    return determinant(rows, one=_one(n))


def sp_weyl(lam, n: int) -> LaurentPoly:
    """Cross-check: ``det(x^{lam_j+N-j+1} - x^{-(...)}) / det(x^{N-j+1} - x^{-(N-j+1)})``."""
    lam = pad(as_ints(lam), n)
    num = _pm_alternant(n, [lam[j] + n - j for j in range(n)], -1)
    return num.exact_div(_pm_alternant(n, [n - j for j in range(n)], -1))


def o_weyl(lam, n: int) -> LaurentPoly:
    """Cross-check: ``2/(1+[lam_N=0])`` times the ratio of symmetric alternants ``x^k + x^{-k}``."""
    lam = pad(as_ints(lam), n)
    num = _pm_alternant(n, [lam[j] + n - 1 - j for j in range(n)], 1)
    if lam[-1] > 0:
        num = num * 2
    return num.exact_div(_pm_alternant(n, [n - 1 - j for j in range(n)], 1))


# dual skew functions ------------------------------------------------------

DUAL_KINDS = ("SO*", "SP*", "O*")


def dual_skew_fn(kind: str, mu, nu, k: int, cap: int, f: SeriesFamily | None = None) -> TruncatedSeries:
    """``X*_{mu/nu}(y)`` as an ``l x l`` determinant of ``f_n(y)`` truncated at ``cap``.

    SO*: ``f_{nu_i-mu_j-i+j} - f_{nu_i+mu_j-i-j+2l+1}``;
    SP*: same with shift ``2(l+1)``; O*: ``+`` with shift ``2l``.
    """
    mu, nu = as_ints(mu), as_ints(nu)
    if len(mu) != len(nu):
        raise ValueError("dual skew functions need partitions of equal declared length")
    l = len(mu)
    try:
        sign, shift = {"SO*": (-1, 2 * l + 1), "SP*": (-1, 2 * l + 2), "O*": (1, 2 * l)}[kind]
    except KeyError:
        raise ValueError(f"unknown dual kind {kind!r}") from None
    if f is None:
        f = SeriesFamily(Kind.F_TRUNC, k, cap)
    elif f.kind is not Kind.F_TRUNC or f.nvars != k or f.cap != cap:
        raise ValueError(f"expected an F_TRUNC family with K={k}, D={cap}")
    rows = []
    for i in range(1, l + 1):
        row = []
        for j in range(1, l + 1):
            a = f(nu[i - 1] - mu[j - 1] - i + j)
            b = f(nu[i - 1] + mu[j - 1] - i - j + shift)
            row.append(a + b if sign > 0 else a - b)
        rows.append(row)
    return determinant(rows, one=TruncatedSeries.const(k, cap, 1))


# dispatch -----------------------------------------------------------------

def character(family: str, method: str, lam, n: int, mu=None, s: int | None = None) -> LaurentPoly:
    """Single entry point used by the command line."""
    if family == "so":
        if method == "bialternant":
            return so_bialternant(lam, n)
        if method in ("jt", "jacobi_trudi"):
            return so_jt(lam, n)
        if method == "skew_jt":
            return so_skew_jt(lam, mu or (), n)
        if method == "dual_jt":
            lam_i = strip(as_ints(lam))
            return so_skew_dual_jt(lam, mu or (), s if s is not None else (lam_i[0] if lam_i else 0), n)
        if method == "gt_sum":
            return so_skew_gt(lam, mu or (), n)
    elif family == "sp" and method == "transition":
        return sp_char(lam, n)
    elif family == "o" and method == "transition":
        return o_char(lam, n)
    elif family == "schur":
        if mu:
            if method not in ("jt", "jacobi_trudi", "skew_jt"):
                raise ValueError("skew Schur functions use the Jacobi-Trudi method")
            return skew_schur(lam, mu, n)
        if method in ("bialternant", "jt", "jacobi_trudi"):
            return schur(lam, n, method)
    raise ValueError(f"method {method!r} is not available for family {family!r}")
