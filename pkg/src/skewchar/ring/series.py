"""Multivariate power series in ``y_1..y_K`` truncated at total degree ``D``.

Coefficients are ring elements: ints for pure series such as ``f_n(y)``, or
:class:`LaurentPoly` in a second alphabet ``x``.  Keys pack the total degree
as the most significant digit, so sorting keys sorts by degree first and a
product key overflows the cap exactly when the total degree exceeds ``D``.
"""

from __future__ import annotations

import json

from . import alpha as _alpha
from .laurent import LaurentPoly, StructureError, InexactDivisionError

_YBITS = 12
_YBASE = 1 << _YBITS


def _coeff_json(c):
    if isinstance(c, LaurentPoly):
        return c.to_json()
    return _alpha.coeff_to_json(c)


class TruncatedSeries:
    __slots__ = ("nvars", "cap", "_t", "_limit")

    def __init__(self, nvars: int, cap: int, terms: dict, _clean: bool = False):
        if nvars < 1:
            raise StructureError("series need at least one variable")
        if cap < 0:
            raise StructureError("degree cap must be nonnegative")
        self.nvars = nvars
        self.cap = cap
        self._limit = (cap + 1) << (_YBITS * nvars)
        if _clean:
            self._t = terms
        else:
            self._t = {k: c for k, c in terms.items() if c and k < self._limit}

    # keys --------------------------------------------------------------
    def _key(self, exps) -> int:
        if len(exps) != self.nvars:
            raise StructureError("y-exponent vector length does not match variable count")
        v = sum(exps)
        for e in reversed(exps):
            if e < 0:
                raise ValueError("power series exponents must be nonnegative")
            v = (v << _YBITS) | e
        return v

    def _unkey(self, k: int) -> tuple:
        out = []
        for _ in range(self.nvars):
            out.append(k & (_YBASE - 1))
            k >>= _YBITS
        return tuple(out)

    # construction ------------------------------------------------------
    @classmethod
    def zero(cls, nvars: int, cap: int) -> "TruncatedSeries":
        return cls(nvars, cap, {}, True)

    @classmethod
    def const(cls, nvars: int, cap: int, c=1) -> "TruncatedSeries":
        return cls(nvars, cap, {0: c} if c else {}, True)

    @classmethod
    def monomial(cls, nvars: int, cap: int, exps, c=1) -> "TruncatedSeries":
        s = cls(nvars, cap, {}, True)
        if sum(exps) <= cap and c:
            s._t[s._key(tuple(exps))] = c
        return s

    @classmethod
    def from_terms(cls, nvars: int, cap: int, terms: dict) -> "TruncatedSeries":
        s = cls(nvars, cap, {}, True)
        out = {}
        for exps, c in terms.items():
            if sum(exps) <= cap:
                k = s._key(tuple(exps))
                out[k] = out.get(k, 0) + c
        return cls(nvars, cap, out)

    @classmethod
    def from_poly(cls, poly: LaurentPoly, cap: int) -> "TruncatedSeries":
        """Read a polynomial in ``y`` (nonnegative integer exponents) as a series."""
        return cls.from_terms(poly.nvars, cap, dict(poly.terms()))

    @classmethod
    def geometric(cls, nvars: int, cap: int, exps, c=1) -> "TruncatedSeries":
        """``1 / (1 - c * y**exps)`` truncated at the cap."""
        deg = sum(exps)
        if deg <= 0:
            raise ValueError("geometric series needs a positive-degree monomial")
        terms = {}
        power = 1
        for k in range(cap // deg + 1):
            terms[tuple(k * e for e in exps)] = power
            power = power * c
        return cls.from_terms(nvars, cap, terms)

    # inspection --------------------------------------------------------
    def __bool__(self):
        return bool(self._t)

    def items(self):
        return sorted((self._unkey(k), c) for k, c in self._t.items())

    def coeff(self, exps):
        if sum(exps) > self.cap:
            raise ValueError("requested coefficient lies above the degree cap")
        return self._t.get(self._key(tuple(exps)), 0)

    def min_degree(self):
        if not self._t:
            return None
        return min(self._t) >> (_YBITS * self.nvars)

    # arithmetic --------------------------------------------------------
    def _check(self, other: "TruncatedSeries"):
        if self.nvars != other.nvars or self.cap != other.cap:
            raise StructureError(
                f"series rings differ: K={self.nvars},D={self.cap} vs K={other.nvars},D={other.cap}"
            )

    def __add__(self, other):
        if isinstance(other, TruncatedSeries):
            self._check(other)
            out = dict(self._t)
            for k, c in other._t.items():
                s = out.get(k, 0) + c
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
            return TruncatedSeries(self.nvars, self.cap, out, True)
        if isinstance(other, (int, _alpha.AlphaPoly, LaurentPoly)):
            return self + TruncatedSeries.const(self.nvars, self.cap, other)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(self.nvars, self.cap, {k: -c for k, c in self._t.items()}, True)

    def __sub__(self, other):
        if isinstance(other, (TruncatedSeries, int, _alpha.AlphaPoly, LaurentPoly)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            self._check(other)
            limit = self._limit
            b = sorted(other._t.items())
            out: dict = {}
            get = out.get
            for ka, ca in self._t.items():
                room = limit - ka
                for kb, cb in b:
                    if kb >= room:
                        break
                    k = ka + kb
                    out[k] = get(k, 0) + ca * cb
            return TruncatedSeries(self.nvars, self.cap, out)
        if isinstance(other, (int, _alpha.AlphaPoly, LaurentPoly)):
            if not other:
                return TruncatedSeries.zero(self.nvars, self.cap)
            return TruncatedSeries(self.nvars, self.cap, {k: c * other for k, c in self._t.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = TruncatedSeries.const(self.nvars, self.cap, 1)
        for _ in range(k):
            result = result * self
        return result

    def truncate(self, cap: int) -> "TruncatedSeries":
        if cap > self.cap:
            raise ValueError("cannot raise the degree cap of a truncated series")
        limit = (cap + 1) << (_YBITS * self.nvars)
        return TruncatedSeries(self.nvars, cap, {k: c for k, c in self._t.items() if k < limit}, True)

    def divide_scalar(self, d: int) -> "TruncatedSeries":
        """Exact division of every coefficient by the integer ``d``."""
        out = {}
        for k, c in self._t.items():
            if isinstance(c, LaurentPoly):
                out[k] = c.exact_div(LaurentPoly.const(c.nvars, d))
            else:
                try:
                    out[k] = _alpha.exact_div(c, d)
                except ArithmeticError as exc:
                    raise InexactDivisionError(str(exc)) from None
        return TruncatedSeries(self.nvars, self.cap, out, True)

    def map_coeffs(self, fn) -> "TruncatedSeries":
        return TruncatedSeries(self.nvars, self.cap, {k: fn(c) for k, c in self._t.items()})

    # comparison --------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, TruncatedSeries):
            return self.nvars == other.nvars and self.cap == other.cap and self._t == other._t
        if isinstance(other, (int, LaurentPoly)):
            return self == TruncatedSeries.const(self.nvars, self.cap, other)
        return NotImplemented

    __hash__ = None

    # rendering ---------------------------------------------------------
    def to_json(self) -> dict:
        return {
            "yvars": self.nvars,
            "cap": self.cap,
            "terms": [{"yexp": list(e), "coeff": _coeff_json(c)} for e, c in self.items()],
        }

    def canonical_json(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))

    def __repr__(self):
        return f"TruncatedSeries(K={self.nvars}, D={self.cap}, {str(self)!r})"

    def __str__(self):
        if not self._t:
            return "O(y^%d)" % (self.cap + 1)
        parts = []
        for e, c in self.items():
            mono = "*".join(
                (f"y{i + 1}" if p == 1 else f"y{i + 1}^{p}") for i, p in enumerate(e) if p
            )
            cs = str(c)
            if isinstance(c, LaurentPoly) and len(c) > 1:
                cs = f"({cs})"
            if not mono:
                parts.append(cs)
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{cs}*{mono}")
        return (" + ".join(parts) + f" + O(y^{self.cap + 1})").replace("+ -", "- ")
