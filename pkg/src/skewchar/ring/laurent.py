"""Multivariate Laurent polynomials with exact integer / alpha coefficients.

Exponents are stored doubled so half-integer powers such as ``x**(N - j + 1/2)``
stay integral.  A doubled exponent vector ``(e_0, ..., e_{n-1})`` is packed into
one Python int ``sum(e_i * BASE**i)`` with balanced digits, so multiplying
monomials is a single integer addition and integer comparison of packed keys
is a lexicographic monomial order (last variable most significant).
"""

from __future__ import annotations

import json
from fractions import Fraction

from . import alpha as _alpha

BASE = 1 << 20
_HALF = BASE >> 1


class StructureError(ValueError):
    """Operands live in different rings (variable count, degree cap, ...)."""


class InexactDivisionError(ArithmeticError):
    """Raised when a claimed exact quotient leaves a nonzero remainder."""


def pack(exps) -> int:
    v = 0
    for e in reversed(exps):
        if not -_HALF < e < _HALF:
            raise OverflowError(f"exponent {e} out of range")
        v = v * BASE + e
    return v


def unpack(v: int, n: int) -> tuple:
    out = []
    for _ in range(n):
        d = v % BASE
        if d >= _HALF:
            d -= BASE
        out.append(d)
        v = (v - d) // BASE
    return tuple(out)


def _is_scalar(c) -> bool:
    return isinstance(c, (int, _alpha.AlphaPoly))


class LaurentPoly:
    """Immutable Laurent polynomial in ``nvars`` variables.

    ``terms`` maps packed doubled-exponent keys to nonzero coefficients
    (``int`` or :class:`AlphaPoly`).  Use the ``from_*`` constructors.
    """

    __slots__ = ("nvars", "_t", "_hash")

    def __init__(self, nvars: int, terms: dict, _clean: bool = False):
        if nvars < 0:
            raise StructureError("variable count must be nonnegative")
        self.nvars = nvars
        self._t = terms if _clean else {k: c for k, c in terms.items() if c}
        self._hash = None

    # construction ------------------------------------------------------
    @classmethod
    def zero(cls, nvars: int) -> "LaurentPoly":
        return cls(nvars, {}, True)

    @classmethod
    def const(cls, nvars: int, c=1) -> "LaurentPoly":
        return cls(nvars, {0: c} if c else {}, True)

    @classmethod
    def var(cls, nvars: int, i: int, power=1) -> "LaurentPoly":
        """``x_{i+1} ** power`` (``power`` may be a half-integer)."""
        e = [0] * nvars
        e[i] = _double(power)
        return cls(nvars, {pack(e): 1}, True)

    @classmethod
    def monomial(cls, nvars: int, doubled_exps, c=1) -> "LaurentPoly":
        if len(doubled_exps) != nvars:
            raise StructureError("exponent vector length does not match variable count")
        return cls(nvars, {pack(doubled_exps): c} if c else {}, True)

    @classmethod
    def from_terms(cls, nvars: int, terms: dict, doubled: bool = False) -> "LaurentPoly":
        """Build from ``{exponent tuple: coeff}``; exponents in user units unless ``doubled``."""
        out: dict = {}
        for exps, c in terms.items():
            if len(exps) != nvars:
                raise StructureError("exponent vector length does not match variable count")
            d = tuple(exps) if doubled else tuple(_double(e) for e in exps)
            k = pack(d)
            out[k] = out.get(k, 0) + c
        return cls(nvars, out)

    # inspection --------------------------------------------------------
    def __bool__(self):
        return bool(self._t)

    def __len__(self):
        return len(self._t)

    def items(self):
        """``(doubled exponent tuple, coeff)`` pairs in sorted exponent order."""
        n = self.nvars
        return sorted((unpack(k, n), c) for k, c in self._t.items())

    def terms(self):
        """``(exponent tuple, coeff)`` pairs in user units; requires integral exponents."""
        out = []
        for d, c in self.items():
            if any(e % 2 for e in d):
                raise ValueError("polynomial has half-integer exponents")
            out.append((tuple(e // 2 for e in d), c))
        return out

    def coeff(self, exps, doubled: bool = False):
        d = tuple(exps) if doubled else tuple(_double(e) for e in exps)
        return self._t.get(pack(d), 0)

    @property
    def is_integral(self) -> bool:
        return all(e % 2 == 0 for d, _ in self.items() for e in d)

    def constant_term(self):
        return self._t.get(0, 0)

    def alpha_degree(self) -> int:
        return max((_alpha.alpha_degree(c) for c in self._t.values()), default=-1)

    def abs_coeff_sum(self) -> int:
        total = 0
        for c in self._t.values():
            if not isinstance(c, int):
                raise TypeError("abs_coeff_sum needs integer coefficients")
            total += abs(c)
        return total

    # arithmetic --------------------------------------------------------
    def _check(self, other: "LaurentPoly"):
        if self.nvars != other.nvars:
            raise StructureError(f"variable counts differ: {self.nvars} vs {other.nvars}")

    def __add__(self, other):
        if isinstance(other, LaurentPoly):
            self._check(other)
            a, b = self._t, other._t
            if len(a) < len(b):
                a, b = b, a
            out = dict(a)
            for k, c in b.items():
                s = out.get(k, 0) + c
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
            return LaurentPoly(self.nvars, out, True)
        if _is_scalar(other):
            return self + LaurentPoly.const(self.nvars, other)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.nvars, {k: -c for k, c in self._t.items()}, True)

    def __sub__(self, other):
        if isinstance(other, LaurentPoly) or _is_scalar(other):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        if _is_scalar(other):
            return (-self) + other
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, LaurentPoly):
            self._check(other)
            a, b = self._t, other._t
            if not a or not b:
                return LaurentPoly(self.nvars, {}, True)
            if len(a) < len(b):
                a, b = b, a
            out: dict = {}
            get = out.get
            for kb, cb in b.items():
                for ka, ca in a.items():
                    k = ka + kb
                    out[k] = get(k, 0) + ca * cb
            return LaurentPoly(self.nvars, out)
        if _is_scalar(other):
            if not other:
                return LaurentPoly(self.nvars, {}, True)
            return LaurentPoly(self.nvars, {k: c * other for k, c in self._t.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("use exact_div for negative powers")
        result = LaurentPoly.const(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, doubled_exps) -> "LaurentPoly":
        """Multiply by the monomial with the given doubled exponents."""
        s = pack(doubled_exps)
        return LaurentPoly(self.nvars, {k + s: c for k, c in self._t.items()}, True)

    def exact_div(self, den: "LaurentPoly") -> "LaurentPoly":
        """Quotient ``q`` with ``q * den == self``; raises InexactDivisionError otherwise.

        Leading-term elimination in the packed lex order.  Monomials are units
        in the Laurent ring, so the only obstruction is the lower bound every
        quotient exponent must respect: ``min(num) - min(den)``.
        """
        if _is_scalar(den):
            den = LaurentPoly.const(self.nvars, den)
        self._check(den)
        if not den:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = dict(self._t)
        if not rem:
            return LaurentPoly(self.nvars, {}, True)
        dterms = den._t
        dlead = max(dterms)
        dlc = dterms[dlead]
        floor = min(rem) - min(dterms)
        quot = {}
        while rem:
            m = max(rem)
            qe = m - dlead
            if qe < floor:
                raise InexactDivisionError("nonzero remainder in exact division")
            try:
                qc = _alpha.exact_div(rem[m], dlc)
            except ArithmeticError as exc:
                raise InexactDivisionError(str(exc)) from None
            quot[qe] = qc
            for k, c in dterms.items():
                kk = k + qe
                v = rem.get(kk, 0) - qc * c
                if v:
                    rem[kk] = v
                else:
                    rem.pop(kk, None)
        return LaurentPoly(self.nvars, quot, True)

    # comparison --------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.nvars == other.nvars and self._t == other._t
        if _is_scalar(other):
            if not other:
                return not self._t
            return len(self._t) == 1 and self._t.get(0) == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._t.items())))
        return self._hash

    # transformations ---------------------------------------------------
    def map_coeffs(self, fn) -> "LaurentPoly":
        return LaurentPoly(self.nvars, {k: fn(c) for k, c in self._t.items()})

    def specialize_alpha(self, value: int) -> "LaurentPoly":
        return self.map_coeffs(lambda c: _alpha.evaluate(c, value))

    def embed(self, nvars: int, positions) -> "LaurentPoly":
        """Rename variable ``i`` to ``positions[i]`` inside an ``nvars``-variable ring."""
        if len(positions) != self.nvars:
            raise StructureError("one target position per variable is required")
        out = {}
        for k, c in self._t.items():
            e = [0] * nvars
            for i, v in zip(positions, unpack(k, self.nvars)):
                e[i] = v
            out[pack(e)] = c
        return LaurentPoly(nvars, out, True)

    def substitute_monomials(self, images) -> "LaurentPoly":
        """Ring map sending ``x_i`` to the Laurent polynomial ``images[i]``."""
        if len(images) != self.nvars:
            raise StructureError("one image per variable is required")
        target = images[0].nvars if images else 0
        total = LaurentPoly.zero(target)
        for d, c in self.items():
            term = LaurentPoly.const(target, c)
            for img, e in zip(images, d):
                if e % 2:
                    raise ValueError("cannot substitute into half-integer exponents")
                p = e // 2
                if p >= 0:
                    term = term * img**p
                else:
                    term = LaurentPoly.const(target, 1).exact_div(img**(-p)) * term
            total = total + term
        return total

    # rendering ---------------------------------------------------------
    def to_json(self) -> dict:
        items = self.items()
        return {
            "vars": self.nvars,
            "half_exponents": any(e % 2 for d, _ in items for e in d),
            "terms": [{"exp": list(d), "coeff": _alpha.coeff_to_json(c)} for d, c in items],
        }

    def canonical_json(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))

    @classmethod
    def from_json(cls, obj) -> "LaurentPoly":
        if isinstance(obj, str):
            obj = json.loads(obj)
        n = int(obj["vars"])
        terms = {}
        for t in obj["terms"]:
            terms[tuple(int(e) for e in t["exp"])] = _alpha.coeff_from_json(t["coeff"])
        return cls.from_terms(n, terms, doubled=True)

    def __repr__(self):
        return f"LaurentPoly({self.nvars}, {str(self)!r})"

    def __str__(self):
        if not self._t:
            return "0"
        pieces = []
        for d, c in sorted(self.items(), key=lambda it: tuple(-e for e in it[0])):
            mono = "*".join(_fmt_power(i, e) for i, e in enumerate(d) if e)
            cs = _alpha.alpha_str(c)
            if not mono:
                pieces.append(cs)
            elif c == 1:
                pieces.append(mono)
            elif c == -1:
                pieces.append("-" + mono)
            else:
                pieces.append(f"{cs}*{mono}")
        return " + ".join(pieces).replace("+ -", "- ")


def _double(e) -> int:
    d = Fraction(e) * 2
    if d.denominator != 1:
        raise ValueError(f"exponent {e} is not a multiple of 1/2")
    return int(d)


def _fmt_power(i: int, d: int) -> str:
    name = f"x{i + 1}"
    if d == 2:
        return name
    if d % 2 == 0:
        return f"{name}^{d // 2}"
    return f"{name}^({d}/2)"
