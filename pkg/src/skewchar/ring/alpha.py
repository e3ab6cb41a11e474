"""Univariate polynomials in the formal parameter alpha over the integers.

Values that do not involve alpha are always plain Python ints, so the zero
coefficient has exactly one representation (``0``).
"""

from __future__ import annotations


def normalize(coeffs) -> "int | AlphaPoly":
    """Return the canonical coefficient for a dense list ``[c0, c1, ...]``."""
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if len(coeffs) <= 1:
        return coeffs[0] if coeffs else 0
    return AlphaPoly(coeffs, _trusted=True)


def _dense(c) -> tuple:
    if isinstance(c, AlphaPoly):
        return c.coeffs
    if isinstance(c, int):
        return (c,)
    raise TypeError(f"not an alpha coefficient: {c!r}")


class AlphaPoly:
    """Dense polynomial ``c0 + c1*alpha + ...`` with degree >= 1."""

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs, _trusted=False):
        coeffs = tuple(int(c) for c in coeffs)
        if not _trusted and (len(coeffs) < 2 or coeffs[-1] == 0):
            raise ValueError("AlphaPoly needs degree >= 1 without trailing zeros; use normalize()")
        self.coeffs = coeffs
        self._hash = None

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self):
        return True

    def __eq__(self, other):
        if isinstance(other, AlphaPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return False
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("alpha", self.coeffs))
        return self._hash

    def __add__(self, other):
        if isinstance(other, int):
            return normalize((self.coeffs[0] + other,) + self.coeffs[1:])
        if not isinstance(other, AlphaPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return normalize(out)

    __radd__ = __add__

    def __neg__(self):
        return AlphaPoly([-c for c in self.coeffs], _trusted=True)

    def __sub__(self, other):
        if isinstance(other, (int, AlphaPoly)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, int):
            return (-self) + other
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return 0
            return AlphaPoly([c * other for c in self.coeffs], _trusted=True)
        if not isinstance(other, AlphaPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return normalize(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of alpha polynomial")
        result = 1
        base = self
        while k:
            if k & 1:
                result = base * result
            base = base * base
            k >>= 1
        return result

    def evaluate(self, value: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def __repr__(self):
        return f"AlphaPoly({list(self.coeffs)})"

    def __str__(self):
        return alpha_str(self)

    def to_json(self):
        return {"alpha": [str(c) for c in self.coeffs]}


ALPHA = AlphaPoly((0, 1))


def alpha_degree(c) -> int:
    """Degree in alpha; ``-1`` for the zero coefficient."""
    if isinstance(c, AlphaPoly):
        return c.degree
    return 0 if c else -1


def evaluate(c, value: int) -> int:
    return c.evaluate(value) if isinstance(c, AlphaPoly) else c


def exact_div(a, b):
    """Exact quotient of alpha coefficients; raises ArithmeticError otherwise."""
    if isinstance(a, int) and isinstance(b, int):
        if b == 0:
            raise ZeroDivisionError("division by zero coefficient")
        q, r = divmod(a, b)
        if r:
            raise ArithmeticError(f"inexact division: {a} / {b}")
        return q
    num = list(_dense(a))
    den = _dense(b)
    if not any(den):
        raise ZeroDivisionError("division by zero coefficient")
    if len(num) < len(den):
        if any(num):
            raise ArithmeticError(f"inexact division: {a!r} / {b!r}")
        return 0
    lead = den[-1]
    quot = [0] * (len(num) - len(den) + 1)
    for k in range(len(quot) - 1, -1, -1):
        q, r = divmod(num[k + len(den) - 1], lead)
        if r:
            raise ArithmeticError(f"inexact division: {a!r} / {b!r}")
        quot[k] = q
        if q:
            for i, d in enumerate(den):
                num[k + i] -= q * d
    if any(num):
        raise ArithmeticError(f"inexact division: {a!r} / {b!r}")
    return normalize(quot)


def coeff_to_json(c):
    if isinstance(c, AlphaPoly):
        return c.to_json()
    return str(c)


def coeff_from_json(obj):
    if isinstance(obj, str):
        return int(obj)
    if isinstance(obj, int):
        return obj
    if isinstance(obj, dict) and "alpha" in obj:
        return normalize(int(c) for c in obj["alpha"])
    raise ValueError(f"bad coefficient: {obj!r}")


def alpha_str(c) -> str:
    if not isinstance(c, AlphaPoly):
        return str(c)
    parts = []
    for k, a in enumerate(c.coeffs):
        if a == 0:
            continue
        mono = "" if k == 0 else ("a" if k == 1 else f"a^{k}")
        if not mono:
            parts.append(str(a))
        elif a == 1:
            parts.append(mono)
        elif a == -1:
            parts.append("-" + mono)
        else:
            parts.append(f"{a}*{mono}")
    return "(" + " + ".join(parts).replace("+ -", "- ") + ")"
