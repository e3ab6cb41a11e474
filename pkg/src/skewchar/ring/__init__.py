"""Exact arithmetic: alpha-polynomials, Laurent polynomials, truncated series, determinants."""

import operator

from .alpha import ALPHA, AlphaPoly
from .laurent import InexactDivisionError, LaurentPoly, StructureError
from .matrix import SquareMatrix, determinant
from .series import TruncatedSeries

__all__ = [
    "ALPHA",
    "AlphaPoly",
    "InexactDivisionError",
    "LaurentPoly",
    "SquareMatrix",
    "StructureError",
    "TruncatedSeries",
    "determinant",
    "exact_div",
    "ring_arith",
]

_OPS = {"add": operator.add, "sub": operator.sub, "mul": operator.mul}


def ring_arith(a, b, op: str):
    """Apply ``add``/``sub``/``mul`` (``b`` ignored for ``neg``)."""
    if op == "neg":
        return -a
    try:
        fn = _OPS[op]
    except KeyError:
        raise ValueError(f"unknown ring operation {op!r}") from None
    return fn(a, b)


def exact_div(num: LaurentPoly, den: LaurentPoly) -> LaurentPoly:
    return num.exact_div(den)
