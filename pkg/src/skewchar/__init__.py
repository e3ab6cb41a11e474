"""Exact symbolic odd orthogonal, symplectic and even orthogonal characters."""

from .characters import (
    dual_skew_fn,
    o_char,
    schur,
    skew_schur,
    so_bialternant,
    so_jt,
    so_skew_dual_jt,
    so_skew_gt,
    so_skew_jt,
    sp_char,
)
from .fock import straighten
from .interp import bd_epsilon_expansion, s_BC, s_BD, s_CD
from .partitions import GeneralizedPartition
from .ring import ALPHA, AlphaPoly, LaurentPoly, TruncatedSeries, determinant

__all__ = [
    "ALPHA",
    "AlphaPoly",
    "GeneralizedPartition",
    "LaurentPoly",
    "TruncatedSeries",
    "bd_epsilon_expansion",
    "determinant",
    "dual_skew_fn",
    "o_char",
    "s_BC",
    "s_BD",
    "s_CD",
    "schur",
    "skew_schur",
    "so_bialternant",
    "so_jt",
    "so_skew_dual_jt",
    "so_skew_gt",
    "so_skew_jt",
    "sp_char",
    "straighten",
]
