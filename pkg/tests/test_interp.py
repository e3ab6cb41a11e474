import pytest

from skewchar.characters import o_char, so_jt, sp_char
from skewchar.interp import bd_epsilon_expansion, interpolating, s_BC, s_BD, s_CD
from skewchar.partitions import partitions_upto
from skewchar.ring import ALPHA, LaurentPoly


def x(p=1):
    return LaurentPoly.var(1, 0, p)


def test_bd_examples():
    assert s_BD((1,), 1) == x() + x(-1) + 1 - ALPHA
    assert s_BD((1,), 1, alpha=1) == o_char((1,), 1)
    for lam in partitions_upto(3, 2):
        if lam and (lam[0] > 2 or sum(lam) > 3):
            continue
        assert s_BD(lam, 2, alpha=0) == so_jt(lam, 2)


def test_bc_examples():
    assert s_BC((1,), 1) == x() + x(-1) + 1 + ALPHA
    assert s_BC((1,), 1, alpha=-1) == sp_char((1,), 1)
    for n in (1, 2):
        for lam in partitions_upto(4, n):
            assert s_BC(lam, n, alpha=0) == so_jt(lam, n)


def test_cd_examples():
    assert s_CD((1,), 1) == x() + x(-1)
    for n in (1, 2):
        for lam in partitions_upto(4, n):
            assert s_CD(lam, n, alpha=0) == sp_char(lam, n)
            assert s_CD(lam, n, alpha=1) == o_char(lam, n)


def test_epsilon_expansion():
    assert bd_epsilon_expansion((1,), 1) == so_jt((1,), 1) - ALPHA
    assert bd_epsilon_expansion((), 2) == 1
    assert bd_epsilon_expansion((2, 2), 2) == s_BD((2, 2), 2)


@pytest.mark.parametrize("family", ["BD", "BC", "CD"])
def test_zero_padding_is_harmless(family):
    for lam in partitions_upto(4, 2):
        assert interpolating(family, lam + (0,), 3) == interpolating(family, lam, 3)


def test_alpha_degrees():
    for n in (1, 2, 3):
        for lam in partitions_upto(4, n):
            assert s_BD(lam, n).alpha_degree() <= n
            assert s_CD(lam, n).alpha_degree() <= n


def test_length_guard():
    with pytest.raises(ValueError):
        s_BD((1, 1), 1)
