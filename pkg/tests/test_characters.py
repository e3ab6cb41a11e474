import pytest

from skewchar.characters import (
    character,
    dual_skew_fn,
    o_char,
    o_weyl,
    schur,
    skew_schur,
    so_bialternant,
    so_jt,
    so_skew_dual_jt,
    so_skew_gt,
    so_skew_jt,
    sp_char,
    sp_weyl,
)
from skewchar.partitions import generalized_partitions, partitions_upto
from skewchar.ring import LaurentPoly, TruncatedSeries


def x(i=0, p=1, n=1):
    return LaurentPoly.var(n, i, p)


def so1(n=1):
    return sum((x(i, 1, n) + x(i, -1, n) for i in range(n)), LaurentPoly.const(n, 1))


def test_bialternant_examples():
    assert so_bialternant((), 1) == 1
    assert so_bialternant((1,), 1) == so1()
    assert so_bialternant((1,), 2) == so1(2)


def test_jt_examples():
    assert so_jt((1,), 1) == so1()
    assert so_jt((), 3) == 1
    assert so_jt((1, 1), 2) == so_bialternant((1, 1), 2)


def test_skew_jt_examples():
    assert so_skew_jt((1, 0), (1,), 1) == 1
    assert so_skew_jt((1, 0), (0,), 1) == x() + x(p=-1)
    assert so_skew_jt((1,), (), 1) == so1()


def test_dual_jt_examples():
    assert so_skew_dual_jt((1,), (), 1, 1) == so1()
    assert so_skew_dual_jt((), (), 0, 1) == 1
    assert so_skew_dual_jt((2, 1), (1,), 2, 1) == so_skew_jt((2, 1), (1,), 1)
    with pytest.raises(ValueError):
        so_skew_dual_jt((3,), (), 2, 1)


def test_gt_examples():
    assert so_skew_gt((1,), (), 1) == so1()
    assert so_skew_gt((2, 0), (2,), 1) == 1
    assert so_skew_gt((3, 1, 0), (3, 1), 1) == 1
    assert so_skew_gt((2, 1), (1,), 1) == so_skew_jt((2, 1), (1,), 1)


def test_skew_vanishes_outside_containment():
    for mu in generalized_partitions(1, 4):
        for lam in generalized_partitions(2, 4):
            if mu[0] > lam[0]:
                assert so_skew_jt(lam, mu, 1) == 0


def test_schur_examples():
    assert schur((1,), 2) == x(0, 1, 2) + x(1, 1, 2)
    assert schur((1, 1), 2) == x(0, 1, 2) * x(1, 1, 2)
    t = LaurentPoly.var
    assert skew_schur((2,), (1,), 2) == t(2, 0) + t(2, 1)


def test_schur_methods_agree():
    for n in (1, 2, 3):
        for lam in partitions_upto(5, n):
            assert schur(lam, n) == schur(lam, n, "jt")


def test_sp_o_examples():
    assert sp_char((1,), 1) == x() + x(p=-1)
    assert o_char((1,), 1) == x() + x(p=-1)
    assert sp_char((), 2) == 1


def test_transition_characters_match_weyl():
    for n in (1, 2, 3):
        for lam in partitions_upto(4, n):
            assert sp_char(lam, n) == sp_weyl(lam, n)
            assert o_char(lam, n) == o_weyl(lam, n)


def test_dual_skew_examples():
    assert dual_skew_fn("SO*", (), (), 1, 4) == 1
    # l = 1: f_0 - f_1 = 1/(1 + y)
    alt = TruncatedSeries.from_terms(1, 4, {(k,): (-1) ** k for k in range(5)})
    assert dual_skew_fn("SO*", (0,), (0,), 1, 4) == alt
    # shift 2(l+1) telescopes to a monomial
    assert dual_skew_fn("SP*", (0,), (0,), 1, 4) == 1
    assert dual_skew_fn("SP*", (0,), (1,), 1, 5) == TruncatedSeries.monomial(1, 5, [1])
    f = dual_skew_fn("O*", (2,), (0,), 1, 6)
    assert f == TruncatedSeries.from_terms(1, 6, {(2,): 2, (4,): 2, (6,): 2})


def test_dual_skew_length_mismatch():
    with pytest.raises(ValueError):
        dual_skew_fn("SO*", (1,), (1, 0), 1, 3)


def test_dispatch():
    assert character("so", "gt_sum", (1,), 1) == so1()
    assert character("schur", "jt", (2,), 2, mu=(1,)) == schur((1,), 2)
    with pytest.raises(ValueError):
        character("sp", "bialternant", (1,), 1)


def test_padding_invariance():
    assert so_jt((2, 1, 0, 0), 3) == so_jt((2, 1), 3)
    assert sp_char((1, 0), 2) == sp_char((1,), 2)
