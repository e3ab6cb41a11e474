import pytest
from hypothesis import given, strategies as st

from skewchar.fock import (
    BRA,
    KET,
    ModeMonomial,
    bra,
    dual_conjugate_closed_form,
    dual_conjugate_pair,
    ket,
    pair,
    pair_words,
    straighten,
    straighten_rewrite,
    vacuum_expectation,
)


@pytest.mark.parametrize("modes, sign, label", [((1, 2), 0, None), ((0, 2), -1, (1, 1)), ((2, 1), 1, (2, 1))])
def test_ket_examples(modes, sign, label):
    el = straighten(ket(modes))
    assert (el.sign, el.label) == (sign, label)
    assert straighten_rewrite(ket(modes)) == el


def test_json_shapes():
    assert straighten(ket((0, 2))).to_json() == {"sign": -1, "label": [1, 1]}
    assert straighten(ket((1, 2))).to_json()["zero"] is True


def test_pair_examples():
    one = straighten(ket((1,)))
    assert pair(straighten(bra((1,))), one) == 1
    assert pair(straighten(bra((2,))), one) == 0
    assert pair(straighten(bra((1, 0))), straighten(ket((1, 0)))) == 1
    with pytest.raises(ValueError):
        pair(straighten(bra((1,))), straighten(ket((1, 0))))


def test_pair_words_length_mismatch():
    with pytest.raises(ValueError):
        pair_words((1,), (1, 0))


@pytest.mark.parametrize("mu, lam, expected", [((1, 1), (2,), 1), ((1,), (1,), -1), ((2,), (2,), 0)])
def test_dual_conjugate_examples(mu, lam, expected):
    assert dual_conjugate_pair(mu, lam) == expected
    assert dual_conjugate_closed_form(mu, lam) == expected


def test_bra_vacuum_reflection():
    # <0|U*_1 = -<0|U*_0 : a bra word (-1) folds to -<(0)|
    el = straighten(bra((-1,)))
    assert (el.sign, el.label) == (-1, (0,))
    assert straighten_rewrite(bra((-1,))) == el


def test_rewrite_step_budget():
    with pytest.raises(RuntimeError):
        straighten_rewrite(ket((0, 5, 9)), max_steps=1)


def test_side_validation():
    with pytest.raises(ValueError):
        ModeMonomial("left", (1,))


words = st.lists(st.integers(-4, 5), min_size=0, max_size=4)


@given(words, st.sampled_from([KET, BRA]))
def test_engines_agree(modes, side):
    m = ModeMonomial(side, tuple(modes))
    assert straighten(m) == straighten_rewrite(m)


@given(st.lists(st.integers(0, 4), min_size=1, max_size=3), st.lists(st.integers(0, 4), min_size=1, max_size=3))
def test_vacuum_expectation_matches_normal_forms(a, b):
    if len(a) != len(b):
        return
    expected = pair(straighten(bra(tuple(a))), straighten(ket(tuple(b))))
    assert vacuum_expectation(tuple(a), tuple(b)) == expected
