from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from skewchar.partitions import (
    GeneralizedPartition,
    conjugate,
    contains,
    epsilon_subtractions,
    generalized_partitions,
    gt_chains,
    interlacings,
    partitions,
)


def gp(*parts):
    return GeneralizedPartition.of(parts)


@pytest.mark.parametrize("lam, expected", [((2, 1), (2, 1)), ((3,), (1, 1, 1)), ((4, 2, 1), (3, 2, 1, 1))])
def test_conjugate(lam, expected):
    assert conjugate(lam) == gp(*expected)


def test_conjugate_rejects_half_parts():
    with pytest.raises(ValueError):
        conjugate(gp(Fraction(1, 2)))


def test_interlacings():
    assert interlacings((1,), half_last=True) == [gp(0), gp(Fraction(1, 2)), gp(1)]
    assert set(interlacings((2, 1))) == {gp(2), gp(1)}
    assert interlacings((0,)) == [gp()]


def test_epsilon_subtractions():
    assert epsilon_subtractions((1,)) == [(gp(1), 0), (gp(0), 1)]
    assert epsilon_subtractions((0, 0)) == [(gp(0, 0), 0)]
    assert sorted(epsilon_subtractions((2, 2)), key=lambda t: t[1]) == [
        (gp(2, 2), 0), (gp(2, 1), 1), (gp(1, 1), 2)]


def test_gt_chain_counts():
    assert len(list(gt_chains((1,), (), 1))) == 3
    assert len(list(gt_chains((1,), (1,), 1))) == 1
    assert list(gt_chains((1,), (2,), 1)) == []


def test_zeros_are_tracked():
    assert gp(1, 0) != gp(1)
    assert gp(1, 0).length == 2 and gp(1, 0).nonzero_length() == 1


def test_partition_validation():
    with pytest.raises(ValueError):
        gp(1, 2)
    with pytest.raises(ValueError):
        gp(Fraction(1, 3))


def test_json_round_trip():
    p = gp(2, Fraction(3, 2), 0)
    assert p.to_json() == {"doubled": [4, 3, 0], "length": 3}
    assert GeneralizedPartition.from_json(p.to_json()) == p


def test_partition_counts():
    assert [len(list(partitions(n))) for n in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]


@given(st.integers(0, 8))
def test_conjugate_is_involution(n):
    for lam in partitions(n):
        assert conjugate(conjugate(lam).ints()).ints() == lam


@given(st.integers(0, 3), st.integers(0, 5))
def test_generalized_partitions_exact_length(length, size):
    for p in generalized_partitions(length, size):
        assert len(p) == length and sum(p) <= size
        assert all(p[i] >= p[i + 1] for i in range(length - 1))


def test_gt_chain_rows_are_contained():
    for chain in gt_chains((2, 1), (1,), 1):
        rows = [r.doubled for r in chain.rows]
        assert rows[0] == (2,) and rows[-1] == (4, 2)
        for r in rows:
            assert contains([x for x in r], [2])
