import pytest
from hypothesis import given, strategies as st

from skewchar.ring import (
    ALPHA,
    AlphaPoly,
    InexactDivisionError,
    LaurentPoly,
    SquareMatrix,
    StructureError,
    TruncatedSeries,
    determinant,
    exact_div,
    ring_arith,
)


def x(i=0, p=1, n=1):
    return LaurentPoly.var(n, i, p)


def test_square_of_binomial():
    p = x() + x(p=-1)
    assert ring_arith(p, p, "mul") == x(p=2) + 2 + x(p=-2)


def test_additive_inverse():
    p = x() * 3 - x(p=-2) + ALPHA
    assert ring_arith(p, ring_arith(p, None, "neg"), "add") == 0


def test_truncated_square():
    s = TruncatedSeries.const(1, 1, 1) + TruncatedSeries.monomial(1, 1, [1])
    sq = s * s
    assert sq.coeff([0]) == 1 and sq.coeff([1]) == 2
    assert sq == TruncatedSeries.from_terms(1, 1, {(0,): 1, (1,): 2})


def test_mismatched_rings():
    with pytest.raises(StructureError):
        x(n=1) + x(n=2)
    with pytest.raises(StructureError):
        TruncatedSeries.const(1, 2, 1) + TruncatedSeries.const(1, 3, 1)


def test_exact_division_examples():
    num = x(p=3) - x(p=-3)
    den = x() - x(p=-1)
    assert exact_div(num, den) == x(p=2) + 1 + x(p=-2)
    half = LaurentPoly.var(1, 0, "3/2") - LaurentPoly.var(1, 0, "-3/2")
    base = LaurentPoly.var(1, 0, "1/2") - LaurentPoly.var(1, 0, "-1/2")
    assert exact_div(half, base) == x() + 1 + x(p=-1)


def test_inexact_division_is_loud():
    with pytest.raises(InexactDivisionError):
        exact_div(x() + 2, x() + 1)


def test_determinant_examples():
    one = LaurentPoly.const(1, 1)
    ident = [[one if i == j else LaurentPoly.zero(1) for j in range(3)] for i in range(3)]
    assert determinant(ident) == 1
    assert determinant([[0, 1], [1, 0]]) == -1
    h2_plus_h1 = x(p=2) + x() + 2 + x(p=-1) + x(p=-2)
    assert determinant([[one, h2_plus_h1], [LaurentPoly.zero(1), one]]) == 1


def test_non_square_rejected():
    with pytest.raises(StructureError):
        SquareMatrix([[1, 2], [3]])


def test_half_exponents_in_user_terms():
    p = LaurentPoly.var(1, 0, "1/2")
    assert not p.is_integral
    with pytest.raises(ValueError):
        p.terms()
    assert (p * p).terms() == [((1,), 1)]


def test_json_round_trip_and_schema():
    p = (x() + 1 + x(p=-1)) * ALPHA
    obj = p.to_json()
    assert obj["vars"] == 1 and obj["half_exponents"] is False
    assert [t["exp"] for t in obj["terms"]] == [[-2], [0], [2]]
    assert LaurentPoly.from_json(p.canonical_json()) == p


def test_alpha_poly_arith():
    a = AlphaPoly((1, 2))
    assert (a * a).evaluate(3) == 49
    assert (ALPHA - ALPHA) == 0


def test_series_scalar_division():
    s = TruncatedSeries.from_terms(1, 3, {(0,): 2, (2,): 4})
    assert s.divide_scalar(2) == TruncatedSeries.from_terms(1, 3, {(0,): 1, (2,): 2})
    with pytest.raises(InexactDivisionError):
        TruncatedSeries.const(1, 3, 3).divide_scalar(2)


def test_geometric_series():
    g = TruncatedSeries.geometric(1, 5, [2])
    assert g == TruncatedSeries.from_terms(1, 5, {(0,): 1, (2,): 1, (4,): 1})


# properties -----------------------------------------------------------------

coeffs = st.integers(-3, 3)
exps = st.tuples(st.integers(-3, 3), st.integers(-3, 3))
polys = st.dictionaries(exps, coeffs, max_size=5).map(lambda d: LaurentPoly.from_terms(2, d))


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a


@given(polys, polys)
def test_division_undoes_multiplication(a, b):
    if not b:
        return
    assert exact_div(a * b, b) == a


@given(st.lists(st.lists(polys, min_size=3, max_size=3), min_size=3, max_size=3))
def test_cofactor_matches_bareiss(rows):
    assert determinant(rows, method="cofactor") == determinant(rows, method="bareiss")


@given(st.integers(1, 6))
def test_truncation_is_a_homomorphism(cap):
    a = TruncatedSeries.from_terms(2, cap, {(1, 0): 1, (0, 0): 1, (1, 1): -2})
    b = TruncatedSeries.from_terms(2, cap, {(0, 1): 3, (2, 0): 1})
    assert (a * b).truncate(cap - 1) == a.truncate(cap - 1) * b.truncate(cap - 1)
