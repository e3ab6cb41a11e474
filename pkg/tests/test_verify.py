import json

import pytest

from skewchar import verify as V


def test_cauchy_so_examples():
    assert V.cauchy_so(1, 4).passed
    assert V.cauchy_so(2, 5).passed


def test_cauchy_so_mutation_shows_degree_one():
    rep = V.cauchy_so(1, 4, mutate=True)
    assert not rep.passed
    assert sum(rep.discrepancy["yexp"]) == 1


@pytest.mark.parametrize("kind", ["so", "sp", "o"])
def test_cauchy_reduced(kind):
    rep = V.cauchy_reduced(kind, 1, 4)
    assert rep.passed
    assert rep.details["omitted_layer_vanishes"]


def test_o_star_readings_are_reported():
    rep = V.cauchy_reduced("o", 2, 4)
    assert rep.details["readings"] == {"printed": "fail", "delta": "fail", "half": "pass"}


@pytest.mark.parametrize("kind", ["so", "sp", "o"])
def test_classical_cauchy(kind):
    assert V.cauchy_classical(kind, 2, 4).passed


def test_skew_cauchy_examples():
    assert V.skew_cauchy_so((0,), (), deg=4).passed
    assert V.skew_cauchy_so((1,), (0,), deg=4).passed
    assert V.skew_cauchy_so((1,), (1,), deg=4).passed


def test_skew_cauchy_reduces_to_plain():
    plain = V.cauchy_reduced("so", 1, 4)
    skew = V.skew_cauchy_so((0,), (), n=1, k=1, deg=4)
    assert plain.passed and skew.passed


def test_toeplitz_hankel_examples():
    assert V.toeplitz_hankel((1,), 1, 1, deg=6).passed
    assert V.toeplitz_hankel((), 1, 2, deg=6).passed
    assert V.toeplitz_hankel((), 1, 3, deg=6).passed


def test_third_identity_with_positive_last_part():
    # the determinant is twice the right side here as well; only a uniform 1/2 matches
    rep = V.toeplitz_hankel((1,), 1, 3, deg=6)
    assert not rep.passed
    assert rep.details["uniform_half_matches"]


def test_corollary():
    for l in (1, 2):
        for which in (1, 2, 3):
            assert V.toeplitz_hankel_corollary(l, which, deg=6).passed


@pytest.mark.parametrize("l, case", [(2, "even_conj"), (1, "all"), (2, "even"), (3, "all")])
def test_littlewood(l, case):
    assert V.littlewood(l, case, deg=4).passed


def test_polynomial_suites():
    assert V.transitions((1,), 1).passed
    assert V.branching((1,)).passed
    assert V.vandermonde(2).passed


@pytest.mark.parametrize("name", sorted(V.SUITES))
def test_every_suite_has_a_failing_mutation(name):
    params = V.grid(name)[0]
    assert not V.run_instance(name, params, mutate=True).passed


@pytest.mark.parametrize("suite, params", [
    ("cauchy_so", dict(n=2, deg=5)),
    ("cauchy_reduced", dict(kind="sp", n=2, deg=5)),
    ("skew_cauchy_so", dict(lam=(2, 0), mu=(1,), n=1, k=1, deg=5)),
    ("littlewood", dict(l=2, case="all", deg=5)),
    ("toeplitz_hankel", dict(lam=(1,), l=2, which=2, deg=6)),
])
def test_truncation_soundness(suite, params):
    assert V.run_instance(suite, params).passed
    lower = dict(params, deg=params["deg"] - 1)
    assert V.run_instance(suite, lower).passed


def test_reports_are_deterministic():
    a = [json.dumps(r.to_json()) for r in V.run_suite("skew_cauchy_so", l=1)]
    b = [json.dumps(r.to_json()) for r in V.run_suite("skew_cauchy_so", l=1, threads=3)]
    assert a == b


def test_fail_report_carries_both_sides():
    rep = V.vandermonde(2, mutate=True).to_json()
    assert rep["status"] == "fail" and rep["lhs"] and rep["rhs"] and rep["discrepancy"]
    assert "wall_time" not in rep


def test_unknown_suite():
    with pytest.raises(ValueError):
        V.grid("nope")
