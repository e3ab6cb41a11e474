"""Acceptance criteria 1-10: exact equality on every grid instance plus a wall-time budget.

Each test prints one ``criterion k: PASS|FAIL`` line.  Run directly with
``python3 tests/test_acceptance.py`` for the summary alone.
"""

import io
import sys
import time

import pytest

from skewchar import cli, verify

CRITERIA = {
    1: ("formula cross-agreement, |lam| <= 6, N <= 3", ["formula_agreement"], 60),
    2: ("skew JT = GT = dual JT, |lam| <= 5, l <= 2, N <= 2", ["skew_agreement"], 60),
    3: ("orthogonality tables, sizes <= 5, lengths <= 4", ["orthogonality"], 30),
    4: ("odd orthogonal Cauchy, N <= 2, cap 6", ["cauchy_so"], 60),
    5: ("skew Cauchy, l <= 1, |lam|, |mu| <= 2, N = K = 1, cap 5", ["skew_cauchy_so"], 120),
    6: ("Toeplitz-Hankel identities and corollary, l <= 3, |lam| <= 4, cap 8",
        ["toeplitz_hankel", "toeplitz_hankel_corollary"], 120),
    7: ("transitions and round trips, |lam| <= 5, N <= 3", ["transitions"], 30),
    8: ("interpolation endpoints and epsilon expansion, |lam| <= 5, N <= 3", ["interp_endpoints"], 60),
    9: ("branching at l = N = 1, |lam| <= 4", ["branching"], 30),
}
MUTATION_BUDGET = 300


def _line(k, ok, title, extra=""):
    msg = f"criterion {k}: {'PASS' if ok else 'FAIL'}  {title}{extra}"
    print(msg)
    return msg


def check_criterion(k):
    title, suites, budget = CRITERIA[k]
    t0 = time.perf_counter()
    reports = [r for name in suites for r in verify.run_suite(name)]
    elapsed = time.perf_counter() - t0
    failed = [r for r in reports if not r.passed]
    ok = not failed and elapsed < budget
    extra = f"  [{len(reports) - len(failed)}/{len(reports)} instances, {elapsed:.1f}s < {budget}s]"
    if k == 6 and failed:
        half = all(r.details.get("uniform_half_matches") for r in failed)
        extra += f"  failing: third identity with lam_l > 0 ({len(failed)}); uniform 1/2 reading matches: {half}"
    return ok, _line(k, ok, title, extra), failed, elapsed, budget


def check_mutations():
    t0 = time.perf_counter()
    survivors = []
    for name in sorted(verify.SUITES):
        code = cli.run(["verify", "--suite", name, "--mutate"], io.StringIO(), io.StringIO())
        if code == 0:
            survivors.append(name)
    elapsed = time.perf_counter() - t0
    ok = not survivors and elapsed < MUTATION_BUDGET
    extra = f"  [{len(verify.SUITES) - len(survivors)}/{len(verify.SUITES)} mutated suites exit nonzero, {elapsed:.1f}s]"
    return ok, _line(10, ok, "mutation sensitivity", extra), survivors


@pytest.mark.parametrize("k", sorted(CRITERIA))
def test_criterion(k, capsys):
    ok, line, failed, elapsed, budget = check_criterion(k)
    with capsys.disabled():
        print("\n" + line)
    assert elapsed < budget, f"criterion {k} took {elapsed:.1f}s"
    assert not failed, [r.params for r in failed]


def test_criterion_10_mutation(capsys):
    ok, line, survivors = check_mutations()
    with capsys.disabled():
        print("\n" + line)
    assert not survivors, survivors


if __name__ == "__main__":
    results = [check_criterion(k)[0] for k in sorted(CRITERIA)]
    results.append(check_mutations()[0])
    sys.exit(0 if all(results) else 1)
