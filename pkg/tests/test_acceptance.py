"""The twelve acceptance criteria, each at its stated bounds and time limit.

Every test records its outcome in ``acceptance_log.CRITERIA``; a summary with one
PASS/FAIL line per criterion is printed at the end of the run.  The two
checks that depend on the "first disagreement > L/2" stabilization bound
are marked strict-xfail: the bound is false for small L (for example
F~_{0,0}(1) = 0 while its limit starts with 1), so they are reported as
FAIL rather than loosened.
"""

import functools
import subprocess
import sys
import time

import pytest

from acceptance_log import CRITERIA
from qgordon import agcore, paths, rrpoly, santos, series
from qgordon.report import VerificationReport


def record(number, part, reports=None, ok=None, elapsed=None, limit=None):
    if ok is None:
        ok = all(r.passed for r in reports)
    info = []
    if reports is not None:
        info.append(f"{sum(r.passed for r in reports)}/{len(reports)} reports")
    if elapsed is not None:
        info.append(f"{elapsed:.2f}s of {limit}s")
        ok = ok and elapsed < limit
    CRITERIA.setdefault(number, []).append((part, ok, ", ".join(info)))
    return ok


def timed(func, *args, **kwargs):
    start = time.perf_counter()
    out = func(*args, **kwargs)
    out = out if isinstance(out, list) else [out]
    return out, time.perf_counter() - start


def failing(reports):
    return [r.summary_line() for r in reports if not r.passed]


def test_criterion_01_finite_rr():
    reports, elapsed = timed(rrpoly.verify_finite_rr, 30)
    rec, e2 = timed(rrpoly.verify_recurrence, -10, 30)
    reports += rec
    elapsed += e2
    assert record(1, "eq-1.3/1.4 and recurrence", reports, elapsed=elapsed, limit=5), failing(reports)


def test_criterion_02_gis_finite():
    reports, elapsed = timed(rrpoly.verify_gis_finite, 25, 10)
    assert [r.grid for r in reports] == [{"L": [0, 25], "m": [0, 10]}, {"L": [0, 25], "M": [0, "L"]}]
    assert record(2, "eq-1.13/1.14", reports, elapsed=elapsed, limit=10), failing(reports)


def test_criterion_03_path_oracle():
    start = time.perf_counter()
    reports = paths.verify_path_lemma(16) + paths.verify_decompositions(16)
    elapsed = time.perf_counter() - start
    assert record(3, "eq-2.1/2.2/2.5/2.8/2.10", reports, elapsed=elapsed, limit=20), failing(reports)


def test_criterion_04_fibonacci():
    reports, elapsed = timed(rrpoly.fibonacci_checks, 30)
    assert record(4, "eq-2.13/2.14/2.15", reports, elapsed=elapsed, limit=1), failing(reports)


def test_criterion_05_ag_polynomial():
    start = time.perf_counter()
    reports = [agcore.verify_ag_polynomial(1, 12), agcore.verify_ag_polynomial(2, 12)]
    elapsed = time.perf_counter() - start
    ok = record(5, "eq-3.9 nu<=2 L<=12", reports, elapsed=elapsed, limit=60)
    nu3, e3 = timed(agcore.verify_ag_polynomial, 3, 8)
    ok = record(5, "eq-3.9 nu=3 L<=8", nu3, elapsed=e3, limit=60) and ok
    assert ok, failing(reports + nu3)


def test_criterion_06_recurrences():
    start = time.perf_counter()
    reports = []
    for nu in (1, 2):
        reports += agcore.verify_recurrences(nu, 12, (0, 1, 2, 5))
    elapsed = time.perf_counter() - start
    ids = {r.identity_id for r in reports}
    assert {"eq-3.10", "eq-3.13"} <= ids
    assert record(6, "eq-3.10/3.13", reports, elapsed=elapsed, limit=60), failing(reports)


def test_criterion_07_main_theorem():
    start = time.perf_counter()
    reports = []
    for nu in (1, 2):
        reports += agcore.verify_main_theorem(nu, 10)
    # the rank-one slice s = b = 1 must reproduce the negative-shift finite identity
    slice_ok = all(
        agcore.big_f(1, 1, 1, L, M) == agcore.main_theorem_rhs(1, 1, 1, L, M)
        == rrpoly.gis_negative_rhs(L, M) == rrpoly.f_shifted(0, 0, L, M)
        for L in range(11) for M in range(L + 1))
    elapsed = time.perf_counter() - start
    ok = record(7, "eq-3.19/3.20", reports, elapsed=elapsed, limit=120)
    ok = record(7, "nu=1 slice equals eq-1.14 values", ok=slice_ok) and ok
    assert ok, failing(reports)


def test_criterion_08_connection():
    start = time.perf_counter()
    reports = []
    for nu in (1, 2):
        reports += agcore.verify_connection(nu, 8)
        agcore.connection_coefficients(nu, 0)
    elapsed = time.perf_counter() - start
    assert record(8, "eq-3.16/3.18", reports, elapsed=elapsed, limit=10), failing(reports)


def test_criterion_09_appendix():
    reports, elapsed = timed(agcore.verify_appendix, (2, 3), 8, (0, 2), 20)
    assert [r.identity_id for r in reports] == ["eq-A.5", "eq-A.6", "eq-A.7", "eq-A.14"]
    assert record(9, "eq-A.5/A.6/A.7/A.14", reports, elapsed=elapsed, limit=60), failing(reports)


def test_criterion_11_santos():
    start = time.perf_counter()
    reports = [santos.verify_p1(16, 6), santos.verify_p2(16, (-6, 8))]
    elapsed = time.perf_counter() - start
    assert reports[1].grid == {"L": [0, 16], "M": [-6, 8]}
    assert record(11, "eq-P1/P2", reports, elapsed=elapsed, limit=30), failing(reports)


def _series_reports():
    start = time.perf_counter()
    reports = [series.rr_series_check(a, 50) for a in (0, 1)]
    reports += series.gis_series_check(6, 6, 50)
    reports += [series.ag_series_check(nu, 50) for nu in (1, 2)]
    variants = []
    for nu in (1, 2):
        for s in range(1, nu + 2):
            variants += series.ag_variant_series_check(nu, s, 4, 50, L_stable=20)
    elapsed = time.perf_counter() - start
    identities = reports + [r for r in variants if r.identity_id == "eq-3.21"]
    stabilization = [r for r in variants if r.identity_id == "eq-3.22"]
    return identities, stabilization, elapsed


def test_criterion_10_series_identities():
    identities, _, elapsed = _series_reports()
    windows_ok = all(r.window[1] - max(r.window[0], 0) >= 20 and "weak" not in r.notes for r in identities)
    ok = record(10, "eq-1.1/1.11/1.12/3.1/3.21 to cutoff 50", identities, elapsed=elapsed, limit=120)
    ok = record(10, "windows >= 20 coefficients", ok=windows_ok) and ok
    assert ok, failing(identities)


@pytest.mark.xfail(strict=True, reason="first disagreement is <= L/2 for several small L")
def test_criterion_10_stabilization_bound():
    _, stabilization, _ = _series_reports()
    recorded = all("first_disagreement" in r.notes for r in stabilization)
    ok = record(10, "eq-3.22 first disagreement > L/2, L <= 20", stabilization)
    assert recorded and ok, failing(stabilization)


@functools.lru_cache(maxsize=None)
def _verify_all():
    # a fresh interpreter, so no cached polynomial from earlier tests helps
    start = time.perf_counter()
    proc = subprocess.run([sys.executable, "-m", "qgordon", "verify", "all", "--format", "json"],
                          capture_output=True, text=True, timeout=600)
    return proc.returncode, proc.stdout.splitlines(), time.perf_counter() - start


def test_criterion_12_round_trip_and_time():
    code, lines, elapsed = _verify_all()
    reports = [VerificationReport.from_json(line) for line in lines]
    exact = all(VerificationReport.from_json(line).to_json() == line for line in lines)
    others = [r for r in reports if r.identity_id != "eq-3.22"]
    ok = record(12, "JSON-lines round trip", ok=exact)
    ok = record(12, "every report except eq-3.22 passes", others, elapsed=elapsed, limit=300) and ok
    assert ok, failing(others)


@pytest.mark.xfail(strict=True, reason="verify all includes the eq-3.22 bound, which fails for small L")
def test_criterion_12_exit_code():
    code, lines, _ = _verify_all()
    ok = record(12, "verify all exits 0", ok=(code == 0))
    assert ok, f"exit code {code}"
