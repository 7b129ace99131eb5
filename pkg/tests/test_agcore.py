import pytest

from qgordon.agcore import (
    AGIndexVector,
    AGParams,
    b_bosonic,
    big_f,
    big_f_box,
    block,
    bosonic_partner,
    chi,
    connection_coefficients,
    f_tilde,
    index_vectors,
    literal_binomial,
    main_theorem_rhs,
    regrouped_rhs,
    tail_sums,
    telescoping_audit,
    unit,
    verify_ag_polynomial,
    verify_appendix,
    verify_connection,
    verify_main_theorem,
    verify_recurrences,
)
from qgordon.qalgebra import ONE, ZERO, Q, LaurentPoly, gauss, invert_variable
from qgordon.rrpoly import d_poly, e_poly, f_shifted


def test_params_validation():
    with pytest.raises(ValueError):
        AGParams(0, 0, 0)
    with pytest.raises(ValueError):
        AGParams(2, 3, 0)
    with pytest.raises(ValueError):
        AGParams(2, 0, 0, L=-1)
    with pytest.raises(ValueError):
        f_tilde(1, 2, 0, 3)


def test_vector_helpers():
    assert unit(2, 3) == (0, 1, 0)
    assert unit(4, 3) == (0, 0, 0)
    assert block(2, 3, 4) == (0, 1, 1, 0)
    assert block(3, 2, 4) == (0, 0, 0, 0)
    assert tail_sums((1, 2, 3)) == (6, 5, 3)
    assert chi(3, 2) == 1 and chi(2, 2) == 0


def test_index_vector_example():
    # nu = 1, L = 0, s = b = 0: n = -1 gives m = 0, n = 0 gives m = -2
    p = AGParams(1, 0, 0, 0, 0)
    assert AGIndexVector.build((-1,), p).weight() == ONE
    assert AGIndexVector.build((0,), p).m == (-2,)
    assert AGIndexVector.build((0,), p).weight() == ZERO
    assert f_tilde(1, 0, 0, 0) == ONE


def test_negative_last_coordinate_is_gated():
    for nu in (1, 2, 3):
        for s in range(nu + 1):
            for b in range(nu + 1):
                vecs = list(index_vectors(AGParams(nu, s, b, 6)))
                has_negative = any(N[-1] == -1 for N in vecs)
                assert has_negative == (s != nu and b != nu)


@pytest.mark.parametrize("L", range(0, 13))
def test_rank_one_reduces_to_rr(L):
    assert f_tilde(1, 1, 1, L) == e_poly(L)
    assert f_tilde(1, 0, 1, L) == d_poly(L)


def test_rank_one_shifted_matches_rrpoly():
    for L in range(0, 13):
        for M in range(0, L + 1):
            assert big_f(1, 1, 1, L, M) == f_shifted(0, 0, L, M)


@pytest.mark.parametrize("nu", [1, 2, 3])
def test_initial_values_are_delta(nu):
    for s in range(nu + 1):
        for b in range(nu + 1):
            assert f_tilde(nu, s, b, 0) == (ONE if s == b else ZERO)


@pytest.mark.parametrize("nu,L", [(1, 6), (2, 5), (2, 7), (3, 4)])
def test_pruning_is_lossless(nu, L):
    for s in range(nu + 1):
        for b in range(nu + 1):
            for M in (0, 2):
                assert big_f(nu, s, b, L, M) == big_f_box(nu, s, b, L, M)


def test_nonnegative_coefficients():
    for nu in (1, 2, 3):
        for L in range(0, 9):
            for s in range(nu + 1):
                for b in range(nu + 1):
                    assert all(c > 0 for c in f_tilde(nu, s, b, L).terms.values())


def test_shifted_valuation_bound():
    for nu in (1, 2):
        for L in range(0, 9):
            for M in range(0, L + 1):
                for s in range(nu + 1):
                    for b in range(nu + 1):
                        p = big_f(nu, s, b, L, M)
                        if p:
                            assert p.valuation() >= -(M * M // 4) * nu - M


def test_bosonic_examples():
    assert b_bosonic(1, 1, 1, 0) == ONE
    assert b_bosonic(1, 2, 2, 2) == ONE + Q
    assert b_bosonic(1, 2, 2, 2) == e_poly(2)
    with pytest.raises(ValueError):
        b_bosonic(1, 1, 2, 2)
    with pytest.raises(ValueError):
        b_bosonic(1, 5, 1, 4)


def test_bosonic_partner_branches():
    for nu in (1, 2):
        for L in range(0, 9):
            for s in range(nu + 1):
                for b in range(nu + 1):
                    assert f_tilde(nu, s, b, L) == bosonic_partner(nu, s, b, L)


def test_connection_examples():
    assert connection_coefficients(2, 0) == [[ONE if i == j else ZERO for j in range(3)] for i in range(3)]
    A = connection_coefficients(1, 2)
    assert A[1][1] == invert_variable(e_poly(2)) == ONE + LaurentPoly.monomial(-1)
    assert A[1][0] == invert_variable(d_poly(2)) == ONE
    for M in range(0, 9):
        connection_coefficients(2, M)


def test_main_theorem_examples():
    # M = 0 leaves F~ unchanged
    for s in range(3):
        for b in range(3):
            assert main_theorem_rhs(2, s, b, 6, 0) == f_tilde(2, s, b, 6)
            assert regrouped_rhs(2, s, b, 7, 3) == big_f(2, s, b, 7, 3)
    # rank one, s = b = 1, is the negative-shift finite identity
    for L in range(0, 15):
        for M in range(0, L + 1):
            expected = invert_variable(e_poly(M)) * e_poly(L - M) + invert_variable(d_poly(M)) * d_poly(L - M)
            assert main_theorem_rhs(1, 1, 1, L, M) == expected


def test_literal_binomial():
    assert literal_binomial(5, 2) == gauss(5, 2)
    assert literal_binomial(3, -2) == ZERO
    assert literal_binomial(-2, -2) == ONE
    assert literal_binomial(2, 3) == ZERO
    # [-1 choose -2] = (1 - q^-1)/(1 - q) = -q^-1
    assert literal_binomial(-1, -2) == LaurentPoly.monomial(-1, -1)


@pytest.mark.parametrize("nu,s,b,L,M", [(2, 0, 1, 6, 0), (2, 1, 2, 8, 2), (3, 2, 3, 8, 0)])
def test_telescoping_examples(nu, s, b, L, M):
    assert telescoping_audit(nu, s, b, L, M).passed


def test_telescoping_rejects_bad_range():
    with pytest.raises(ValueError):
        telescoping_audit(2, 0, 0, 6, 0)
    with pytest.raises(ValueError):
        telescoping_audit(2, 0, 1, 1, 0)


def test_reports():
    reports = [verify_ag_polynomial(2, 8)]
    reports += verify_recurrences(2, 8, (0, 1, 3))
    reports += verify_connection(2, 6)
    reports += verify_main_theorem(2, 6)
    reports += verify_appendix((2,), L_max=6, pascal_max=8)
    assert [r.identity_id for r in reports] == [
        "eq-3.9", "eq-3.11", "eq-3.10", "eq-3.13", "eq-3.16", "eq-3.18", "eq-3.19", "eq-3.20",
        "eq-A.5", "eq-A.6", "eq-A.7", "eq-A.14"]
    for r in reports:
        assert r.passed, r.summary_line()


def test_recurrence_needs_room():
    with pytest.raises(ValueError):
        verify_recurrences(1, 1)
