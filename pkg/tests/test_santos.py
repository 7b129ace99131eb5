from math import comb

import pytest

from qgordon.qalgebra import ONE, ZERO, Q, LaurentPoly, RationalQ, eval_at_one
from qgordon.santos import (
    odd_pochhammer_q,
    p1_sides,
    p2_sides,
    reflect_s,
    santos_S,
    santos_T,
    verify_p1,
    verify_p2,
    verify_reflection,
)


def test_small_values():
    assert santos_S(0) == ONE and santos_T(0) == ZERO
    assert santos_S(1) == ONE and santos_T(1) == ONE
    assert santos_S(2) == ONE + Q * Q
    assert santos_T(2) == ONE + Q


def test_negative_one():
    assert santos_S(-1) == RationalQ(-Q, ONE - Q)
    assert santos_T(-1) == RationalQ(ONE, ONE - Q)
    assert not santos_S(-1).is_polynomial()


def test_nonnegative_values_are_polynomials():
    for m in range(10):
        assert santos_S(m).is_polynomial()
        assert santos_T(m).is_polynomial()
        assert all(c > 0 for c in santos_S(m).numerator.terms.values())


@pytest.mark.parametrize("m", range(1, 12))
def test_values_at_one_split_powers_of_two(m):
    s = eval_at_one(santos_S(m).numerator)
    t = eval_at_one(santos_T(m).numerator)
    assert s == sum(comb(m, 2 * k) for k in range(m // 2 + 1)) == 2 ** (m - 1)
    assert t == 2 ** (m - 1)


def test_odd_pochhammer_negative_index():
    # (q;q^2)_{-1} = 1/(1 - q^-1)
    assert odd_pochhammer_q(-1) == RationalQ(ONE, ONE - LaurentPoly.monomial(-1))
    # the step rule (q;q^2)_m = (q;q^2)_(m-1) (1 - q^(2m-1)) holds across zero
    for m in range(-5, 6):
        step = ONE - LaurentPoly.monomial(2 * m - 1)
        assert odd_pochhammer_q(m) == odd_pochhammer_q(m - 1) * step


def test_reflection_round_trip():
    assert verify_reflection(6).passed
    assert reflect_s(reflect_s(santos_S(3), 3), -3) == santos_S(3)


def test_p1_examples():
    for L in range(8):
        lhs, rhs = p1_sides(L, 0)
        assert lhs == rhs == santos_T(L)
    lhs, rhs = p1_sides(2, 1)
    assert lhs == rhs


def test_p2_examples():
    for L in range(8):
        lhs, rhs = p2_sides(L, -1)
        assert lhs == rhs == santos_T(L)
    lhs, rhs = p2_sides(2, 0)
    assert lhs == rhs == ONE + Q


def test_p2_beyond_L():
    for L in range(0, 4):
        for M in range(L, L + 4):
            lhs, rhs = p2_sides(L, M)
            assert lhs == rhs


def test_reports():
    assert verify_p1(10, 4).passed
    assert verify_p2(10, (-4, 6)).passed
