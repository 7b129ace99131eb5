"""Andrews-Santos polynomials ``S_m``, ``T_m`` and their shifted identities.

For ``m >= 0``::

    S_m = sum_t q^(2t^2)    [m choose 2t]
    T_m = sum_t q^(2t^2+2t) [m choose 2t+1]

and for negative indices the values are rational in ``q``::

    S_{-m} = (-1)^m     q^(m^2)   / (q;q^2)_m * S_m(1/q)
    T_{-m} = (-1)^(m+1) q^(m^2-1) / (q;q^2)_m * T_m(1/q)

All values are returned as :class:`RationalQ` so that polynomial and
rational indices mix freely; equality is by cross-multiplication.
"""

from __future__ import annotations

from functools import lru_cache

from .qalgebra import ONE, ZERO, LaurentPoly, RationalQ, gauss, odd_pochhammer
from .report import Verification, VerificationReport

# SantosValue: a RationalQ whose denominator is 1 for nonnegative indices
SantosValue = RationalQ


@lru_cache(maxsize=None)
def _s_poly(m: int) -> LaurentPoly:
    total = ZERO
    for t in range(m // 2 + 1):
        total = total + gauss(m, 2 * t).shift(2 * t * t)
    return total


@lru_cache(maxsize=None)
def _t_poly(m: int) -> LaurentPoly:
    total = ZERO
    for t in range((m - 1) // 2 + 1):
        total = total + gauss(m, 2 * t + 1).shift(2 * t * t + 2 * t)
    return total


def odd_pochhammer_q(m: int) -> RationalQ:
    """``(q;q^2)_m`` for any integer ``m``; ``(q;q^2)_{-k} = 1/(q^(1-2k);q^2)_k``."""
    if m >= 0:
        return RationalQ(odd_pochhammer(m))
    den = ONE
    for j in range(-m):
        den = den * LaurentPoly({0: 1, 1 + 2 * m + 2 * j: -1})
    return RationalQ(ONE, den)


def reflect_s(value: RationalQ, m: int) -> RationalQ:
    """``S_{-m}`` from ``S_m``: ``(-1)^m q^(m^2) / (q;q^2)_m * S_m(1/q)``."""
    sign = -1 if m % 2 else 1
    pre = RationalQ(LaurentPoly.monomial(m * m, sign)) * _recip(odd_pochhammer_q(m))
    return pre * value.invert_variable()


def reflect_t(value: RationalQ, m: int) -> RationalQ:
    """``T_{-m}`` from ``T_m``: ``(-1)^(m+1) q^(m^2-1) / (q;q^2)_m * T_m(1/q)``."""
    sign = 1 if m % 2 else -1
    pre = RationalQ(LaurentPoly.monomial(m * m - 1, sign)) * _recip(odd_pochhammer_q(m))
    return pre * value.invert_variable()


def _recip(r: RationalQ) -> RationalQ:
    return RationalQ(r.denominator, r.numerator)


def santos_S(m: int) -> RationalQ:
    if m >= 0:
        return RationalQ(_s_poly(m))
    return reflect_s(RationalQ(_s_poly(-m)), -m)


def santos_T(m: int) -> RationalQ:
    if m >= 0:
        return RationalQ(_t_poly(m))
    return reflect_t(RationalQ(_t_poly(-m)), -m)


def _odd_sum(L: int, linear: int) -> LaurentPoly:
    # sum_t [L choose 2t+1] q^(2t^2 + linear*t)
    total = ZERO
    for t in range((L - 1) // 2 + 1):
        total = total + gauss(L, 2 * t + 1).shift(2 * t * t + linear * t)
    return total


def p1_sides(L: int, m: int) -> tuple[RationalQ, RationalQ]:
    lhs = RationalQ(_odd_sum(L, 2 * (m + 1)).shift(m) * odd_pochhammer(m))
    rhs = santos_S(m) * santos_T(L + m) - santos_T(m) * santos_S(L + m)
    return lhs, rhs


def p2_sides(L: int, M: int) -> tuple[RationalQ, RationalQ]:
    lhs = RationalQ(_odd_sum(L, -2 * M))
    rhs = (RationalQ(LaurentPoly.monomial(M + 1)) * santos_S(M + 1).invert_variable() * santos_T(L - M - 1)
           + RationalQ(LaurentPoly.monomial(M)) * santos_T(M + 1).invert_variable() * santos_S(L - M - 1))
    return lhs, rhs


def verify_p1(L_max: int = 16, m_max: int = 6) -> VerificationReport:
    """Finite identity with a positive shift (eq-P1)."""
    v = Verification("eq-P1", {"L": [0, L_max], "m": [0, m_max]})
    for L in range(L_max + 1):
        for m in range(m_max + 1):
            lhs, rhs = p1_sides(L, m)
            v.check({"L": L, "m": m}, lhs, rhs)
    return v.report()


def verify_p2(L_max: int = 16, M_range=(-6, 8)) -> VerificationReport:
    """Extension to arbitrary integer shift (eq-P2), rational values compared by cross-multiplication."""
    lo, hi = M_range
    v = Verification("eq-P2", {"L": [0, L_max], "M": [lo, hi]})
    for L in range(L_max + 1):
        for M in range(lo, hi + 1):
            lhs, rhs = p2_sides(L, M)
            v.check({"L": L, "M": M}, lhs, rhs)
    return v.report()


def verify_reflection(m_max: int = 6) -> VerificationReport:
    """Applying the negative-index rule twice returns the starting value."""
    v = Verification("santos-reflection", {"m": [-m_max, m_max]})
    for m in range(-m_max, m_max + 1):
        s, t = santos_S(m), santos_T(m)
        v.check({"m": m, "family": "S"}, reflect_s(reflect_s(s, m), -m), s)
        v.check({"m": m, "family": "T"}, reflect_t(reflect_t(t, m), -m), t)
    return v.report()
