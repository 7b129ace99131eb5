"""Finite Rogers-Ramanujan polynomials and their shifted variants.

``e_L`` and ``d_L`` are available in fermionic form (positive t-sums of
Gaussian binomials), bosonic form (alternating j-sums) and by the
three-term recurrence.  ``f_shifted`` is the two-boundary, shifted
generalisation whose splitting rule yields the finite
Garrett-Ismail-Stanton identities.
"""

from __future__ import annotations

import enum
from functools import lru_cache

from .qalgebra import ONE, ZERO, LaurentPoly, eval_at_one, gauss, invert_variable, q_binomial
from .report import Verification, VerificationReport


class RRKind(enum.Enum):
    E = "e"
    D = "d"


def _binom2(n: int) -> int:
    return n * (n - 1) // 2


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


@lru_cache(maxsize=None)
def rr_fermionic(kind: RRKind, L: int) -> LaurentPoly:
    """``e_L`` or ``d_L`` for any integer ``L``.

    Nonnegative ``L`` uses the t-sums; negative ``L`` the reflection
    ``e_{-L} = (-1)^L q^C(L,2) d_{L-1}(1/q)``,
    ``d_{-L} = (-1)^(L+1) q^C(L,2) e_{L-1}(1/q)``.
    """
    kind = RRKind(kind)
    if L < 0:
        k = -L
        if kind is RRKind.E:
            return invert_variable(rr_fermionic(RRKind.D, k - 1)).shift(_binom2(k)) * _sign(k)
        return invert_variable(rr_fermionic(RRKind.E, k - 1)).shift(_binom2(k)) * _sign(k + 1)
    s = 0 if kind is RRKind.E else 1
    total = ZERO
    t = 0
    while L - 2 * t - s >= 0:
        total = total + q_binomial(t, L - 2 * t - s).shift(t * t + s * t)
        t += 1
    return total


def e_poly(L: int) -> LaurentPoly:
    return rr_fermionic(RRKind.E, L)


def d_poly(L: int) -> LaurentPoly:
    return rr_fermionic(RRKind.D, L)


def rr_bosonic(kind: RRKind, L: int) -> LaurentPoly:
    """Alternating j-sum form of ``e_L`` / ``d_L`` (``L >= 0``)."""
    kind = RRKind(kind)
    if L < 0:
        raise ValueError(f"rr_bosonic needs L >= 0, got {L}")
    if kind is RRKind.E:
        lo1, e1 = L // 2, lambda j: j * (10 * j + 1)
        lo2, e2 = (L - 4) // 2, lambda j: (2 * j + 1) * (5 * j + 2)
    else:
        lo1, e1 = (L - 1) // 2, lambda j: j * (10 * j + 3)
        lo2, e2 = (L - 3) // 2, lambda j: (2 * j + 1) * (5 * j + 1)
    total = ZERO
    span = L // 5 + 2
    for j in range(-span, span + 1):
        total = total + gauss(L, lo1 - 5 * j).shift(e1(j))
        total = total - gauss(L, lo2 - 5 * j).shift(e2(j))
    return total


def rr_recurrence(kind: RRKind, L_max: int, L_min: int = 0) -> dict[int, LaurentPoly]:
    """Values from ``c_L = c_{L-1} + q^(L-1) c_{L-2}``, seeded at L = 0, 1.

    Indices below zero come from running the recurrence backwards,
    ``c_{L-2} = q^(1-L) (c_L - c_{L-1})``.
    """
    kind = RRKind(kind)
    vals = {0: ONE, 1: ONE} if kind is RRKind.E else {0: ZERO, 1: ONE}
    for L in range(2, L_max + 1):
        vals[L] = vals[L - 1] + vals[L - 2].shift(L - 1)
    for L in range(1, L_min + 1, -1):
        vals[L - 2] = (vals[L] - vals[L - 1]).shift(1 - L)
    return {k: v for k, v in vals.items() if L_min <= k <= L_max}


@lru_cache(maxsize=None)
def f_shifted(s: int, b: int, L: int, M: int) -> LaurentPoly:
    """``sum_t q^(t^2 + s t - M t) [L-t-s-b choose t]``.

    At ``L = 0`` the value is ``delta(s, b)``, the weight of the one-point
    path; the literal sum would give 0 for ``s = b = 1``.
    """
    if s not in (0, 1) or b not in (0, 1):
        raise ValueError("s and b must be 0 or 1")
    if L < 0:
        raise ValueError(f"f_shifted needs L >= 0, got {L}")
    if L == 0:
        return ONE if s == b else ZERO
    total = ZERO
    t = 0
    while L - 2 * t - s - b >= 0:
        total = total + q_binomial(t, L - 2 * t - s - b).shift(t * t + s * t - M * t)
        t += 1
    return total


def gis_lhs(L: int, m: int) -> LaurentPoly:
    """``sum_t q^(t^2 + m t) [L-t choose t]``."""
    return f_shifted(0, 0, L, -m)


def gis_rhs(L: int, m: int) -> LaurentPoly:
    """Cassini-type right side ``(-1)^m q^-C(m,2) (d_{m-1} e_{L+m} - e_{m-1} d_{L+m})``."""
    return (d_poly(m - 1) * e_poly(L + m) - e_poly(m - 1) * d_poly(L + m)).shift(-_binom2(m)) * _sign(m)


def gis_negative_rhs(L: int, M: int) -> LaurentPoly:
    """``e_M(1/q) e_{L-M}(q) + d_M(1/q) d_{L-M}(q)``."""
    return (invert_variable(e_poly(M)) * e_poly(L - M)
            + invert_variable(d_poly(M)) * d_poly(L - M))


def fib(L: int) -> int:
    """Fibonacci number as ``d_L(1)``; negative indices follow the reflection."""
    return eval_at_one(d_poly(L))


# -- verification --------------------------------------------------------------

def verify_finite_rr(L_max: int = 30) -> list[VerificationReport]:
    """Fermionic = bosonic = recurrence for e_L (eq-1.3) and d_L (eq-1.4)."""
    reports = []
    for ident, kind in (("eq-1.3", RRKind.E), ("eq-1.4", RRKind.D)):
        v = Verification(ident, {"L": [0, L_max]})
        rec = rr_recurrence(kind, L_max)
        for L in range(L_max + 1):
            ferm = rr_fermionic(kind, L)
            v.check({"L": L, "form": "bosonic"}, ferm, rr_bosonic(kind, L))
            v.check({"L": L, "form": "recurrence"}, ferm, rec[L])
        reports.append(v.report())
    return reports


def verify_recurrence(L_min: int = -10, L_max: int = 30) -> VerificationReport:
    """The three-term recurrence across the negative-index extension (eq-1.8, eq-1.10)."""
    v = Verification("eq-1.8", {"L": [L_min, L_max]})
    for kind in RRKind:
        for L in range(L_min, L_max + 1):
            c = rr_fermionic(kind, L)
            v.check({"kind": kind.value, "L": L}, c,
                    rr_fermionic(kind, L - 1) + rr_fermionic(kind, L - 2).shift(L - 1))
        back = rr_recurrence(kind, 1, L_min)
        for L, val in back.items():
            v.check({"kind": kind.value, "L": L, "form": "backward"}, rr_fermionic(kind, L), val)
    return v.report()


def verify_gis_finite(L_max: int = 25, m_max: int = 10) -> list[VerificationReport]:
    """Positive-shift (eq-1.13) and negative-shift (eq-1.14) finite identities."""
    v13 = Verification("eq-1.13", {"L": [0, L_max], "m": [0, m_max]})
    for L in range(L_max + 1):
        for m in range(m_max + 1):
            v13.check({"L": L, "m": m}, gis_lhs(L, m), gis_rhs(L, m))
    v14 = Verification("eq-1.14", {"L": [0, L_max], "M": [0, "L"]})
    for L in range(L_max + 1):
        for M in range(L + 1):
            v14.check({"L": L, "M": M}, f_shifted(0, 0, L, M), gis_negative_rhs(L, M))
    return [v13.report(), v14.report()]


def splitting_sides(L: int, M: int, x: int, s: int, b: int):
    """Left side and both right sides of the splitting rule at offset ``x``.

    The split point ``x`` must be 0 or strictly inside the path interval
    ``(-M, L-M)``: the factor ``q^(s' x)`` weights the junction as an
    interior point, which an endpoint is not.
    """
    if not 0 <= M <= L:
        raise ValueError(f"splitting needs 0 <= M <= L, got L={L}, M={M}")
    if x != 0 and not (M + x > 0 and L - M - x > 0):
        raise ValueError(f"split point x={x} must be 0 or inside ({-M}, {L - M})")
    lhs = f_shifted(s, b, L, M)
    rhs1 = ZERO
    rhs2 = ZERO
    for sp in (0, 1):
        tail = f_shifted(sp, b, L - M - x, -x).shift(sp * x)
        rhs1 = rhs1 + f_shifted(s, sp, M + x, M) * tail
        rhs2 = rhs2 + invert_variable(f_shifted(sp, s, M + x, x)) * tail
    return lhs, rhs1, rhs2


def verify_splitting(L: int, M: int, x: int, s: int, b: int) -> VerificationReport:
    """Both equalities of the splitting rule (eq-2.16) at one grid point."""
    v = Verification("eq-2.16", {"L": L, "M": M, "x": x, "s": s, "b": b})
    lhs, rhs1, rhs2 = splitting_sides(L, M, x, s, b)
    params = {"L": L, "M": M, "x": x, "s": s, "b": b}
    v.check({**params, "form": "direct"}, lhs, rhs1)
    v.check({**params, "form": "reflected"}, lhs, rhs2)
    return v.report()


def verify_splitting_grid(L_max: int = 12) -> list[VerificationReport]:
    """eq-2.11 (x = 0) and eq-2.16 (all admissible x) over a grid."""
    v11 = Verification("eq-2.11", {"L": [0, L_max], "M": [0, "L"], "s": [0, 1], "b": [0, 1]})
    v16 = Verification("eq-2.16", {"L": [0, L_max], "M": [0, "L"], "x": "0 or -M < x < L-M",
                                   "s": [0, 1], "b": [0, 1]})
    for L in range(L_max + 1):
        for M in range(L + 1):
            for s in (0, 1):
                for b in (0, 1):
                    for x in sorted({0, *range(-M + 1, L - M)}):
                        lhs, rhs1, rhs2 = splitting_sides(L, M, x, s, b)
                        p = {"L": L, "M": M, "x": x, "s": s, "b": b}
                        if x == 0:
                            v11.check(p, lhs, rhs2)
                        v16.check({**p, "form": "direct"}, lhs, rhs1)
                        v16.check({**p, "form": "reflected"}, lhs, rhs2)
    return [v11.report(), v16.report()]


def fibonacci_checks(L_max: int = 30) -> list[VerificationReport]:
    """q = 1 specialisations: sum rule (eq-2.13), sign rule (eq-2.14), Cassini (eq-2.15)."""
    if L_max < 1:
        raise ValueError("L_max must be >= 1")
    v13 = Verification("eq-2.13", {"L": [1, L_max], "M": [1, "L"]})
    v13.check({"n": 1}, fib(1), 1)
    v13.check({"n": 2}, fib(2), 1)
    for n in range(2, L_max + 1):
        v13.check({"n": n, "form": "recurrence"}, fib(n), fib(n - 1) + fib(n - 2))
    for L in range(1, L_max + 1):
        for M in range(1, L + 1):
            v13.check({"L": L, "M": M}, fib(L),
                      fib(M) * fib(L - M + 1) + fib(M - 1) * fib(L - M))
    v14 = Verification("eq-2.14", {"M": [1, L_max]})
    for M in range(1, L_max + 1):
        v14.check({"M": M}, fib(-M), _sign(M + 1) * fib(M))
    half = L_max // 2
    v15 = Verification("eq-2.15", {"L": [0, half], "M": [0, half]})
    for L in range(half + 1):
        for M in range(half + 1):
            v15.check({"L": L, "M": M}, _sign(M) * fib(L),
                      fib(M + 1) * fib(L + M) - fib(M) * fib(L + M + 1))
    return [v13.report(), v14.report(), v15.report()]
