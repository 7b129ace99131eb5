"""Truncated q-series checks of the infinite (L -> infinity) identities.

Every comparison is coefficientwise on a finite window ``[lo, cutoff)``.
Laurent prefactors such as ``q^-C(m,2)`` or ``B(M, 1/q)`` push terms below
zero; the infinite products they multiply are computed far enough past
``cutoff`` that the final window still reaches ``cutoff``.
"""

from __future__ import annotations

from .agcore import b_bosonic, f_tilde
from .qalgebra import (
    LaurentPoly,
    gauss,
    TruncatedLaurentSeries,
    inverse_pochhammer_series,
    invert_variable,
)
from .qalgebra import series_inverse_product as _inverse_product
from .report import Verification, VerificationReport
from .rrpoly import d_poly, e_poly

# windows narrower than this are reported as weak checks
WEAK_WINDOW = 20


def _binom2(n: int) -> int:
    return n * (n - 1) // 2


def ag_product(nu: int, s: int, cutoff: int) -> TruncatedLaurentSeries:
    """``1 / prod_{n != 0, +-s mod 2nu+3} (1 - q^n)`` to ``cutoff``."""
    k = 2 * nu + 3
    allowed = [r for r in range(1, k) if r not in (s % k, (-s) % k)]
    return _inverse_product(k, allowed, cutoff)


def poly_times_product(poly: LaurentPoly, nu: int, s: int, cutoff: int) -> TruncatedLaurentSeries:
    """``poly / prod(...)`` valid on ``[valuation, cutoff)``."""
    if not poly:
        return TruncatedLaurentSeries(0, cutoff)
    reach = cutoff - min(poly.valuation(), 0)
    return ag_product(nu, s, reach) * poly


def _inverse_pochhammer_product(ns, length: int) -> list:
    # coefficients of 1 / prod_i (q)_{n_i}, first `length` of them
    coeffs = [1] + [0] * (length - 1)
    for n in ns:
        for part in range(1, min(n, length - 1) + 1):
            for k in range(part, length):
                coeffs[k] += coeffs[k - part]
    return coeffs


def multisum_series(nu: int, s: int, M: int, cutoff: int) -> TruncatedLaurentSeries:
    """``sum_n q^(N_1^2+..+N_nu^2 + N_s+..+N_nu - M N_1) / prod (q)_{n_i}``.

    ``s`` is 1-based here (``s = nu + 1`` drops the linear term).  Vectors
    are enumerated through ``N_1 >= .. >= N_nu >= 0``; the exponent is at
    least ``N_1^2 - M N_1``, which bounds ``N_1``.
    """
    lo = -(M * M // 4) if M > 0 else 0
    dense = [0] * (cutoff - lo)
    linear_from = s - 1

    def vectors(prefix: list, partial: int):
        # partial: exponent of the prefix; later slots can only add to it
        i = len(prefix)
        if i == nu:
            yield prefix, partial
            return
        cap = prefix[-1] if prefix else None
        x = 0
        while cap is None or x <= cap:
            e = partial + x * x + (x if i >= linear_from else 0) - (M * x if i == 0 else 0)
            if e < cutoff:
                yield from vectors(prefix + [x], e)
            elif i > 0 or 2 * x > M:
                break
            x += 1

    for N, e in vectors([], 0):
        ns = [N[i] - N[i + 1] for i in range(nu - 1)] + [N[-1]]
        off = e - lo
        for k, c in enumerate(_inverse_pochhammer_product(ns, cutoff - e)):
            dense[off + k] += c
    return TruncatedLaurentSeries(lo, cutoff, dense)


def theta_sum(nu: int, s: int, cutoff: int) -> LaurentPoly:
    """Theta numerator of the product side, two terms per ``j``.

    With ``k = 2nu + 3`` the terms are ``q^(j(2kj + k - 2s))`` (sign +) and
    ``q^((2j+1)(kj + s))`` (sign -), ``j`` over all integers, kept below
    ``cutoff``.  Divided by ``(q)_inf`` it equals the product side.
    """
    k = 2 * nu + 3
    terms: dict[int, int] = {}
    j = 0
    while True:
        found = False
        for jj in ((j, -j) if j else (0,)):
            for e, c in ((2 * k * jj * jj + jj * (k - 2 * s), 1), ((2 * jj + 1) * (k * jj + s), -1)):
                if e < cutoff:
                    terms[e] = terms.get(e, 0) + c
                    found = True
        if not found and j > 0:
            break
        j += 1
    return LaurentPoly(terms)


def _triple(v: Verification, params: dict, forms: dict) -> None:
    names = list(forms)
    for a, b in zip(names, names[1:]):
        lhs, rhs = forms[a], forms[b]
        v.check({**params, "pair": f"{a}={b}"}, lhs, rhs, equal=lhs.agrees_with(rhs))


def _finish(v: Verification, lo: int, hi: int) -> VerificationReport:
    v.window = (lo, hi)
    if hi - max(lo, 0) < WEAK_WINDOW:
        v.notes["weak"] = True
    return v.report()


def rr_series_check(a: int, cutoff: int = 50) -> VerificationReport:
    """Sum side, theta side and product side of the classical pair (eq-1.1)."""
    if a not in (0, 1):
        raise ValueError("a must be 0 or 1")
    if cutoff < 1:
        raise ValueError("cutoff must be >= 1")
    v = Verification("eq-1.1", {"a": a, "cutoff": cutoff})
    # nu = 1: s = 2 gives t^2, s = 1 gives t^2 + t
    s = 2 - a
    forms = {
        "sum": multisum_series(1, s, 0, cutoff),
        "theta": inverse_pochhammer_series(None, cutoff) * theta_sum(1, s, cutoff),
        "product": _inverse_product(5, (1 + a, 4 - a), cutoff),
    }
    _triple(v, {"a": a}, forms)
    return _finish(v, 0, cutoff)


def gis_series_check(m_max: int = 6, M_max: int = 6, cutoff: int = 50) -> list[VerificationReport]:
    """Infinite forms with positive shift (eq-1.11) and negative shift (eq-1.12)."""
    v11 = Verification("eq-1.11", {"m": [0, m_max], "cutoff": cutoff})
    for m in range(m_max + 1):
        lhs = _shifted_rr_sum(m, cutoff)
        pre = LaurentPoly.monomial(-_binom2(m), -1 if m % 2 else 1)
        rhs = (poly_times_product(pre * d_poly(m - 1), 1, 2, cutoff)
               - poly_times_product(pre * e_poly(m - 1), 1, 1, cutoff))
        v11.check({"m": m}, lhs, rhs, equal=lhs.agrees_with(rhs))
    reports = [_finish(v11, 0, cutoff)]
    v12 = Verification("eq-1.12", {"M": [0, M_max], "cutoff": cutoff})
    lo = 0
    for M in range(M_max + 1):
        lhs = _shifted_rr_sum(-M, cutoff)
        rhs = (poly_times_product(invert_variable(e_poly(M)), 1, 2, cutoff)
               + poly_times_product(invert_variable(d_poly(M)), 1, 1, cutoff))
        lo = min(lo, lhs.min_exponent, rhs.min_exponent)
        v12.check({"M": M}, lhs, rhs, equal=lhs.agrees_with(rhs))
    reports.append(_finish(v12, lo, cutoff))
    return reports


def _shifted_rr_sum(m: int, cutoff: int) -> TruncatedLaurentSeries:
    # sum_t q^(t^2 + m t) / (q)_t; m may be negative
    return multisum_series(1, 2, -m, cutoff)


def ag_series_check(nu: int, cutoff: int = 50) -> VerificationReport:
    """Sum, theta and product sides of the Andrews-Gordon identities, every s (eq-3.1)."""
    if nu < 1 or cutoff < 1:
        raise ValueError("need nu >= 1 and cutoff >= 1")
    v = Verification("eq-3.1", {"nu": nu, "s": [1, nu + 1], "cutoff": cutoff})
    euler = inverse_pochhammer_series(None, cutoff)
    for s in range(1, nu + 2):
        forms = {
            "sum": multisum_series(nu, s, 0, cutoff),
            "theta": euler * theta_sum(nu, s, cutoff),
            "product": ag_product(nu, s, cutoff),
        }
        _triple(v, {"nu": nu, "s": s}, forms)
    return _finish(v, 0, cutoff)


def variant_rhs(nu: int, s: int, M: int, cutoff: int) -> TruncatedLaurentSeries:
    """Parity-split sum of ``B(M, 1/q)`` over the Andrews-Gordon products."""
    k = 2 * nu + 3
    total = TruncatedLaurentSeries(0, cutoff)
    for sp in range(1, nu + 2):
        S = sp if (s + sp - M) % 2 == 0 else k - sp
        coeff = invert_variable(b_bosonic(nu, S, s, M))
        total = total + poly_times_product(coeff, nu, sp, cutoff)
    return total


def binomial_limit_check(n_max: int = 10, L_max: int = 30, cutoff: int = 50) -> VerificationReport:
    """``[L choose n] -> 1/(q)_n`` (eq-3.23), with its exact finite rate.

    ``[L choose n] = (q^(L-n+1); q)_n / (q)_n``, so the two agree below
    ``q^(L-n+1)`` and differ there (by ``-1``) whenever ``n >= 1``.
    """
    v = Verification("eq-3.23", {"n": [0, n_max], "L": ["n", L_max], "cutoff": cutoff})
    for n in range(n_max + 1):
        limit = inverse_pochhammer_series(n, cutoff)
        for L in range(n, L_max + 1):
            series = TruncatedLaurentSeries.from_poly(gauss(L, n), cutoff, 0)
            first = series.first_disagreement(limit)
            expected = None if n == 0 or L - n + 1 >= cutoff else L - n + 1
            v.check({"n": n, "L": L, "first_disagreement": first}, first, expected)
    return _finish(v, 0, cutoff)


def stabilization_thresholds(nu: int, s: int, b: int, L_max: int, cutoff: int) -> list:
    """First exponent where ``F~_{s-1,b}(L)`` departs from its limit product, per L."""
    limit = ag_product(nu, s, cutoff)
    out = []
    for L in range(L_max + 1):
        series = TruncatedLaurentSeries.from_poly(f_tilde(nu, s - 1, b, L), cutoff, 0)
        out.append(series.first_disagreement(limit))
    return out


def ag_variant_series_check(nu: int, s: int, M_max: int = 4, cutoff: int = 50,
                            L_stable: int = 20) -> list[VerificationReport]:
    """Shifted Andrews-Gordon series (eq-3.21) and the finite-L approach to the limit (eq-3.22).

    ``s`` is 1-based, ``1 <= s <= nu + 1``.  The stabilization report
    records, for every ``b`` and ``L <= L_stable``, the first exponent at
    which ``F~_{s-1,b}(L)`` and the limit product differ (``None`` when they
    agree on the whole window) and checks that it exceeds ``L/2``.
    """
    if not 1 <= s <= nu + 1:
        raise ValueError(f"need 1 <= s <= nu + 1, got s={s}")
    v21 = Verification("eq-3.21", {"nu": nu, "s": s, "M": [0, M_max], "cutoff": cutoff})
    lo = 0
    for M in range(M_max + 1):
        lhs = multisum_series(nu, s, M, cutoff)
        rhs = variant_rhs(nu, s, M, cutoff)
        lo = min(lo, lhs.min_exponent, rhs.min_exponent)
        v21.check({"nu": nu, "s": s, "M": M}, lhs, rhs, equal=lhs.agrees_with(rhs))
    reports = [_finish(v21, lo, cutoff)]

    v22 = Verification("eq-3.22", {"nu": nu, "s": s, "b": [0, nu], "L": [0, L_stable],
                                   "cutoff": cutoff})
    limit = ag_product(nu, s, cutoff)
    thresholds = {}
    for b in range(nu + 1):
        row = stabilization_thresholds(nu, s, b, L_stable, cutoff)
        thresholds[f"b={b}"] = row
        for L, first in enumerate(row):
            ok = first is None or first > L / 2
            series = TruncatedLaurentSeries.from_poly(f_tilde(nu, s - 1, b, L), cutoff, 0)
            v22.check({"nu": nu, "s": s, "b": b, "L": L, "first_disagreement": first},
                      series, limit, equal=ok)
    v22.notes["first_disagreement"] = thresholds
    reports.append(_finish(v22, 0, cutoff))
    return reports
