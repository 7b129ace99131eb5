"""Andrews-Gordon multisums, their bosonic forms and the shifted variants.

For a rank ``nu >= 1`` and boundary labels ``0 <= s, b <= nu`` the
fermionic polynomials are sums over integer vectors ``n = (n_1..n_nu)``::

    F_{s,b}(L, M) = sum_n q^(N_1^2+..+N_nu^2 + N_{s+1}+..+N_nu - M*N_1)
                          * prod_i [n_i + m_i choose n_i]

with tail sums ``N_i = n_i + .. + n_nu`` and
``m_i = L - 2(N_1+..+N_i) - max(i-s, 0) - max(i-b, 0)``.  ``f_tilde`` is
the ``M = 0`` case.  The last coordinate may be ``-1`` when ``s, b < nu``;
that term survives only when ``m_nu = 0``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .qalgebra import ONE, ZERO, LaurentPoly, gauss, invert_variable, q_binomial
from .report import Verification, VerificationReport


@dataclass(frozen=True)
class AGParams:
    nu: int
    s: int
    b: int
    L: int = 0
    M: int = 0

    def __post_init__(self):
        if self.nu < 1:
            raise ValueError(f"nu must be >= 1, got {self.nu}")
        if not (0 <= self.s <= self.nu and 0 <= self.b <= self.nu):
            raise ValueError(f"need 0 <= s, b <= nu; got s={self.s}, b={self.b}, nu={self.nu}")
        if self.L < 0:
            raise ValueError(f"L must be >= 0, got {self.L}")


@dataclass(frozen=True)
class AGIndexVector:
    """One summation vector with its derived tail sums, ``m`` and exponent."""

    n: tuple
    N: tuple
    m: tuple
    phi: int

    @classmethod
    def build(cls, n, p: AGParams) -> "AGIndexVector":
        n = tuple(n)
        N = tail_sums(n)
        return cls(n, N, m_vector(N, p.L, p.s, p.b), phi(N, p.s, p.M))

    def weight(self) -> LaurentPoly:
        term = ONE
        for ni, mi in zip(self.n, self.m):
            term = term * q_binomial(ni, mi)
            if not term:
                return ZERO
        return term.shift(self.phi)


def unit(i: int, nu: int) -> tuple:
    """``e_i``: 1 in slot ``i`` (1-based) when ``1 <= i <= nu``, else all zero."""
    return tuple(1 if j == i else 0 for j in range(1, nu + 1))


def block(a: int, b: int, nu: int) -> tuple:
    """``E_{a,b} = e_a + .. + e_b`` (zero vector when ``a > b``)."""
    return tuple(1 if a <= j <= b else 0 for j in range(1, nu + 1))


def vadd(*vs) -> tuple:
    return tuple(sum(c) for c in zip(*vs))


def vneg(v) -> tuple:
    return tuple(-c for c in v)


def chi(i: int, a: int) -> int:
    return 1 if i > a else 0


def tail_sums(n) -> tuple:
    out = []
    acc = 0
    for x in reversed(n):
        acc += x
        out.append(acc)
    return tuple(reversed(out))


def m_vector(N, L: int, s: int, b: int) -> tuple:
    out = []
    prefix = 0
    for i, Ni in enumerate(N, 1):
        prefix += Ni
        out.append(L - 2 * prefix - chi(i, s) * (i - s) - chi(i, b) * (i - b))
    return tuple(out)


def phi(N, s: int, M: int) -> int:
    """Exponent ``sum N_i^2 + sum_{i>s} N_i - M N_1``."""
    return sum(x * x for x in N) + sum(N[s:]) - M * N[0]


def index_vectors(p: AGParams) -> Iterator[tuple]:
    """Tail-sum vectors ``N`` that can carry a nonzero term.

    Built from ``N_nu`` downwards; ``N_1 >= .. >= N_nu`` except that the
    last coordinate may be ``-1``.  A prefix is cut as soon as the smallest
    reachable ``N_1 + .. + N_nu`` would force ``m_nu < 0``.
    """
    nu, L = p.nu, p.L
    start = -1 if (p.s != nu and p.b != nu) else 0
    N = [0] * nu

    def rec(i: int, floor: int, partial: int):
        # choose N_i >= floor (1-based i), partial = N_{i+1} + .. + N_nu
        Ni = floor
        while 2 * (partial + i * Ni) <= L:
            N[i - 1] = Ni
            if i == 1:
                yield tuple(N)
            else:
                yield from rec(i - 1, Ni, partial + Ni)
            Ni += 1

    yield from rec(nu, start, 0)


def _weight_from_N(N, p: AGParams) -> LaurentPoly:
    n = [N[i] - N[i + 1] for i in range(len(N) - 1)] + [N[-1]]
    term = ONE
    for ni, mi in zip(n, m_vector(N, p.L, p.s, p.b)):
        if ni < -1:
            return ZERO
        term = term * q_binomial(ni, mi)
        if not term:
            return ZERO
    return term.shift(phi(N, p.s, p.M))


@lru_cache(maxsize=None)
def big_f(nu: int, s: int, b: int, L: int, M: int) -> LaurentPoly:
    """Shifted multisum ``F_{s,b}(L, M, q)``."""
    p = AGParams(nu, s, b, L, M)
    total = ZERO
    for N in index_vectors(p):
        total = total + _weight_from_N(N, p)
    return total


def f_tilde(nu: int, s: int, b: int, L: int) -> LaurentPoly:
    """Unshifted multisum ``F~_{s,b}(L, q) = F_{s,b}(L, 0, q)``."""
    return big_f(nu, s, b, L, 0)


def big_f_box(nu: int, s: int, b: int, L: int, M: int) -> LaurentPoly:
    """Same sum as :func:`big_f`, over a plain box ``-1 <= n_i <= L + 2`` with no pruning."""
    p = AGParams(nu, s, b, L, M)
    total = ZERO
    for n in itertools.product(range(-1, L + 3), repeat=nu):
        total = total + AGIndexVector.build(n, p).weight()
    return total


def b_bosonic(nu: int, S: int, B: int, L: int) -> LaurentPoly:
    """Alternating j-sum ``B_{S,B}(L, q)``; ``S`` and ``B`` are 1-based labels."""
    if nu < 1:
        raise ValueError(f"nu must be >= 1, got {nu}")
    if not (1 <= S <= 2 * nu + 2 and 1 <= B <= nu + 1):
        raise ValueError(f"need 1 <= S <= {2 * nu + 2} and 1 <= B <= {nu + 1}; got S={S}, B={B}")
    if L < 0:
        raise ValueError(f"L must be >= 0, got {L}")
    if (L - S - B) % 2:
        raise ValueError(f"parity violation: L={L} is not congruent to S+B={S + B} mod 2")
    k = 2 * nu + 3
    total = ZERO
    span = L // k + 1
    for j in range(-span, span + 1):
        total = total + gauss(L, (L + S - B) // 2 - j * k).shift(2 * k * j * j + j * (k - 2 * S))
        total = total - gauss(L, (L - S - B) // 2 - j * k).shift((2 * j + 1) * (k * j + S))
    return total


def bosonic_partner(nu: int, s: int, b: int, L: int) -> LaurentPoly:
    """The bosonic polynomial that equals ``F~_{s,b}(L)``, branch picked by parity."""
    if (L - s - b) % 2 == 0:
        return b_bosonic(nu, s + 1, b + 1, L)
    return b_bosonic(nu, 2 * nu + 3 - (s + 1), b + 1, L)


def connection_coefficients(nu: int, M: int) -> list[list[LaurentPoly]]:
    """Matrix ``A_{s,s'}(M) = F_{s,s'}(M, M)``, checked against ``F~_{s',s}(M, 1/q)``."""
    if nu < 1 or M < 0:
        raise ValueError("need nu >= 1 and M >= 0")
    rows = []
    for s in range(nu + 1):
        row = []
        for sp in range(nu + 1):
            a = big_f(nu, s, sp, M, M)
            dual = invert_variable(f_tilde(nu, sp, s, M))
            if a != dual:
                raise ArithmeticError(
                    f"boundary value F_{s},{sp}({M},{M}) disagrees with F~_{sp},{s}({M}, 1/q)")
            row.append(a)
        rows.append(row)
    return rows


def main_theorem_rhs(nu: int, s: int, b: int, L: int, M: int) -> LaurentPoly:
    """``sum_{s'} F~_{s',s}(M, 1/q) F~_{s',b}(L-M, q)``."""
    total = ZERO
    for sp in range(nu + 1):
        total = total + invert_variable(f_tilde(nu, sp, s, M)) * f_tilde(nu, sp, b, L - M)
    return total


def regrouped_rhs(nu: int, s: int, b: int, L: int, M: int) -> LaurentPoly:
    """Main-theorem right side with each ``F~_{s',s}(M, 1/q)`` replaced by its bosonic value."""
    same = ZERO
    other = ZERO
    for sp in range(nu + 1):
        tail = f_tilde(nu, sp, b, L - M)
        if (s + sp - M) % 2 == 0:
            same = same + invert_variable(b_bosonic(nu, sp + 1, s + 1, M)) * tail
        else:
            other = other + invert_variable(b_bosonic(nu, 2 * nu + 3 - (sp + 1), s + 1, M)) * tail
    return same + other


# -- verification --------------------------------------------------------------

def verify_ag_polynomial(nu: int, L_max: int) -> VerificationReport:
    """Fermionic = bosonic for every ``0 <= s, b <= nu`` (eq-3.9)."""
    v = Verification("eq-3.9", {"nu": nu, "L": [0, L_max], "s": [0, nu], "b": [0, nu]})
    for L in range(L_max + 1):
        for s in range(nu + 1):
            for b in range(nu + 1):
                v.check({"nu": nu, "L": L, "s": s, "b": b},
                        f_tilde(nu, s, b, L), bosonic_partner(nu, s, b, L))
    return v.report()


def verify_recurrences(nu: int, L_max: int, M_values=(0,)) -> list[VerificationReport]:
    """Shift recurrences (eq-3.10 for M = 0, eq-3.13 otherwise) and the initial values (eq-3.11)."""
    if L_max < 2:
        raise ValueError("L_max must be >= 2")
    reports = []
    v11 = Verification("eq-3.11", {"nu": nu})
    for s in range(nu + 1):
        for b in range(nu + 1):
            v11.check({"nu": nu, "s": s, "b": b}, f_tilde(nu, s, b, 0), ONE if s == b else ZERO)
    reports.append(v11.report())
    for ident, Ms in (("eq-3.10", [M for M in M_values if M == 0]),
                      ("eq-3.13", [M for M in M_values if M != 0])):
        if not Ms:
            continue
        v = Verification(ident, {"nu": nu, "L": [2, L_max], "M": list(Ms)})
        for M in Ms:
            for L in range(2, L_max + 1):
                for s in range(nu + 1):
                    p = {"nu": nu, "s": s, "L": L, "M": M}
                    v.check({**p, "b": 0}, big_f(nu, s, 0, L, M), big_f(nu, s, 1, L - 1, M))
                    for b in range(1, nu + 1):
                        up = b + 1 if b < nu else b
                        rhs = (big_f(nu, s, b - 1, L - 1, M) + big_f(nu, s, up, L - 1, M)
                               + (big_f(nu, s, b, L - 2, M).shift(L - M - 1) - big_f(nu, s, b, L - 2, M)))
                        v.check({**p, "b": b}, big_f(nu, s, b, L, M), rhs)
        reports.append(v.report())
    return reports


def verify_connection(nu: int, M_max: int) -> list[VerificationReport]:
    """``A(0)`` is the identity (eq-3.16) and both routes to ``A(M)`` agree (eq-3.18)."""
    v16 = Verification("eq-3.16", {"nu": nu})
    for s in range(nu + 1):
        for b in range(nu + 1):
            v16.check({"nu": nu, "s": s, "b": b}, big_f(nu, s, b, 0, 0), ONE if s == b else ZERO)
    v18 = Verification("eq-3.18", {"nu": nu, "M": [0, M_max]})
    for M in range(M_max + 1):
        for s in range(nu + 1):
            for b in range(nu + 1):
                v18.check({"nu": nu, "M": M, "s": s, "b": b},
                          big_f(nu, s, b, M, M), invert_variable(f_tilde(nu, b, s, M)))
    return [v16.report(), v18.report()]


def verify_main_theorem(nu: int, L_max: int) -> list[VerificationReport]:
    """Connection formula (eq-3.19) and its parity-regrouped bosonic form (eq-3.20)."""
    grid = {"nu": nu, "L": [0, L_max], "M": [0, "L"], "s": [0, nu], "b": [0, nu]}
    v19 = Verification("eq-3.19", grid)
    v20 = Verification("eq-3.20", grid)
    for L in range(L_max + 1):
        for M in range(L + 1):
            for s in range(nu + 1):
                for b in range(nu + 1):
                    p = {"nu": nu, "L": L, "M": M, "s": s, "b": b}
                    lhs = big_f(nu, s, b, L, M)
                    v19.check(p, lhs, main_theorem_rhs(nu, s, b, L, M))
                    v20.check(p, lhs, regrouped_rhs(nu, s, b, L, M))
    return [v19.report(), v20.report()]


# -- appendix: telescoping expansion -------------------------------------------

def literal_binomial(top: int, bottom: int) -> LaurentPoly:
    """``[top choose bottom]`` read straight off the product definition.

    With ``n = bottom`` and ``m = top - bottom`` this is
    ``(q^(n+1))_m / (q)_m`` (zero for ``m < 0``).  Unlike :func:`q_binomial`
    it accepts ``n <= -2``: when ``top < 0`` every numerator factor has a
    negative exponent and the quotient is the Laurent polynomial
    ``(-1)^m q^-(|top| + .. + |n|-1) [-n-1 choose m]``; otherwise a factor
    ``1 - q^0`` kills it.
    """
    n, m = bottom, top - bottom
    if m < 0:
        return ZERO
    if n >= -1:
        return q_binomial(n, m)
    if top >= 0:
        return ZERO
    sign = -1 if m % 2 else 1
    return gauss(-n - 1, m).shift(-sum(range(-top, -n))) * sign


def shifted_sum(p: AGParams, top_shift, bottom_shift, extra, span: int | None = None,
                low: int = -2) -> LaurentPoly:
    """``sum_n q^(Phi_s(N, M) + extra(m)) prod_i [n_i + m_i + top_i choose n_i + bottom_i]``.

    ``m`` is always the vector belonging to ``(L, s, b)`` of ``p``; the
    shift vectors are built from :func:`unit` and :func:`block`.  The sum
    runs over the box ``low <= n_i <= span`` with binomials evaluated by
    :func:`literal_binomial`.
    """
    nu = p.nu
    span = p.L + 2 if span is None else span
    total = ZERO
    for n in itertools.product(range(low, span + 1), repeat=nu):
        N = tail_sums(n)
        m = m_vector(N, p.L, p.s, p.b)
        term = ONE
        for i in range(nu):
            top = n[i] + m[i] + top_shift[i]
            term = term * literal_binomial(top, n[i] + bottom_shift[i])
            if not term:
                break
        if term:
            total = total + term.shift(phi(N, p.s, p.M) + extra(m))
    return total


def telescoping_sides(nu: int, s: int, b: int, L: int, M: int) -> dict:
    """Both sides of the telescoped differences.

    Keys ``"A.6"`` and, for ``b >= 2``, ``"A.14"`` map to ``(lhs, rhs)``
    pairs.  The first difference removes the ``b+1`` neighbour and the
    ``q^(L-M-1)`` term from ``F_{s,b}(L, M)``; the second compares
    ``F_{s,b-1}(L-1, M)`` with ``F_{s,b}(L-2, M)``.
    """
    p = AGParams(nu, s, b, L, M)
    if not 1 <= b <= nu:
        raise ValueError(f"need 1 <= b <= nu, got b={b}")
    if L < 2:
        raise ValueError(f"need L >= 2, got {L}")
    up = b + 1 if b < nu else b
    lhs6 = (big_f(nu, s, b, L, M) - big_f(nu, s, up, L - 1, M)
            - big_f(nu, s, b, L - 2, M).shift(L - M - 1))
    rhs6 = ZERO
    for i in range(2, b + 1):
        rhs6 = rhs6 + shifted_sum(p, vneg(block(1, i, nu)), vneg(unit(i, nu)),
                                  lambda m, i=i: m[i - 1])
    out = {"A.6": (lhs6, rhs6)}
    if b >= 2:
        lhs14 = big_f(nu, s, b - 1, L - 1, M) - big_f(nu, s, b, L - 2, M)
        swap = vadd(unit(b - 1, nu), vneg(unit(b, nu)))
        rhs14 = ZERO
        for i in range(1, b):
            top = vadd(vneg(block(1, b - 1, nu)), swap, vneg(block(i, b - 1, nu)))
            bottom = vadd(swap, vneg(unit(i, nu)))
            rhs14 = rhs14 + shifted_sum(
                p, top, bottom, lambda m, i=i: m[i - 1] + m[b - 1] - m[b - 2])
        out["A.14"] = (lhs14, rhs14)
    return out


def telescoping_audit(nu: int, s: int, b: int, L: int, M: int) -> VerificationReport:
    """Exact check of the telescoped differences at one parameter point (eq-A.6/A.7/A.14)."""
    sides = telescoping_sides(nu, s, b, L, M)
    ident = "eq-A.7" if b == 1 else "eq-A.6"
    v = Verification(ident, {"nu": nu, "s": s, "b": b, "L": L, "M": M})
    p = {"nu": nu, "s": s, "b": b, "L": L, "M": M}
    lhs, rhs = sides["A.6"]
    if b == 1:
        v.check({**p, "form": "empty sum"}, rhs, ZERO)
    v.check({**p, "form": "A.6"}, lhs, rhs)
    if "A.14" in sides:
        lhs, rhs = sides["A.14"]
        v.check({**p, "form": "A.14"}, lhs, rhs)
    return v.report()


def verify_appendix(nus=(2, 3), L_max: int = 8, M_values=(0, 2), pascal_max: int = 20) -> list[VerificationReport]:
    """q-Pascal rule (eq-A.5) and the telescoping audit over a grid (eq-A.6, A.7, A.14)."""
    v5 = Verification("eq-A.5", {"n": [0, pascal_max], "m": [0, pascal_max]})
    for n in range(pascal_max + 1):
        for m in range(pascal_max + 1):
            v5.check({"n": n, "m": m}, q_binomial(n, m),
                     q_binomial(n, m - 1) + q_binomial(n - 1, m).shift(m))
    pascal = v5.report()
    grid = {"nu": list(nus), "L": [2, L_max], "M": list(M_values)}
    v6 = Verification("eq-A.6", grid)
    v7 = Verification("eq-A.7", grid)
    v14 = Verification("eq-A.14", grid)
    for nu in nus:
        for M in M_values:
            for L in range(2, L_max + 1):
                for s in range(nu + 1):
                    for b in range(1, nu + 1):
                        p = {"nu": nu, "s": s, "b": b, "L": L, "M": M}
                        sides = telescoping_sides(nu, s, b, L, M)
                        lhs, rhs = sides["A.6"]
                        v6.check(p, lhs, rhs)
                        if b == 1:
                            # empty right side: the three-term difference vanishes
                            v7.check({**p, "form": "rhs"}, rhs, ZERO)
                            v7.check({**p, "form": "lhs"}, lhs, ZERO)
                        else:
                            lhs, rhs = sides["A.14"]
                            v14.check(p, lhs, rhs)
    return [pascal, v6.report(), v7.report(), v14.report()]
