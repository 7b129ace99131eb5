"""Exact arithmetic in one formal variable q.

Three value types live here:

``LaurentPoly``
    integer Laurent polynomials, stored sparsely as ``{exponent: coefficient}``
    with zero coefficients removed.
``TruncatedLaurentSeries``
    Laurent series whose coefficients are known on a window
    ``[min_exponent, cutoff)``; everything below ``min_exponent`` is zero.
``RationalQ``
    quotients of Laurent polynomials, compared by cross-multiplication.

plus the q-Pochhammer symbol, Gaussian binomials and truncated infinite
products built on them.  Coefficients are Python ints throughout.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Mapping


# dense convolution kicks in once both operands have this many terms
_DENSE_THRESHOLD = 24


class LaurentPoly:
    """Immutable integer Laurent polynomial in ``q``."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | None = None):
        clean = {}
        if terms:
            for e, c in terms.items():
                c = int(c)
                if c:
                    clean[int(e)] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "LaurentPoly":
        # caller guarantees canonical form
        p = object.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> "LaurentPoly":
        return cls({exponent: coefficient})

    @classmethod
    def constant(cls, c: int) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def from_dense(cls, coeffs: Iterable[int], min_exponent: int = 0) -> "LaurentPoly":
        return cls._raw({min_exponent + i: c for i, c in enumerate(coeffs) if c})

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self) -> dict:
        """A copy of the exponent -> coefficient mapping."""
        return dict(self._terms)

    def items(self):
        """(exponent, coefficient) pairs in ascending exponent order."""
        return sorted(self._terms.items())

    def coefficient(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int | None:
        """Largest exponent, or None for the zero polynomial."""
        return max(self._terms) if self._terms else None

    def valuation(self) -> int | None:
        """Smallest exponent, or None for the zero polynomial."""
        return min(self._terms) if self._terms else None

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if len(other._terms) > len(self._terms):
            big, small = other._terms, self._terms
        else:
            big, small = self._terms, other._terms
        out = dict(big)
        for e, c in small.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._terms, other._terms
        if not a or not b:
            return ZERO
        if len(a) == 1:
            (ea, ca), = a.items()
            return LaurentPoly._raw({ea + e: ca * c for e, c in b.items()})
        if len(b) == 1:
            (eb, cb), = b.items()
            return LaurentPoly._raw({eb + e: cb * c for e, c in a.items()})
        if len(a) >= _DENSE_THRESHOLD and len(b) >= _DENSE_THRESHOLD:
            return _dense_mul(a, b)
        out: dict[int, int] = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                k = ea + eb
                out[k] = out.get(k, 0) + ca * cb
        return LaurentPoly._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers are supported")
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``q**k``."""
        if not k:
            return self
        return LaurentPoly._raw({e + k: c for e, c in self._terms.items()})

    # -- comparison / hashing -----------------------------------------------

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        if isinstance(other, int):
            return self._terms == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- rendering ----------------------------------------------------------

    def render(self) -> str:
        """Canonical text form, ascending exponents, e.g. ``2*q^-1 - 1 + q^3``."""
        if not self._terms:
            return "0"
        parts = []
        for i, (e, c) in enumerate(self.items()):
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if e == 0:
                body = str(a)
            else:
                mono = "q" if e == 1 else f"q^{e}"
                body = mono if a == 1 else f"{a}*{mono}"
            if i == 0:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    __str__ = render

    def __repr__(self):
        return f"LaurentPoly({self.render()!r})"

    def to_pairs(self) -> list[list]:
        """JSON-ready ``[[exponent, "coefficient"], ...]`` in ascending order."""
        return [[e, str(c)] for e, c in self.items()]

    @classmethod
    def from_pairs(cls, pairs) -> "LaurentPoly":
        return cls({int(e): int(c) for e, c in pairs})


def _dense_mul(a: dict, b: dict) -> LaurentPoly:
    amin, bmin = min(a), min(b)
    da = [0] * (max(a) - amin + 1)
    for e, c in a.items():
        da[e - amin] = c
    db = [0] * (max(b) - bmin + 1)
    for e, c in b.items():
        db[e - bmin] = c
    out = [0] * (len(da) + len(db) - 1)
    for i, x in enumerate(da):
        if x:
            for j, y in enumerate(db):
                if y:
                    out[i + j] += x * y
    return LaurentPoly.from_dense(out, amin + bmin)


ZERO = LaurentPoly._raw({})
ONE = LaurentPoly._raw({0: 1})
Q = LaurentPoly._raw({1: 1})


def invert_variable(p: LaurentPoly) -> LaurentPoly:
    """Substitute ``q -> 1/q``."""
    return LaurentPoly._raw({-e: c for e, c in p._terms.items()})


def eval_at_one(p: LaurentPoly) -> int:
    """Value at ``q = 1``: the sum of all coefficients."""
    return sum(p._terms.values())


@lru_cache(maxsize=None)
def q_pochhammer(a: int, t: int) -> LaurentPoly:
    """``(q^a; q)_t``, the product of ``1 - q^(a+j)`` for ``0 <= j < t``."""
    if t < 0:
        raise ValueError(f"q_pochhammer needs t >= 0, got {t}")
    result = ONE
    for j in range(t):
        result = result * LaurentPoly({0: 1, a + j: -1})
    return result


def odd_pochhammer(m: int) -> LaurentPoly:
    """``(q; q^2)_m``, the product of ``1 - q^(2j+1)`` for ``0 <= j < m``."""
    if m < 0:
        raise ValueError(f"odd_pochhammer needs m >= 0, got {m}")
    result = ONE
    for j in range(m):
        result = result * LaurentPoly({0: 1, 2 * j + 1: -1})
    return result


@lru_cache(maxsize=None)
def _gaussian(n: int, m: int) -> LaurentPoly:
    # [n+m choose n] for n, m >= 0, via the q-Pascal rule on dense rows
    if n > m:
        n, m = m, n
    # build column by column: prev[k] = [j-1+k choose j-1]
    prev = [[1] for _ in range(m + 1)]  # j = 0: all ones
    for j in range(1, n + 1):
        cur = [[1]]  # k = 0
        for k in range(1, m + 1):
            # [j+k choose j] = [j+k-1 choose j] + q^k [j+k-1 choose j-1]
            left = cur[k - 1]
            right = prev[k]
            size = max(len(left), len(right) + k)
            out = [0] * size
            for i, c in enumerate(left):
                out[i] += c
            for i, c in enumerate(right):
                out[i + k] += c
            cur.append(out)
        prev = cur
    return LaurentPoly.from_dense(prev[m])


def q_binomial(n: int, m: int) -> LaurentPoly:
    """Gaussian binomial ``[n+m choose n]`` indexed by ``(n, m)``.

    Defined as ``(q^(n+1))_m / (q)_m`` for ``m >= 0`` and zero for ``m < 0``.
    Besides the ordinary range ``n >= 0`` the value at ``n = -1`` is needed
    by the Andrews-Gordon multisums: it is 1 for ``m = 0`` and 0 otherwise.
    Anything below ``n = -1`` raises ``ValueError``.
    """
    if n < -1:
        raise ValueError(f"q_binomial is undefined here for n = {n} < -1")
    if m < 0:
        return ZERO
    if n == -1:
        return ONE if m == 0 else ZERO
    return _gaussian(n, m)


def gauss(top: int, bottom: int) -> LaurentPoly:
    """``[top choose bottom]`` with value zero unless ``0 <= bottom <= top``.

    For ``top >= 0`` this agrees with :func:`q_binomial`, whose product
    form vanishes for every negative ``bottom``.
    """
    if bottom < 0 or bottom > top:
        return ZERO
    return _gaussian(bottom, top - bottom)


class TruncatedLaurentSeries:
    """Laurent series known on ``[min_exponent, cutoff)``.

    Coefficients below ``min_exponent`` are zero; coefficients at or beyond
    ``cutoff`` are unknown and no operation ever claims them.
    """

    __slots__ = ("min_exponent", "cutoff", "coeffs")

    def __init__(self, min_exponent: int, cutoff: int, coeffs: Iterable[int] = ()):
        if cutoff < min_exponent:
            cutoff = min_exponent
        coeffs = list(coeffs)[: cutoff - min_exponent]
        coeffs += [0] * (cutoff - min_exponent - len(coeffs))
        self.min_exponent = min_exponent
        self.cutoff = cutoff
        self.coeffs = tuple(int(c) for c in coeffs)

    @classmethod
    def from_poly(cls, p: LaurentPoly, cutoff: int, min_exponent: int | None = None):
        if min_exponent is None:
            v = p.valuation()
            min_exponent = min(v, cutoff) if v is not None else cutoff
        elif p and p.valuation() < min_exponent:
            raise ValueError("polynomial has terms below min_exponent")
        dense = [p.coefficient(k) for k in range(min_exponent, cutoff)]
        return cls(min_exponent, cutoff, dense)

    @classmethod
    def one(cls, cutoff: int):
        return cls(0, cutoff, [1])

    def to_poly(self) -> LaurentPoly:
        """The known part as a polynomial (lossless below ``cutoff``)."""
        return LaurentPoly.from_dense(self.coeffs, self.min_exponent)

    def coefficient(self, k: int) -> int:
        if k >= self.cutoff:
            raise IndexError(f"coefficient of q^{k} is beyond cutoff {self.cutoff}")
        if k < self.min_exponent:
            return 0
        return self.coeffs[k - self.min_exponent]

    def window(self) -> tuple[int, int]:
        return (self.min_exponent, self.cutoff)

    def truncate(self, cutoff: int) -> "TruncatedLaurentSeries":
        cutoff = min(cutoff, self.cutoff)
        return TruncatedLaurentSeries(self.min_exponent, cutoff, self.coeffs)

    def _coerce(self, other):
        if isinstance(other, TruncatedLaurentSeries):
            return other
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if isinstance(other, LaurentPoly):
            return other
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if isinstance(other, LaurentPoly):
            lo = min(self.min_exponent, other.valuation() if other else self.min_exponent)
            other = TruncatedLaurentSeries.from_poly(other, self.cutoff, min(lo, self.cutoff))
        lo = min(self.min_exponent, other.min_exponent)
        hi = min(self.cutoff, other.cutoff)
        return TruncatedLaurentSeries(
            lo, hi, [self.coefficient(k) + other.coefficient(k) for k in range(lo, hi)]
        )

    __radd__ = __add__

    def __neg__(self):
        return TruncatedLaurentSeries(self.min_exponent, self.cutoff, [-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if isinstance(other, LaurentPoly):
            # exact polynomial: only the series side limits the window
            if not other:
                return TruncatedLaurentSeries(self.cutoff, self.cutoff)
            lo = self.min_exponent + other.valuation()
            hi = self.cutoff + other.valuation()
            out = [0] * (hi - lo)
            base = self.min_exponent
            for e, c in other.items():
                off = base + e - lo
                for i, x in enumerate(self.coeffs):
                    j = off + i
                    if j >= len(out):
                        break
                    if x:
                        out[j] += c * x
            return TruncatedLaurentSeries(lo, hi, out)
        lo = self.min_exponent + other.min_exponent
        hi = min(self.cutoff + other.min_exponent, other.cutoff + self.min_exponent)
        out = [0] * max(hi - lo, 0)
        n = len(out)
        for i, x in enumerate(self.coeffs):
            if not x or i >= n:
                continue
            for j, y in enumerate(other.coeffs[: n - i]):
                if y:
                    out[i + j] += x * y
        return TruncatedLaurentSeries(lo, hi, out)

    __rmul__ = __mul__

    def first_disagreement(self, other: "TruncatedLaurentSeries") -> int | None:
        """Smallest exponent on the shared window where the two differ."""
        lo = min(self.min_exponent, other.min_exponent)
        hi = min(self.cutoff, other.cutoff)
        for k in range(lo, hi):
            if self.coefficient(k) != other.coefficient(k):
                return k
        return None

    def agrees_with(self, other: "TruncatedLaurentSeries") -> bool:
        return self.first_disagreement(other) is None

    def __eq__(self, other):
        if not isinstance(other, TruncatedLaurentSeries):
            return NotImplemented
        return (self.cutoff == other.cutoff and self.to_poly() == other.to_poly())

    __hash__ = None

    def render(self) -> str:
        body = self.to_poly().render()
        return f"{body} + O(q^{self.cutoff})"

    __str__ = render

    def __repr__(self):
        return f"TruncatedLaurentSeries({self.render()!r})"


def _geometric_fill(coeffs: list, parts, offset: int = 0) -> None:
    # divide in place by (1 - q^n) for each n in parts; coeffs[k] is q^(k+offset)
    size = len(coeffs)
    for n in parts:
        for k in range(n, size):
            coeffs[k] += coeffs[k - n]


def series_inverse_product(modulus: int, allowed_residues, cutoff: int) -> TruncatedLaurentSeries:
    """Product of ``1/(1-q^n)`` over ``n >= 1`` with ``n mod modulus`` allowed."""
    allowed = {r % modulus for r in allowed_residues}
    if not allowed:
        raise ValueError("allowed_residues must be nonempty")
    if cutoff < 1:
        raise ValueError("cutoff must be >= 1")
    coeffs = [1] + [0] * (cutoff - 1)
    _geometric_fill(coeffs, (n for n in range(1, cutoff) if n % modulus in allowed))
    return TruncatedLaurentSeries(0, cutoff, coeffs)


def inverse_pochhammer_series(t: int, cutoff: int) -> TruncatedLaurentSeries:
    """``1/(q;q)_t`` to ``cutoff``; ``t=None`` gives ``1/(q;q)_infinity``."""
    coeffs = [1] + [0] * (max(cutoff, 1) - 1)
    top = cutoff if t is None else min(t + 1, cutoff)
    _geometric_fill(coeffs, range(1, top))
    return TruncatedLaurentSeries(0, cutoff, coeffs)


class RationalQ:
    """Quotient of Laurent polynomials, compared by cross-multiplication."""

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator, denominator=ONE):
        numerator = LaurentPoly._coerce(numerator)
        denominator = LaurentPoly._coerce(denominator)
        if not denominator:
            raise ZeroDivisionError("RationalQ denominator is zero")
        self.numerator = numerator
        self.denominator = denominator

    @staticmethod
    def _coerce(other):
        if isinstance(other, RationalQ):
            return other
        if isinstance(other, (LaurentPoly, int)):
            return RationalQ(other)
        return NotImplemented

    def is_polynomial(self) -> bool:
        return self.denominator == ONE

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.denominator == other.denominator:
            return RationalQ(self.numerator + other.numerator, self.denominator)
        return RationalQ(
            self.numerator * other.denominator + other.numerator * self.denominator,
            self.denominator * other.denominator,
        )

    __radd__ = __add__

    def __neg__(self):
        return RationalQ(-self.numerator, self.denominator)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RationalQ(self.numerator * other.numerator, self.denominator * other.denominator)

    __rmul__ = __mul__

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.numerator * other.denominator == other.numerator * self.denominator

    __hash__ = None

    def invert_variable(self) -> "RationalQ":
        return RationalQ(invert_variable(self.numerator), invert_variable(self.denominator))

    def render(self) -> str:
        if self.is_polynomial():
            return self.numerator.render()
        return f"({self.numerator.render()})/({self.denominator.render()})"

    __str__ = render

    def __repr__(self):
        return f"RationalQ({self.render()!r})"
