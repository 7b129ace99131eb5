"""Exact Laurent polynomials, Gaussian binomials and truncated series."""

from qgordon.qalgebra import ONE, Q, LaurentPoly, RationalQ, eval_at_one, gauss, invert_variable, series_inverse_product

# polynomials are sparse maps exponent -> integer, negative exponents allowed
p = LaurentPoly({-1: 2, 0: -1, 3: 1})
print("p          =", p.render())
print("p(1/q)     =", invert_variable(p).render())
print("p * (1+q)  =", (p * (ONE + Q)).render())

# coefficients never overflow
big = (ONE + Q) ** 120
print("C(120, 60) =", big.coefficient(60))

# [6 choose 3] is palindromic and evaluates to the ordinary binomial at q = 1
g = gauss(6, 3)
print("[6 choose 3] =", g.render())
print("at q=1       =", eval_at_one(g))

# an infinite product known only up to q^20; the window travels with the value
rr = series_inverse_product(5, (1, 4), 20)
print("1/prod(1-q^n), n = +-1 mod 5:", rr.render())

# rationals compare by cross-multiplication, no cancellation needed
print((ONE - Q * Q) * 1 == RationalQ(ONE - Q ** 4, ONE + Q * Q))
