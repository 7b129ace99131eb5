"""Finite Rogers-Ramanujan polynomials in three forms, and their negative indices."""

from qgordon.rrpoly import RRKind, d_poly, e_poly, fib, rr_bosonic, rr_recurrence, verify_finite_rr, verify_gis_finite

for L in range(7):
    print(f"e_{L} = {e_poly(L).render()}")

# the alternating sum and the recurrence give the same polynomials
L = 12
print(rr_bosonic(RRKind.E, L) == e_poly(L), rr_recurrence(RRKind.D, L)[L] == d_poly(L))

# negative indices are Laurent polynomials, read off the recurrence backwards
for L in (-1, -2, -3, -4):
    print(f"e_{L} = {e_poly(L).render():24}  d_{L} = {d_poly(L).render()}")

# at q = 1 everything collapses to Fibonacci numbers
print([fib(L) for L in range(-6, 10)])

for report in verify_finite_rr(20) + verify_gis_finite(15, 6):
    print(report.summary_line())
