"""Andrews-Gordon multisums, their bosonic forms and the connection formula."""

from qgordon.agcore import (
    big_f,
    bosonic_partner,
    connection_coefficients,
    f_tilde,
    main_theorem_rhs,
    verify_ag_polynomial,
    verify_main_theorem,
)

nu = 2
for L in range(6):
    print(f"F~_0,0({L}) = {f_tilde(nu, 0, 0, L).render()}")

# the positive multisum equals an alternating sum of Gaussian binomials
print(all(f_tilde(nu, s, b, 9) == bosonic_partner(nu, s, b, 9) for s in range(3) for b in range(3)))

# shifting the exponent by -M N_1 gives Laurent polynomials ...
print("F_1,2(7, 3) =", big_f(nu, 1, 2, 7, 3).render())
# ... which expand in the unshifted basis with coefficients F~(M, 1/q)
print(big_f(nu, 1, 2, 7, 3) == main_theorem_rhs(nu, 1, 2, 7, 3))

for row in connection_coefficients(nu, 2):
    print("  ", [a.render() for a in row])

print(verify_ag_polynomial(nu, 10).summary_line())
for report in verify_main_theorem(nu, 8):
    print(report.summary_line())
