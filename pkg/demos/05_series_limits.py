"""Infinite identities checked coefficientwise on explicit windows."""

from qgordon.agcore import f_tilde
from qgordon.qalgebra import TruncatedLaurentSeries
from qgordon.series import (
    ag_product,
    ag_series_check,
    ag_variant_series_check,
    multisum_series,
    rr_series_check,
    stabilization_thresholds,
)

print(multisum_series(1, 2, 0, 15).render())
print(rr_series_check(0).summary_line())
print(ag_series_check(2).summary_line())

# a shift -M N_1 reaches below q^0; the window records how far
shifted, _ = ag_variant_series_check(2, 2, M_max=4)
print(shifted.summary_line())

# finite polynomials approach their limit product; where does the first
# coefficient differ?  For small L it can be right at q^0.
print(stabilization_thresholds(2, 1, 0, 20, 50))
limit = ag_product(2, 1, 30)
print(TruncatedLaurentSeries.from_poly(f_tilde(2, 0, 0, 40), 30, 0).agrees_with(limit))
