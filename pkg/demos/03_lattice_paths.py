"""Admissible lattice paths as an independent oracle for the shifted polynomials."""

from qgordon.paths import AdmissiblePath, enumerate_paths, path_gf, render_path, verify_path_lemma
from qgordon.rrpoly import f_shifted

# the partition 14 = 2 + 4 + 8 as a path on [0, 10]
path = AdmissiblePath.from_peaks(0, 10, [2, 4, 8])
print(render_path(path))
print("weight:", path.weight)

# shifting the interval to [-M, L-M] makes some peaks negative
L, M = 6, 3
for p in enumerate_paths(-M, L - M, 0, 0):
    print(p.peaks, p.weight)

# the enumeration agrees with the t-sum, which is never consulted above
print(path_gf(-M, L - M, 0, 0) == f_shifted(0, 0, L, M))
print(path_gf(-M, L - M, 0, 0).render())

for report in verify_path_lemma(12):
    print(report.summary_line())
