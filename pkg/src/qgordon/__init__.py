"""Exact verification of Rogers-Ramanujan and Andrews-Gordon type identities.

Polynomials are exact Laurent polynomials with integer coefficients,
series are truncated on explicit windows, and every identity check
produces a :class:`VerificationReport`.
"""

from .qalgebra import (
    ONE,
    Q,
    ZERO,
    LaurentPoly,
    RationalQ,
    TruncatedLaurentSeries,
    eval_at_one,
    gauss,
    invert_variable,
    q_binomial,
    q_pochhammer,
)
from .report import VerificationReport
from .rrpoly import RRKind, d_poly, e_poly, f_shifted
from .paths import AdmissiblePath, enumerate_paths, path_gf
from .agcore import b_bosonic, big_f, f_tilde
from .santos import santos_S, santos_T

__all__ = [
    "ONE", "Q", "ZERO", "LaurentPoly", "RationalQ", "TruncatedLaurentSeries",
    "eval_at_one", "gauss", "invert_variable", "q_binomial", "q_pochhammer",
    "VerificationReport", "RRKind", "d_poly", "e_poly", "f_shifted",
    "AdmissiblePath", "enumerate_paths", "path_gf", "b_bosonic", "big_f", "f_tilde",
    "santos_S", "santos_T",
]
