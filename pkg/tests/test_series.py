import pytest

from oracles import gordon_partitions, rr_difference_partitions
from qgordon.qalgebra import LaurentPoly, TruncatedLaurentSeries
from qgordon.series import (
    ag_product,
    ag_series_check,
    ag_variant_series_check,
    binomial_limit_check,
    gis_series_check,
    multisum_series,
    poly_times_product,
    rr_series_check,
    stabilization_thresholds,
    theta_sum,
    variant_rhs,
)
from qgordon.agcore import f_tilde


def test_rr_examples():
    rep = rr_series_check(0, 6)
    assert rep.passed and rep.window == [0, 6]
    assert list(multisum_series(1, 2, 0, 6).coeffs) == [1, 1, 1, 1, 2, 2]
    assert list(multisum_series(1, 1, 0, 5).coeffs) == [1, 0, 1, 1, 1]
    assert rr_series_check(1, 1).passed


@pytest.mark.parametrize("a", [0, 1])
def test_rr_sum_counts_difference_partitions(a):
    limit = 60
    assert list(multisum_series(1, 2 - a, 0, limit).coeffs) == rr_difference_partitions(a, limit)


@pytest.mark.parametrize("nu", [1, 2, 3])
def test_products_match_gordon_partitions(nu):
    limit = 40
    for s in range(1, nu + 2):
        assert list(ag_product(nu, s, limit).coeffs) == gordon_partitions(nu, s, limit)


def test_multisum_examples():
    assert ag_series_check(2, 20).passed
    assert list(multisum_series(2, 3, 0, 20).coeffs) == gordon_partitions(2, 3, 20)
    assert list(multisum_series(2, 1, 0, 20).coeffs) == gordon_partitions(2, 1, 20)


def test_weak_window_flag():
    assert rr_series_check(0, 10).notes.get("weak") is True
    assert "weak" not in rr_series_check(0, 30).notes


def test_bad_arguments():
    with pytest.raises(ValueError):
        rr_series_check(2, 10)
    with pytest.raises(ValueError):
        rr_series_check(0, 0)
    with pytest.raises(ValueError):
        ag_series_check(0, 10)
    with pytest.raises(ValueError):
        ag_variant_series_check(2, 4)


def test_gis_series():
    rep11, rep12 = gis_series_check(6, 6, 50)
    assert rep11.passed and rep12.passed
    # prefactors push the window below zero but never shorten its top
    assert rep12.window[1] == 50 and rep12.window[0] < 0


def test_shifted_multisum_window_and_bound():
    # raising the N_1 search bound changes nothing: the window is already complete
    for M in range(0, 7):
        series = multisum_series(2, 2, M, 40)
        assert series.min_exponent == -(M * M // 4)
        longer = multisum_series(2, 2, M, 60)
        assert longer.truncate(40).coeffs == series.coeffs


def test_poly_times_product_window():
    poly = LaurentPoly({-5: 1, 0: 2})
    series = poly_times_product(poly, 1, 1, 30)
    assert series.window() == (-5, 30)


def test_variant_reduces_at_M_zero():
    for nu in (1, 2):
        for s in range(1, nu + 2):
            assert variant_rhs(nu, s, 0, 30).agrees_with(ag_product(nu, s, 30))


def test_variant_rank_one_is_negative_shift_identity():
    rep21, _ = ag_variant_series_check(1, 2, 4, 30)
    assert rep21.passed
    (rep12,) = gis_series_check(0, 4, 30)[1:]
    assert rep12.passed


@pytest.mark.parametrize("nu", [1, 2])
def test_variant_identity(nu):
    for s in range(1, nu + 2):
        rep21 = ag_variant_series_check(nu, s, 4, 25)[0]
        assert rep21.passed, rep21.summary_line()


def test_theta_sum_low_terms():
    # s = 2, nu = 1: 1 - q^2 - q^3 + q^11 + q^9 - ...
    theta = theta_sum(1, 2, 12)
    assert theta == LaurentPoly({0: 1, 2: -1, 3: -1, 9: 1, 11: 1})


def test_binomial_limit():
    assert binomial_limit_check(8, 20, 40).passed


def test_stabilization_is_recorded():
    rows = stabilization_thresholds(2, 1, 0, 20, 50)
    assert len(rows) == 21
    # the threshold grows with L once L is moderate
    assert rows[-1] >= 15
    # F~_{0,0}(1) = 0, so the first disagreement is at q^0
    assert f_tilde(2, 0, 0, 1).is_zero()
    assert rows[1] == 0
    _, rep22 = ag_variant_series_check(2, 1, 1, 50)
    assert rep22.notes["first_disagreement"]["b=0"] == rows


def test_stabilization_reaches_cutoff_for_large_L():
    limit = ag_product(2, 3, 30)
    series = TruncatedLaurentSeries.from_poly(f_tilde(2, 2, 2, 40), 30, 0)
    assert series.agrees_with(limit)
