import math

import numpy as np
import pytest

from conftest import GOLDEN, SQRT2_M1, substitution_thue_morse
from rrl_lab.dynamics import (
    FEIGENBAUM_C,
    UnimodalMap,
    feigenbaum_product,
    hecke_gamma_outer,
    hecke_outer_eval,
    hecke_outer_truncation_bound,
    hecke_stream,
    itinerary,
    kneading_determinant,
    kneading_sequence,
    occurrence_times,
    smallest_real_zero,
    thue_morse,
)
from rrl_lab.errors import InsufficientDepth, ResonantGamma, ValidationError


# ---------------------------------------------------------------- streams

def test_hecke_stream_period_two():
    s = hecke_stream(0.5)
    assert np.allclose(s.take(6).real, [0, 0.5, 0, 0.5, 0, 0.5])


def test_hecke_stream_first_values():
    s = hecke_stream(GOLDEN)
    assert s.a(0) == 0.0
    assert abs(s.a(1).real - 0.6180339887) < 1e-9


def test_hecke_stream_gamma_periodicity():
    a = hecke_stream(SQRT2_M1, gamma=0.3).take(500)
    b = hecke_stream(SQRT2_M1, gamma=1.3).take(500)
    assert np.max(np.abs(a - b)) < 1e-12


# ---------------------------------------------------------------- outer identities

def _direct_outer(theta: float, gamma: float, z: complex, n: int) -> complex:
    return -sum(((gamma + theta * nn) % 1.0) * z**nn for nn in range(-n, 0))


@pytest.mark.parametrize("theta", [GOLDEN, SQRT2_M1])
def test_outer_identity_irrational(theta):
    z = 2.0 + 0j
    n = 60
    lhs = _direct_outer(theta, 0.0, z, n)
    rhs = hecke_outer_eval(theta, z, n)
    assert abs(lhs - rhs) < 1e-12 + 2 * hecke_outer_truncation_bound(z, n)


def test_outer_vanishes_at_large_z():
    v = hecke_outer_eval(GOLDEN, 1000.0, 80)
    assert abs(v) < 2.0 / 1000.0


@pytest.mark.parametrize("theta", [GOLDEN, SQRT2_M1])
def test_outer_identity_on_sample_ring(theta):
    # five sample points with 1.5 <= |z| <= 4
    import cmath

    zs = [1.5 + 0j, 2.0 * cmath.exp(0.7j), -2.5 + 1.0j, 3.5j, 4.0 + 0j]
    n = 120
    for z in zs:
        lhs = _direct_outer(theta, 0.0, z, n)
        rhs = hecke_outer_eval(theta, z, n)
        assert abs(lhs - rhs) <= 1e-12 + 2 * hecke_outer_truncation_bound(z, n)


def test_outer_rational_theta_known_discrepancy():
    # for theta = 1/2 the continuation formula differs from the direct outer
    # sum by exactly -1/(z^2-1): the fractional-part reflection
    # {-x} = 1 - {x} fails on the integers hit by even k
    theta = 0.5
    z = 2.0 + 0j
    n = 200
    lhs = _direct_outer(theta, 0.0, z, n)
    rhs = hecke_outer_eval(theta, z, n)
    assert abs((rhs - lhs) + 1.0 / (z * z - 1.0)) < 1e-12


def test_outer_requires_outside_disc():
    with pytest.raises(ValidationError):
        hecke_outer_eval(GOLDEN, 1.0, 10)


def test_gamma_outer_identity():
    z = 2.0 + 0j
    n = 60
    lhs = _direct_outer(SQRT2_M1, 0.3, z, n)
    rhs = hecke_gamma_outer(SQRT2_M1, 0.3, z, n)
    assert abs(lhs - rhs) < 1e-10


def test_gamma_outer_multiple_sample_points():
    for z in (3.0 + 0j, 1.5 + 1.5j, -2.5 + 0.5j):
        lhs = _direct_outer(GOLDEN, 0.25, z, 80)
        rhs = hecke_gamma_outer(GOLDEN, 0.25, z, 80)
        assert abs(lhs - rhs) < 1e-10 + 2 * hecke_outer_truncation_bound(z, 80)


def test_gamma_outer_resonant_rejected():
    with pytest.raises(ResonantGamma):
        hecke_gamma_outer(GOLDEN, 0.0, 2.0, 40)
    with pytest.raises(ResonantGamma):
        hecke_gamma_outer(GOLDEN, (5 * GOLDEN) % 1.0, 2.0, 40)


# ---------------------------------------------------------------- occurrence times

def test_occurrence_times_identity():
    theta = SQRT2_M1
    g1, g2 = 0.2, 0.7
    n = 10_000
    times = set(int(k) for k in occurrence_times(theta, g1, g2, n))
    for k in range(n + 1):
        f = (k * theta) % 1.0
        if min(abs(f - (1 - g2)), abs(f - (1 - g1))) < 1e-9:
            continue  # endpoint membership undecidable in float
        coeff = ((g1 + k * theta) % 1.0) - ((g2 + k * theta) % 1.0) + (g2 - g1)
        indicator = 1.0 if k in times else 0.0
        assert abs(coeff - indicator) < 1e-12


def test_occurrence_times_wide_interval_covers_almost_all():
    times = occurrence_times(SQRT2_M1, 0.001, 0.999, 2000)
    assert len(times) > 1990


def test_occurrence_times_validates_interval():
    with pytest.raises(ValidationError):
        occurrence_times(SQRT2_M1, 0.5, 0.5, 10)
    with pytest.raises(ValidationError):
        occurrence_times(SQRT2_M1, -0.1, 0.5, 10)


# ---------------------------------------------------------------- kneading

def test_itinerary_identity_like_map():
    fixed = UnimodalMap(fn=lambda x: x, critical=0.5, increasing_side="left")
    assert np.all(itinerary(fixed, 0.1, 20) == 1)


def test_itinerary_tent_critical_orbit():
    # orbit 1/2 -> 1 -> 0 -> 0 ...
    signs = itinerary(UnimodalMap.tent(), 0.5, 5)
    assert list(signs) == [1, -1, 1, 1, 1, 1]


def test_itinerary_values_are_signs():
    rng = np.random.default_rng(71)
    for x0 in rng.random(5):
        signs = itinerary(UnimodalMap.tent(), float(x0), 50)
        assert set(np.unique(signs)) <= {-1, 1}


def test_kneading_determinant_all_plus():
    d = kneading_determinant([1] * 8).d_coeffs
    assert np.all(d == 1)


def test_kneading_determinant_tent():
    eps = kneading_sequence(UnimodalMap.tent(), 8)
    d = kneading_determinant(eps).d_coeffs
    assert list(d) == [1, -1, -1, -1, -1, -1, -1, -1, -1]


def test_kneading_determinant_rejects_bad_signs():
    with pytest.raises(ValidationError):
        kneading_determinant([1, 0, -1])


def test_feigenbaum_kneading_matches_thue_morse():
    eps = kneading_sequence(UnimodalMap.quadratic(FEIGENBAUM_C), 64)
    d = kneading_determinant(eps).d_coeffs
    tm = thue_morse(64)
    assert np.array_equal(d, (-1) ** tm)


def test_kneading_coefficients_unimodular():
    rng = np.random.default_rng(73)
    eps = rng.choice([-1, 1], size=200)
    d = kneading_determinant(eps).d_coeffs
    assert np.all(np.abs(d) == 1)


def test_thue_morse_two_renascent_completions_evidence():
    # exact finite-window search on the sign stream finds exactly two
    # negative-side completions, one the negation of the other (evidence
    # at this window size, not an enumeration proof)
    from rrl_lab.right_limits import renascent_shift_search, window_cluster
    from rrl_lab.streams import from_values

    n = 1 << 14
    signs = ((-1.0) ** thue_morse(n)).astype(complex)
    report = renascent_shift_search(from_values(signs), 8, n - 9, 0.0)
    clusters = window_cluster(report, 0.0)
    assert len(clusters) == 2
    a = clusters[0].representative.negative_side()
    b = clusters[1].representative.negative_side()
    assert np.array_equal(a, -b)


# ---------------------------------------------------------------- real zero

def test_tent_entropy_log_two():
    eps = kneading_sequence(UnimodalMap.tent(), 64)
    d = kneading_determinant(eps).d_coeffs.astype(float)
    res = smallest_real_zero(d, tol=1e-7)
    assert res.status == "zero"
    # closed-form oracle: the full series is (1-2z)/(1-z), zero at 1/2
    assert abs(res.root - 0.5) < 1e-6
    assert abs(res.entropy - math.log(2.0)) < 2e-6


def test_all_ones_has_no_zero():
    res = smallest_real_zero(np.ones(64), tol=1e-6)
    assert res.status == "no-zero"
    assert res.entropy == 0.0


def test_feigenbaum_product_no_zero_below_099():
    d = feigenbaum_product(2047).astype(float)
    res = smallest_real_zero(d, tol=1e-6)
    assert res.status == "no-zero"
    assert res.r_max >= 0.99
    assert res.entropy == 0.0


def test_zero_bracket_monotone_under_depth():
    # deepening the truncation moves the root by at most the shallower tail
    prev = None
    for n in (32, 64, 128):
        eps = kneading_sequence(UnimodalMap.tent(), n)
        d = kneading_determinant(eps).d_coeffs.astype(float)
        res = smallest_real_zero(d, tol=1e-7)
        if prev is not None:
            (lo, hi), tail = prev
            assert lo - tail <= res.root <= hi + tail
        prev = (res.bracket, res.tail_at_root)


def test_insufficient_depth_detected():
    # 1 - z^20 - ... - z^40 crosses zero near 0.97, beyond the certified zone
    c = np.zeros(41)
    c[0] = 1.0
    c[20:] = -1.0
    with pytest.raises(InsufficientDepth):
        smallest_real_zero(c, tol=1e-3)


def test_real_zero_validates_inputs():
    with pytest.raises(ValidationError):
        smallest_real_zero(np.array([2.0, 0.0]), tol=1e-6)
    with pytest.raises(ValidationError):
        smallest_real_zero(np.ones(4), tol=0.0)


# ---------------------------------------------------------------- thue-morse

def test_thue_morse_first_eight():
    assert list(thue_morse(7)) == [0, 1, 1, 0, 1, 0, 0, 1]


def test_thue_morse_recurrence():
    n = 400
    tm = thue_morse(2 * n + 1)
    for k in range(n + 1):
        assert tm[2 * k] == tm[k]
        if 2 * k + 1 <= 2 * n + 1:
            assert tm[2 * k + 1] == 1 - tm[k]


def test_thue_morse_matches_substitution_oracle():
    word = substitution_thue_morse(10)  # length 1024
    assert list(thue_morse(1023)) == word


def test_feigenbaum_product_small():
    assert list(feigenbaum_product(7)) == [1, -1, -1, 1, -1, 1, 1, -1]
    assert feigenbaum_product(0)[0] == 1
    for n in (1, 5, 12):
        assert feigenbaum_product(n)[0] == 1


def test_feigenbaum_product_matches_convolution_oracle():
    n = 31
    poly = np.array([1.0])
    step = 1
    while step <= n:
        factor = np.zeros(step + 1)
        factor[0] = 1.0
        factor[step] = -1.0
        poly = np.convolve(poly, factor)
        step *= 2
    assert np.array_equal(feigenbaum_product(n), poly[: n + 1].astype(np.int64))


def test_feigenbaum_product_equals_thue_morse_signs():
    n = 1023
    assert np.array_equal(feigenbaum_product(n), (-1) ** thue_morse(n))
