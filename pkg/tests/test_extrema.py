import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from polygrowth.errors import DomainError, ResourceError
from polygrowth.extrema import (CircleEstimate, curvature_bound, default_tol, lipschitz_bound,
                                max_modulus, min_modulus, rounding_floor)
from polygrowth.poly import EPS, Polynomial, evaluate

HALF_AR4 = Polynomial([0.5, 0, 0, 0, 0.5])
CUBE = Polynomial([0, 0, 0, 1])
QUAD = Polynomial([-0.25, 0, 1])


def fft_grid(p, r, npts):
    """|p| on npts equispaced points of |z| = r via one FFT (independent of Horner)."""
    b = np.zeros(npts, dtype=complex)
    b[: p.coeffs.size] = p.coeffs * r ** np.arange(p.coeffs.size)
    return np.abs(np.fft.ifft(b) * npts)


def random_poly(rng, nmax=10):
    n = int(rng.integers(1, nmax + 1))
    return Polynomial(rng.normal(size=n + 1) + 1j * rng.normal(size=n + 1))


@pytest.mark.parametrize("p, r, expected", [
    (Polynomial([0, 0, 0, 0, 0, 1]), 1.0, 5.0),
    (HALF_AR4, 1.0, 2.0),
    (QUAD, 2.0, 8.0),
])
def test_lipschitz_examples(p, r, expected):
    assert lipschitz_bound(p, r) == expected


def test_max_examples():
    est = max_modulus(CUBE, 2.0)
    assert abs(est.value - 8) <= 8 * 4 * EPS
    assert est.err <= default_tol(CUBE, 2.0)

    est = max_modulus(HALF_AR4, 1.0)
    assert est.value == 1.0
    assert est.arg_theta == 0.0

    est = max_modulus(QUAD, 1.0)
    assert abs(est.value - 1.25) <= est.err + 1e-15
    assert abs(est.arg_theta - math.pi / 2) < 1e-6


def test_min_examples():
    est = min_modulus(QUAD, 0.5)
    assert est.lower == 0.0
    assert est.value <= default_tol(QUAD, 0.5)

    est = min_modulus(CUBE, 2.0)
    assert abs(est.value - 8) <= 8 * 4 * EPS

    est = min_modulus(HALF_AR4, 1.0)
    assert est.lower == 0.0
    assert est.value <= default_tol(HALF_AR4, 1.0)
    assert abs(est.arg_theta - math.pi / 4) < 1e-6


def test_constant_input_skips_sampling():
    est = max_modulus(Polynomial([3 - 4j]), 2.0)
    assert est == CircleEstimate(5.0, 0.0, 0.0, 0, "max")
    assert min_modulus(Polynomial([2.0]), 0.3).value == 2.0


def test_bad_inputs():
    with pytest.raises(DomainError):
        max_modulus(QUAD, 0.0)
    with pytest.raises(DomainError):
        max_modulus(QUAD, 1.0, tol=-1.0)


def test_tolerance_below_rounding_floor_reports_achievable():
    with pytest.raises(ResourceError) as info:
        max_modulus(QUAD, 1.0, tol=1e-20)
    assert info.value.achievable >= 2 * rounding_floor(QUAD, 1.0)


def test_sample_cap_is_enforced():
    p = Polynomial(np.arange(1, 12))
    with pytest.raises(ResourceError):
        max_modulus(p, 1.0, tol=1e-12, sample_cap=100)


def test_curvature_bound_dominates_second_derivative():
    rng = np.random.default_rng(5)
    for _ in range(20):
        p = random_poly(rng)
        r = float(rng.uniform(0.5, 2))
        th = np.linspace(0, 2 * math.pi, 4097)
        h = th[1] - th[0]
        g = np.abs(evaluate(p, r * np.exp(1j * th))) ** 2
        second = (g[2:] - 2 * g[1:-1] + g[:-2]) / h**2
        assert np.max(np.abs(second)) <= curvature_bound(p, r) * (1 + 1e-6)


def test_enclosure_soundness_small_sample():
    rng = np.random.default_rng(17)
    npts = 1 << 16
    for _ in range(20):
        p = random_poly(rng)
        r = float(rng.uniform(0.5, 2.5))
        grid = fft_grid(p, r, npts)
        slack = 64 * EPS * p.abs_sum(r)
        hi = max_modulus(p, r)
        assert grid.max() <= hi.upper + slack
        lo = min_modulus(p, r)
        assert grid.min() >= lo.lower - slack


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32 - 1), st.integers(-20, 20))
def test_scaling_by_powers_of_two_is_exact(seed, k):
    p = random_poly(np.random.default_rng(seed), 8)
    c = 2.0**k
    tol = default_tol(p, 1.3)
    a, b = max_modulus(p, 1.3, tol), max_modulus(c * p, 1.3, c * tol)
    assert b.value == c * a.value
    assert b.arg_theta == a.arg_theta


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32 - 1), st.complex_numbers(min_magnitude=1e-3, max_magnitude=1e3))
def test_scaling_by_general_scalar(seed, c):
    p = random_poly(np.random.default_rng(seed), 8)
    a, b = max_modulus(p, 1.3), max_modulus(c * p, 1.3)
    ca = abs(c) * a.value
    # both are attained values within their own certified radius of the true maximum
    assert abs(b.value - ca) <= 4 * EPS * ca + abs(c) * a.err + b.err


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32 - 1), st.floats(0, 2 * math.pi))
def test_rotation_invariance(seed, phi):
    p = random_poly(np.random.default_rng(seed), 8)
    j = np.arange(p.coeffs.size)
    q = Polynomial(p.coeffs * np.exp(1j * j * phi))
    a, b = max_modulus(p, 1.1), max_modulus(q, 1.1)
    assert abs(a.value - b.value) <= a.err + b.err + 16 * EPS * p.abs_sum(1.1)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32 - 1), st.floats(1, 4), st.floats(1, 4))
def test_monotone_in_radius(seed, r1, r2):
    r1, r2 = sorted((r1, r2))
    p = random_poly(np.random.default_rng(seed), 10)
    a, b = max_modulus(p, r1), max_modulus(p, r2)
    assert b.value + b.err >= a.value - a.err


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32 - 1), st.floats(1, 4))
def test_bernstein_cross_check(seed, R):
    p = random_poly(np.random.default_rng(seed), 10)
    one, big = max_modulus(p, 1.0), max_modulus(p, R)
    assert big.value <= R**p.degree * (one.value + one.err) + big.err


def test_tie_break_prefers_smallest_angle():
    # |1 + z^4| peaks at four angles; the reported one is 0
    assert max_modulus(Polynomial([1, 0, 0, 0, 1]), 1.0).arg_theta == 0.0
    # |z^2 - 0.25| peaks at pi/2 and 3pi/2
    assert max_modulus(QUAD, 1.0).arg_theta < math.pi
