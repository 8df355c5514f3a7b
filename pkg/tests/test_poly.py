import cmath
import math

import numpy as np
import pytest
import sympy
from hypothesis import given, settings, strategies as st

from polygrowth.errors import DomainError, HypothesisError
from polygrowth.poly import (EPS, LacunaryProfile, Polynomial, derivative, dumps, evaluate,
                             from_roots, horner_error_bound, lacunary_profile, loads)

HALF_AR4 = Polynomial([0.5, 0, 0, 0, 0.5])
CUBE = Polynomial([0, 0, 0, 1])
QUAD = Polynomial([-0.25, 0, 1])


def test_evaluate_examples():
    assert evaluate(CUBE, 2) == 8
    assert evaluate(HALF_AR4, 1) == 1
    assert evaluate(QUAD, 0.5) == 0


def test_evaluate_vectorized_matches_scalar():
    z = np.array([0.3 + 0.1j, -2.0, 1j])
    got = evaluate(HALF_AR4, z)
    assert got.shape == (3,)
    for zi, gi in zip(z, got):
        assert gi == evaluate(HALF_AR4, complex(zi))


@pytest.mark.parametrize("p, expected", [
    (CUBE, [0, 0, 3]),
    (HALF_AR4, [0, 0, 0, 2]),
    (QUAD, [0, 2]),
])
def test_derivative_examples(p, expected):
    d = derivative(p)
    assert np.array_equal(d.coeffs, np.array(expected, dtype=complex))
    assert d.degree == p.degree - 1


def test_derivative_of_constant_is_domain_error():
    with pytest.raises(DomainError):
        derivative(Polynomial([3.0]))


def test_from_roots_examples():
    assert from_roots(1, [0.5, -0.5]) == QUAD
    one = from_roots(1, [])
    assert one.degree == 0 and one.coeffs[0] == 1
    with pytest.raises(DomainError):
        from_roots(0, [1.0])


def test_from_roots_fourth_roots_of_minus_one_against_symbolic_expansion():
    z = sympy.Symbol("z")
    sym_roots = [sympy.exp(sympy.I * sympy.pi * (2 * k + 1) / 4) for k in range(4)]
    product = sympy.Rational(1, 2) * sympy.prod([z - r for r in sym_roots])
    expanded = sympy.Poly(sympy.expand(product), z)
    exact = [complex(sympy.simplify(sympy.expand_complex(c)))
             for c in reversed(expanded.all_coeffs())]
    assert exact == [0.5, 0, 0, 0, 0.5]

    p = from_roots(0.5, [cmath.exp(1j * math.pi * (2 * k + 1) / 4) for k in range(4)])
    assert p.degree == 4
    assert np.allclose(p.coeffs, exact, atol=4 * EPS)


def test_constructor_trims_rounding_dust_but_not_real_terms():
    # threshold is 2**-40 (about 9.1e-13) relative to the largest coefficient
    assert Polynomial([1.0, 2.0, 1e-14]).degree == 1
    assert Polynomial([1.0, 2.0, 1e-11, 1e-15]).degree == 2
    assert Polynomial([1e-20, 1e-20, 1e-35]).degree == 1
    with pytest.raises(DomainError):
        Polynomial([0.0, 0.0])
    with pytest.raises(DomainError):
        Polynomial([])


def test_json_round_trip_is_exact():
    rng = np.random.default_rng(3)
    p = Polynomial(rng.normal(size=7) + 1j * rng.normal(size=7))
    q = loads(dumps(p))
    assert q == p
    assert dumps(QUAD) == "[[-0.25, 0.0], [0.0, 0.0], [1.0, 0.0]]"


@pytest.mark.parametrize("p, profile", [
    (QUAD, (2, 0, 2)),
    (Polynomial([0, 0.5, 0, 0, 1]), (4, 1, 3)),
    (Polynomial([1, 2, 3]), (2, 0, 1)),
    (Polynomial([0, 0, 1, 0, 5, 0, 0, 1]), (7, 2, 3)),
])
def test_lacunary_profile_examples(p, profile):
    prof = lacunary_profile(p)
    assert (prof.n, prof.m, prof.mu) == profile
    assert prof.K is None


def test_lacunary_profile_rejects_monomials():
    with pytest.raises(HypothesisError):
        lacunary_profile(Polynomial([0, 0, 0, 0, 0, 1]))


def test_lacunary_profile_threshold_is_relative():
    with pytest.raises(HypothesisError):
        lacunary_profile(Polynomial([1e-13, 0, 0, 1]))
    assert lacunary_profile(Polynomial([1e-13, 0, 0, 1]), zero_tol=0.0).mu == 3
    assert lacunary_profile(Polynomial([1e-21, 0, 0, 1e-10])).mu == 3
    assert lacunary_profile(Polynomial([1e-13, 1.0, 0, 1]), zero_tol=0.0).mu == 2
    # 1e-13 < 1e-12 · max|a_j|: the constant counts as structural zero
    assert lacunary_profile(Polynomial([1e-13, 1.0, 0, 1])).m == 1


def test_profile_validates_ranges():
    with pytest.raises(DomainError):
        LacunaryProfile(4, 4, 1)
    with pytest.raises(DomainError):
        LacunaryProfile(4, 1, 4)
    with pytest.raises(DomainError):
        LacunaryProfile(4, 0, 1, K=1.5)
    assert LacunaryProfile(4, 0, 2).with_radius(0.5).K == 0.5


roots_strategy = st.lists(
    st.tuples(st.floats(0.05, 3.0), st.floats(0, 2 * math.pi)), min_size=1, max_size=12)


@settings(max_examples=1000, deadline=None)
@given(roots_strategy)
def test_from_roots_residual_bound(polar):
    roots = [r * cmath.exp(1j * t) for r, t in polar]
    p = from_roots(1.0, roots)
    n = p.degree
    total = np.abs(p.coeffs).sum()
    for r in roots:
        bound = n * EPS * total * max(1.0, abs(r)) ** n
        assert abs(evaluate(p, r)) <= bound


@settings(max_examples=200, deadline=None)
@given(roots_strategy)
def test_derivative_of_product_has_degree_n_minus_1(polar):
    roots = [r * cmath.exp(1j * t) for r, t in polar]
    p = from_roots(1.0, roots)
    assert derivative(p).degree == len(roots) - 1


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 14), st.data())
def test_profile_of_z_m_times_z_k_plus_c(n, data):
    m = data.draw(st.integers(0, n - 1))
    c = data.draw(st.complex_numbers(min_magnitude=1e-3, max_magnitude=1e3))
    coeffs = np.zeros(n + 1, dtype=complex)
    coeffs[m] = c
    coeffs[n] = 1
    prof = lacunary_profile(Polynomial(coeffs))
    assert (prof.n, prof.m, prof.mu) == (n, m, n - m)


coeff_lists = st.lists(st.complex_numbers(max_magnitude=10, allow_nan=False), min_size=1, max_size=10)


@settings(max_examples=300, deadline=None)
@given(coeff_lists, coeff_lists, st.complex_numbers(max_magnitude=2))
def test_evaluate_is_linear(a, b, z):
    a[-1] = a[-1] + 11  # nonzero leading terms
    b[-1] = b[-1] + 11
    p, q = Polynomial(a), Polynomial(b)
    lhs = evaluate(p + q, z)
    rhs = evaluate(p, z) + evaluate(q, z)
    slack = horner_error_bound(p, abs(z)) + horner_error_bound(q, abs(z))
    assert abs(lhs - rhs) <= 2 * slack + 1e-300


def test_horner_error_bound_covers_evaluation():
    rng = np.random.default_rng(11)
    for _ in range(100):
        n = int(rng.integers(1, 15))
        c = rng.normal(size=n + 1) + 1j * rng.normal(size=n + 1)
        p = Polynomial(c)
        z = complex(rng.normal(), rng.normal())
        # extended-precision reference
        ref = np.polynomial.polynomial.polyval(np.clongdouble(z), c.astype(np.clongdouble))
        assert abs(evaluate(p, z) - complex(ref)) <= horner_error_bound(p, abs(z)) + 1e-300
