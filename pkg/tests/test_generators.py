import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from polygrowth.bounds import BoundId
from polygrowth.errors import DomainError
from polygrowth.extrema import max_modulus, min_modulus
from polygrowth.generators import (DEFAULT_SEED, ClassId, GeneratorConfig, extremal_ar,
                                   extremal_bernstein, generate, instance_seed, lacunary_on_circle,
                                   lacunary_roots, no_zeros_in_disk, zeros_on_circle)
from polygrowth.poly import EPS, Polynomial, evaluate, lacunary_profile
from polygrowth.verify import ToleranceSpec, check_hypothesis


def test_zeros_on_circle_examples():
    p = zeros_on_circle(2, 0.5, angles=[0.0, math.pi])
    assert np.allclose(p.coeffs, [-0.25, 0, 1], atol=1e-16)
    p = zeros_on_circle(4, 1.0, angles=[(2 * k + 1) * math.pi / 4 for k in range(4)])
    assert np.allclose(p.coeffs, [1, 0, 0, 0, 1], atol=4 * EPS)
    assert np.allclose((0.5 * p).coeffs, extremal_ar(4).coeffs, atol=4 * EPS)
    for seed in range(10):
        q = zeros_on_circle(5, 0.7, seed)
        est = min_modulus(q, 0.7)
        assert est.lower == 0.0


def test_lacunary_examples():
    p = lacunary_on_circle(4, 0, 4, 0.5, seed=1)
    assert np.count_nonzero(p.coeffs) == 2
    assert math.isclose(abs(p.coeffs[0]), 0.5**4, rel_tol=1e-15)
    roots = lacunary_roots(4, 0, 4, 0.5, seed=1)
    assert np.allclose(np.abs(roots), 0.5, rtol=1e-15)
    assert max(abs(evaluate(p, z)) for z in roots) <= 1e-15

    p = lacunary_on_circle(4, 2, 2, 0.8, seed=2)
    prof = lacunary_profile(p)
    assert (prof.n, prof.m, prof.mu) == (4, 2, 2)
    assert math.isclose(abs(p.coeffs[2]), 0.64, rel_tol=1e-15)

    p = lacunary_on_circle(6, 0, 2, 0.9, seed=3)
    prof = lacunary_profile(p)
    assert (prof.n, prof.m, prof.mu) == (6, 0, 2)
    roots = lacunary_roots(6, 0, 2, 0.9, seed=3)
    assert roots.size == 6
    assert np.allclose(np.abs(roots), 0.9, rtol=1e-15)
    scale = np.abs(p.coeffs).sum()
    assert max(abs(evaluate(p, z)) for z in roots) <= 16 * EPS * scale


def test_lacunary_gap_must_divide():
    with pytest.raises(DomainError):
        lacunary_on_circle(5, 0, 2, 0.5)
    with pytest.raises(DomainError):
        GeneratorConfig(ClassId.LACUNARY_ON_CIRCLE, n=7, m=1, gap=4)
    with pytest.raises(DomainError):
        lacunary_on_circle(4, 0, 2, 1.5)


def test_no_zeros_in_disk_examples():
    p = no_zeros_in_disk(4, 1, 1.0, seed=4)
    roots = np.roots(p.coeffs[::-1])
    assert np.all(np.abs(roots) >= 1 - 1e-9)
    p = no_zeros_in_disk(4, 4, 1.0, seed=5)
    assert np.count_nonzero(p.coeffs) == 2 and abs(p.coeffs[0]) >= 1
    for seed in range(10):
        p = no_zeros_in_disk(6, 2, 1.5, seed)
        assert min_modulus(p, 1.5).lower > 0
    with pytest.raises(DomainError):
        no_zeros_in_disk(5, 2, 1.0)
    with pytest.raises(DomainError):
        no_zeros_in_disk(4, 1, 0.5)


def test_extremal_examples():
    assert extremal_bernstein(3, 1) == Polynomial([0, 0, 0, 1])
    assert extremal_ar(4, 1, 1) == Polynomial([0.5, 0, 0, 0, 0.5])
    assert extremal_ar(2, 1, -1) == Polynomial([0.5, 0, -0.5])
    assert max_modulus(extremal_ar(4), 2.0).value == 8.5
    with pytest.raises(DomainError):
        extremal_ar(3, 2.0, 1)
    with pytest.raises(DomainError):
        extremal_bernstein(3, 0)


def test_determinism_is_bit_exact():
    for cls in ClassId:
        cfg = GeneratorConfig(cls, n=6, m=0, gap=2, K=1.0 if cls is not ClassId.NO_ZEROS_IN_DISK else 1.2,
                              seed=99)
        a, b = generate(cfg), generate(cfg)
        assert a.coeffs.tobytes() == b.coeffs.tobytes()
    assert generate(GeneratorConfig(ClassId.ZEROS_ON_CIRCLE, n=6, seed=1)) != \
        generate(GeneratorConfig(ClassId.ZEROS_ON_CIRCLE, n=6, seed=2))


def test_instance_seed_split():
    seeds = {instance_seed(DEFAULT_SEED, i) for i in range(10000)}
    assert len(seeds) == 10000
    assert all(0 <= s < 2**64 for s in seeds)
    assert instance_seed(7, 3) == instance_seed(7, 3)


def test_class_alias():
    assert ClassId.parse("lacunary") is ClassId.LACUNARY_ON_CIRCLE
    assert ClassId.parse("zeros-on-circle") is ClassId.ZEROS_ON_CIRCLE


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 12), st.data())
def test_lacunary_membership(n, data):
    m = data.draw(st.integers(0, n - 1))
    divisors = [d for d in range(1, n - m + 1) if (n - m) % d == 0]
    d = data.draw(st.sampled_from(divisors))
    K = data.draw(st.floats(0.1, 1.0))
    seed = data.draw(st.integers(0, 2**63))
    p = lacunary_on_circle(n, m, d, K, seed)
    prof = lacunary_profile(p)
    assert (prof.n, prof.m, prof.mu) == (n, m, d)
    assert p.degree == n
    check_hypothesis(p, BoundId.NWAEZE, dict(n=n, m=m, mu=d, K=K), ToleranceSpec())
    roots = lacunary_roots(n, m, d, K, seed)
    assert roots.size == n - m
    assert np.allclose(np.abs(roots), K, rtol=1e-14)


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 12), st.floats(0.1, 1.0), st.integers(0, 2**63))
def test_zeros_on_circle_membership(n, K, seed):
    p = zeros_on_circle(n, K, seed)
    check_hypothesis(p, BoundId.DEWAN_AHUJA, dict(n=n, K=K), ToleranceSpec())


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 12), st.data())
def test_no_zeros_in_disk_membership(n, data):
    t = data.draw(st.sampled_from([d for d in range(1, n + 1) if n % d == 0]))
    K = data.draw(st.floats(1.0, 2.0))
    p = no_zeros_in_disk(n, t, K, data.draw(st.integers(0, 2**63)))
    support = np.nonzero(p.coeffs)[0]
    assert all(j == 0 or j >= t for j in support)
    check_hypothesis(p, BoundId.GGM, dict(n=n, t=t, K=K), ToleranceSpec())
