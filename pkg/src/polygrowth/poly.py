"""Dense complex polynomials: evaluation, differentiation, construction from
zeros and detection of the coefficient-gap structure.

Coefficients are stored in increasing degree order, ``coeffs[j]`` is the
coefficient of ``z**j``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import DomainError, HypothesisError

EPS = np.finfo(float).eps

# Trailing coefficients below this fraction of max|a_j| are dropped on construction.
TRIM_TOL = 2.0**-40

# Default relative threshold for "structurally zero" coefficients in lacunary_profile.
LACUNARY_ZERO_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class Polynomial:
    coeffs: np.ndarray

    def __init__(self, coeffs: Iterable[complex], trim_tol: float = TRIM_TOL):
        c = np.array(list(coeffs) if not isinstance(coeffs, np.ndarray) else coeffs,
                     dtype=complex).ravel()
        if c.size == 0:
            raise DomainError("a polynomial needs at least one coefficient")
        if not np.all(np.isfinite(c)):
            raise DomainError("coefficients must be finite")
        scale = np.abs(c).max()
        if scale == 0.0:
            raise DomainError("the zero polynomial has no degree")
        keep = np.nonzero(np.abs(c) > trim_tol * scale)[0]
        c = c[: keep[-1] + 1].copy()
        c.flags.writeable = False
        object.__setattr__(self, "coeffs", c)

    @property
    def degree(self) -> int:
        return self.coeffs.size - 1

    @property
    def leading(self) -> complex:
        return complex(self.coeffs[-1])

    def abs_sum(self, r: float = 1.0) -> float:
        """Σ |a_j| r^j, the trivial bound for |p| on |z| = r."""
        return float(np.sum(np.abs(self.coeffs) * r ** np.arange(self.coeffs.size)))

    def __call__(self, z):
        return evaluate(self, z)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return np.array_equal(self.coeffs, other.coeffs)

    def __hash__(self):
        return hash(self.coeffs.tobytes())

    def __add__(self, other: "Polynomial") -> "Polynomial":
        n = max(self.coeffs.size, other.coeffs.size)
        out = np.zeros(n, dtype=complex)
        out[: self.coeffs.size] += self.coeffs
        out[: other.coeffs.size] += other.coeffs
        return Polynomial(out)

    def __mul__(self, c) -> "Polynomial":
        if isinstance(c, Polynomial):
            return Polynomial(np.convolve(self.coeffs, c.coeffs))
        return Polynomial(self.coeffs * complex(c))

    __rmul__ = __mul__

    def __repr__(self):
        return f"Polynomial({np.array2string(self.coeffs, precision=6)})"

    def to_pairs(self) -> list:
        return [[float(a.real), float(a.imag)] for a in self.coeffs]

    @classmethod
    def from_pairs(cls, pairs: Sequence[Sequence[float]]) -> "Polynomial":
        try:
            return cls([complex(re, im) for re, im in pairs])
        except (TypeError, ValueError) as exc:
            raise DomainError(f"expected a list of [re, im] pairs: {exc}") from exc


def dumps(p: Polynomial) -> str:
    """Serialize as a JSON array of [re, im] pairs indexed by degree."""
    return json.dumps(p.to_pairs())


def loads(text: str) -> Polynomial:
    return Polynomial.from_pairs(json.loads(text))


def evaluate(p: Polynomial, z):
    """Horner evaluation; ``z`` may be a scalar or an array."""
    zz = np.asarray(z, dtype=complex)
    acc = np.full(zz.shape, p.coeffs[-1], dtype=complex)
    for a in p.coeffs[-2::-1]:
        acc = acc * zz + a
    if acc.ndim == 0:
        return complex(acc)
    return acc


def horner_error_bound(p: Polynomial, absz) -> np.ndarray:
    """Rounding bound 2n·eps·Σ|a_j||z|^j for :func:`evaluate` at modulus ``absz``."""
    absz = np.asarray(absz, dtype=float)
    n = max(p.degree, 1)
    acc = np.zeros(absz.shape)
    for a in np.abs(p.coeffs)[::-1]:
        acc = acc * absz + a
    return 2 * n * EPS * acc


def derivative(p: Polynomial) -> Polynomial:
    if p.degree < 1:
        raise DomainError("derivative of a constant is the zero polynomial")
    j = np.arange(1, p.coeffs.size)
    return Polynomial(j * p.coeffs[1:], trim_tol=0.0)


def from_roots(leading: complex, roots: Sequence[complex]) -> Polynomial:
    """leading·Π(z − r_k), multiplied pairwise in a balanced tree."""
    if leading == 0:
        raise DomainError("leading coefficient must be nonzero")
    factors = [np.array([-complex(r), 1.0], dtype=complex) for r in roots]
    if not factors:
        return Polynomial([leading])
    while len(factors) > 1:
        paired = [np.convolve(factors[i], factors[i + 1])
                  for i in range(0, len(factors) - 1, 2)]
        if len(factors) % 2:
            paired.append(factors[-1])
        factors = paired
    return Polynomial(complex(leading) * factors[0], trim_tol=0.0)


@dataclass(frozen=True)
class LacunaryProfile:
    """Structure z^m·[a z^(n−m) + Σ_{j≥μ} ...] together with the zero-circle radius.

    ``K`` is None when the profile was read off coefficients alone.
    """

    n: int
    m: int
    mu: int
    K: Optional[float] = None

    def __post_init__(self):
        if not 0 <= self.m <= self.n - 1:
            raise DomainError(f"need 0 <= m <= n-1, got m={self.m}, n={self.n}")
        if not 1 <= self.mu <= self.n - self.m:
            raise DomainError(f"need 1 <= mu <= n-m, got mu={self.mu}, n-m={self.n - self.m}")
        if self.K is not None and not 0 < self.K <= 1:
            raise DomainError(f"need 0 < K <= 1, got K={self.K}")

    def with_radius(self, K: float) -> "LacunaryProfile":
        return LacunaryProfile(self.n, self.m, self.mu, K)


def support(p: Polynomial, zero_tol: float = LACUNARY_ZERO_TOL) -> np.ndarray:
    """Indices of coefficients above ``zero_tol·max|a_j|``."""
    a = np.abs(p.coeffs)
    return np.nonzero(a > zero_tol * a.max())[0]


def lacunary_profile(p: Polynomial, zero_tol: float = LACUNARY_ZERO_TOL) -> LacunaryProfile:
    """Read (n, m, maximal μ) off the coefficient support.

    Raises HypothesisError for monomials, which have no bracket term below
    the top and so fall outside the m <= n−1 requirement.
    """
    if zero_tol < 0:
        raise DomainError("zero_tol must be nonnegative")
    idx = support(p, zero_tol)
    n = p.degree
    m = int(idx[0])
    if n - m == 0:
        raise HypothesisError(f"monomial of degree {n}: no coefficient below the top")
    below_top = idx[idx < n]
    # position of the next nonzero term inside the bracket, counted from the bracket's constant
    j = int(below_top[-1]) - m
    return LacunaryProfile(n=n, m=m, mu=n - m - j)
