"""Seeded constructions of polynomials inside each hypothesis class.

Everything is built forward from prescribed zeros; nothing here solves for
roots.  Identical arguments and seed give bit-identical coefficients.
"""

from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence

import numpy as np

from .errors import DomainError, ResourceError
from .poly import Polynomial, from_roots

DEFAULT_SEED = 0x5EED
MAX_RESAMPLES = 16
# q's second-highest coefficient must exceed this fraction of max|q_j|
_GAP_TOL = 1e-9
_MASK64 = (1 << 64) - 1


class ClassId(str, Enum):
    ZEROS_ON_CIRCLE = "zeros_on_circle"
    LACUNARY_ON_CIRCLE = "lacunary_on_circle"
    NO_ZEROS_IN_DISK = "no_zeros_in_disk"
    EXTREMAL_BERNSTEIN = "extremal_bernstein"
    EXTREMAL_AR = "extremal_ar"

    @classmethod
    def parse(cls, name: str) -> "ClassId":
        key = name.replace("-", "_").lower()
        if key == "lacunary":
            key = "lacunary_on_circle"
        try:
            return cls(key)
        except ValueError:
            raise DomainError(f"unknown polynomial class {name!r}") from None

    @property
    def cli_name(self) -> str:
        return "lacunary" if self is ClassId.LACUNARY_ON_CIRCLE else self.value.replace("_", "-")


def instance_seed(seed: int, index: int) -> int:
    """Seed for instance ``index`` of a campaign: seed XOR blake2b-64(index).

    Hashing the index keeps neighbouring instances' streams unrelated, and the
    XOR keeps the derivation a pure function of (seed, index).
    """
    digest = hashlib.blake2b(int(index).to_bytes(8, "little", signed=False), digest_size=8)
    return (int(seed) ^ int.from_bytes(digest.digest(), "little")) & _MASK64


def rng_for(seed: int) -> np.random.Generator:
    return np.random.default_rng(int(seed) & _MASK64)


def _angles(rng, k):
    return rng.uniform(0.0, 2.0 * math.pi, size=k)


def zeros_on_circle(n: int, K: float, seed: int = DEFAULT_SEED,
                    angles: Optional[Sequence[float]] = None) -> Polynomial:
    """Monic polynomial whose n zeros are K·e^{iφ_k}.

    The angles come from the seeded stream unless given explicitly.
    """
    if n < 1:
        raise DomainError("need n >= 1")
    if not K > 0:
        raise DomainError(f"need K > 0, got K={K}")
    phi = _angles(rng_for(seed), n) if angles is None else np.asarray(angles, dtype=float)
    if phi.size != n:
        raise DomainError(f"expected {n} angles, got {phi.size}")
    return from_roots(1.0, K * np.exp(1j * phi))


def compose(q: Polynomial, m: int, d: int) -> Polynomial:
    """z^m · q(z^d)."""
    c = np.zeros(m + d * q.degree + 1, dtype=complex)
    c[m::d] = q.coeffs
    return Polynomial(c, trim_tol=0.0)


def _draw_gap_factor(k, d, K, seed):
    rng = rng_for(seed)
    for _ in range(MAX_RESAMPLES):
        w = K**d * np.exp(1j * _angles(rng, k))
        q = from_roots(1.0, w)
        if abs(q.coeffs[-2]) > _GAP_TOL * np.abs(q.coeffs).max():
            return q, w
    raise ResourceError(f"no q with a nonzero second coefficient in {MAX_RESAMPLES} draws")


def _check_lacunary(n, m, d, K):
    if not 0 <= m <= n - 1:
        raise DomainError(f"need 0 <= m <= n-1, got m={m}, n={n}")
    if d < 1:
        raise DomainError("need gap d >= 1")
    if (n - m) % d:
        raise DomainError(f"gap d={d} must divide n-m={n - m}")
    if not 0 < K <= 1:
        raise DomainError(f"need 0 < K <= 1, got K={K}")


def lacunary_on_circle(n: int, m: int, d: int, K: float,
                       seed: int = DEFAULT_SEED) -> Polynomial:
    """z^m·q(z^d) with q monic of degree (n−m)/d and every zero of q on |w| = K^d.

    The zeros of the result are 0 (m times) and the d-th roots of q's zeros,
    all of modulus K.  q's second-highest coefficient is kept away from zero
    so the gap is exactly d.
    """
    _check_lacunary(n, m, d, K)
    q, _ = _draw_gap_factor((n - m) // d, d, K, seed)
    return compose(q, m, d)


def lacunary_roots(n: int, m: int, d: int, K: float, seed: int = DEFAULT_SEED) -> np.ndarray:
    """The n−m nonzero zeros that :func:`lacunary_on_circle` builds for the same arguments."""
    _check_lacunary(n, m, d, K)
    _, w = _draw_gap_factor((n - m) // d, d, K, seed)
    unity = np.exp(2j * math.pi * np.arange(d) / d)
    return np.concatenate([K * np.exp(1j * np.angle(wk) / d) * unity for wk in w])


def no_zeros_in_disk(n: int, t: int, K: float, seed: int = DEFAULT_SEED) -> Polynomial:
    """q(z^t) with the zeros of q of modulus in [K^t, (2K)^t].

    Support is contained in {0, t, 2t, ..., n} and every zero has modulus in [K, 2K].
    """
    if not K >= 1:
        raise DomainError(f"need K >= 1, got K={K}")
    if not 1 <= t <= n:
        raise DomainError(f"need 1 <= t <= n, got t={t}, n={n}")
    if n % t:
        raise DomainError(f"gap index t={t} must divide n={n}")
    k = n // t
    rng = rng_for(seed)
    radii = rng.uniform(K**t, (2.0 * K) ** t, size=k)
    q = from_roots(1.0, radii * np.exp(1j * _angles(rng, k)))
    return compose(q, 0, t)


def extremal_bernstein(n: int, alpha: complex = 1.0) -> Polynomial:
    """α·z^n."""
    if alpha == 0:
        raise DomainError("alpha must be nonzero")
    c = np.zeros(n + 1, dtype=complex)
    c[n] = alpha
    return Polynomial(c, trim_tol=0.0)


def extremal_ar(n: int, alpha: complex = 1.0, beta: complex = 1.0) -> Polynomial:
    """(α + β z^n)/2 with |α| = |β| = 1."""
    for name, v in (("alpha", alpha), ("beta", beta)):
        if not math.isclose(abs(v), 1.0, rel_tol=1e-12):
            raise DomainError(f"|{name}| must be 1, got {abs(v)}")
    c = np.zeros(n + 1, dtype=complex)
    c[0] = alpha / 2
    c[n] = beta / 2
    return Polynomial(c, trim_tol=0.0)


@dataclass(frozen=True)
class GeneratorConfig:
    class_id: ClassId
    n: int
    m: int = 0
    gap: int = 1
    K: float = 1.0
    seed: int = DEFAULT_SEED
    alpha: complex = 1.0
    beta: complex = 1.0

    def __post_init__(self):
        if self.n < 1:
            raise DomainError("need n >= 1")
        if self.class_id is ClassId.LACUNARY_ON_CIRCLE and (self.n - self.m) % self.gap:
            raise DomainError(f"gap d={self.gap} must divide n-m={self.n - self.m}")


def generate(cfg: GeneratorConfig) -> Polynomial:
    c = cfg.class_id
    if c is ClassId.ZEROS_ON_CIRCLE:
        return zeros_on_circle(cfg.n, cfg.K, cfg.seed)
    if c is ClassId.LACUNARY_ON_CIRCLE:
        return lacunary_on_circle(cfg.n, cfg.m, cfg.gap, cfg.K, cfg.seed)
    if c is ClassId.NO_ZEROS_IN_DISK:
        return no_zeros_in_disk(cfg.n, cfg.gap, cfg.K, cfg.seed)
    if c is ClassId.EXTREMAL_BERNSTEIN:
        return extremal_bernstein(cfg.n, cfg.alpha)
    return extremal_ar(cfg.n, cfg.alpha, cfg.beta)
