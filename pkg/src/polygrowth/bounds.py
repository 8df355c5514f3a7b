"""Right-hand sides of the max-modulus growth inequalities.

All functions return plain floats.  Every bound except :func:`ggm` is a
multiplier ``c`` in ``M(p, R)^s <= c · M(p, 1)^s``; :func:`ggm` returns the
absolute bound on ``M(p, R)`` because it is not homogeneous in ``p``.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from enum import Enum
from typing import Callable

from .errors import DomainError


class BoundId(str, Enum):
    BERNSTEIN = "bernstein"
    ANKENY_RIVLIN = "ankeny_rivlin"
    GGM = "ggm"
    DEWAN_AHUJA = "dewan_ahuja"
    NWAEZE = "nwaeze"

    @classmethod
    def parse(cls, name: str) -> "BoundId":
        try:
            return cls(name.replace("-", "_").lower())
        except ValueError:
            raise DomainError(f"unknown bound {name!r}") from None

    @property
    def cli_name(self) -> str:
        return self.value.replace("_", "-")


def _check_R(R):
    if not R >= 1:
        raise DomainError(f"need R >= 1, got R={R}")


def _check_inner_K(K):
    if not 0 < K <= 1:
        raise DomainError(f"need 0 < K <= 1, got K={K}")


def _check_s(s):
    if int(s) != s or s < 1:
        raise DomainError(f"need a positive integer s, got s={s}")


def _check_n(n):
    if int(n) != n or n < 1:
        raise DomainError(f"need a positive integer degree n, got n={n}")


def _pow_minus_one(R, k):
    """R^k − 1, accurate both near R = 1 and for exactly representable powers."""
    p = float(R) ** k
    if p > 2.0:
        return p - 1.0
    return math.expm1(k * math.log1p(float(R) - 1.0))


def bernstein(n: int, R: float) -> float:
    """R^n."""
    _check_n(n)
    _check_R(R)
    return float(R) ** n


def ankeny_rivlin(n: int, R: float) -> float:
    """(R^n + 1)/2 for polynomials without zeros in |z| < 1."""
    _check_n(n)
    _check_R(R)
    return (float(R) ** n + 1.0) / 2.0


def dewan_ahuja(n: int, K: float, R: float, s: int = 1) -> float:
    """[K^(n−1)(1+K) + (R^(ns) − 1)] / (K^(n−1) + K^n), all zeros on |z| = K <= 1."""
    _check_n(n)
    _check_inner_K(K)
    _check_R(R)
    _check_s(s)
    den = K ** (n - 1) * (1.0 + K)
    return (den + _pow_minus_one(R, n * s)) / den


def _lacunary_powers(n, m, mu, K):
    if int(m) != m or not 0 <= m <= n - 1:
        raise DomainError(f"need 0 <= m <= n-1, got m={m}, n={n}")
    if int(mu) != mu or not 1 <= mu <= n - m:
        raise DomainError(f"need 1 <= mu <= n-m, got mu={mu}, n-m={n - m}")
    _check_inner_K(K)
    A = K ** (n - m - 2 * mu + 1)
    B = K ** (n - m - mu + 1)
    return A, B


def kumar_lal_factor(n: int, m: int, mu: int, K: float) -> float:
    """Derivative factor [n + m(A+B−1)]/(A+B), A = K^(n−m−2μ+1), B = K^(n−m−μ+1)."""
    _check_n(n)
    A, B = _lacunary_powers(n, m, mu, K)
    return (n + m * (A + B - 1.0)) / (A + B)


def nwaeze(n: int, m: int, mu: int, K: float, R: float, s: int = 1) -> float:
    """L(μ; K, m, n, s) for p = z^m·[a z^(n−m) + Σ_{j≥μ} a_{n−m−j} z^(n−m−j)].

    Written as 1 + (R^(ns) − 1)·c/n with c the Kumar–Lal factor, which is the
    same quotient with the R-independent part split off.
    """
    _check_n(n)
    _check_R(R)
    _check_s(s)
    A, B = _lacunary_powers(n, m, mu, K)
    growth = _pow_minus_one(R, n * s)
    return 1.0 + growth * (n + m * A + m * B - m) / (n * (A + B))


def lacunary_m0(n: int, mu: int, K: float, R: float, s: int = 1) -> float:
    """The m = 0 specialization, [K^(n−μ)(K^(1−μ)+K) + (R^(ns)−1)] / (K^(n−2μ+1) + K^(n−μ+1))."""
    _check_n(n)
    _check_R(R)
    _check_s(s)
    _lacunary_powers(n, 0, mu, K)
    # K^(n−μ)(K^(1−μ)+K) equals the denominator; split it off so R = 1 gives exactly 1
    den = K ** (n - 2 * mu + 1) + K ** (n - mu + 1)
    return 1.0 + _pow_minus_one(R, n * s) / den


@dataclass(frozen=True)
class GGMParams:
    """Inputs of the bound for p = a_0 + Σ_{j=t}^n a_j z^j with no zeros in |z| < K, K >= 1.

    ``min_m`` is min_{|z|=K}|p(z)| and ``norm_p`` is max_{|z|=1}|p(z)|.
    """

    n: int
    t: int
    K: float
    R: float
    norm_p: float
    min_m: float
    abs_a0: float
    abs_at: float
    abs_an: float

    def __post_init__(self):
        _check_n(self.n)
        if int(self.t) != self.t or not 1 <= self.t <= self.n:
            raise DomainError(f"need 1 <= t <= n, got t={self.t}, n={self.n}")
        if not self.K >= 1:
            raise DomainError(f"need K >= 1, got K={self.K}")
        _check_R(self.R)
        if not self.min_m >= 0:
            raise DomainError(f"need min_m >= 0, got {self.min_m}")
        if not self.norm_p > self.min_m:
            raise DomainError(f"need norm_p > min_m, got {self.norm_p} <= {self.min_m}")
        if not self.abs_an > 0:
            raise DomainError("need |a_n| > 0")
        if self.abs_a0 < 0 or self.abs_at < 0:
            raise DomainError("coefficient moduli must be nonnegative")


def ggm_s0(params: GGMParams) -> float:
    """K^(t+1)·[(t/n)(|a_t|/(|a_0|−m))K^(t−1) + 1] / [(t/n)(|a_t|/(|a_0|−m))K^(t+1) + 1]."""
    q = params
    if not q.abs_a0 > q.min_m:
        raise DomainError(f"need |a_0| > min_m, got {q.abs_a0} <= {q.min_m}")
    c = (q.t / q.n) * q.abs_at / (q.abs_a0 - q.min_m)
    K = q.K
    return K ** (q.t + 1) * (c * K ** (q.t - 1) + 1.0) / (c * K ** (q.t + 1) + 1.0)


def x_minus_log1p(x: float) -> float:
    """x − ln(1+x) without cancellation for small x."""
    if abs(x) < 1e-4:
        # alternating series x²/2 − x³/3 + x⁴/4 − x⁵/5; truncation below 1e-20·x²
        return x * x * (0.5 - x * (1.0 / 3.0 - x * (0.25 - x / 5.0)))
    return x - math.log1p(x)


def ggm(params: GGMParams) -> float:
    """Absolute upper bound on M(p, R) (not a multiplier)."""
    q = params
    s0 = ggm_s0(q)
    Rn1 = _pow_minus_one(q.R, q.n)
    gap = q.norm_p - q.min_m
    x = (q.R - 1.0) * gap / (gap + (1.0 + s0) * q.abs_an)
    bracket = (gap * gap - (1.0 + s0) ** 2 * q.abs_an**2) / gap
    # the first two terms combine to ‖p‖ + (R^n − 1)(‖p‖ − m)/(1+s0)
    return (q.norm_p
            + Rn1 * (q.norm_p - q.min_m) / (1.0 + s0)
            - q.n / (1.0 + s0) * bracket * x_minus_log1p(x))


@dataclass(frozen=True)
class BoundValue:
    multiplier: float
    bound_id: BoundId
    params_echo: dict = field(default_factory=dict)


@dataclass(frozen=True)
class BoundSpec:
    func: Callable
    params: tuple
    absolute: bool = False
    homogeneous: bool = True


REGISTRY = {
    BoundId.BERNSTEIN: BoundSpec(bernstein, ("n", "R")),
    BoundId.ANKENY_RIVLIN: BoundSpec(ankeny_rivlin, ("n", "R")),
    BoundId.DEWAN_AHUJA: BoundSpec(dewan_ahuja, ("n", "K", "R", "s")),
    BoundId.NWAEZE: BoundSpec(nwaeze, ("n", "m", "mu", "K", "R", "s")),
    BoundId.GGM: BoundSpec(
        None,
        ("n", "t", "K", "R", "norm_p", "min_m", "abs_a0", "abs_at", "abs_an"),
        absolute=True,
        homogeneous=False,
    ),
}


def evaluate_bound(bound_id, **kwargs) -> BoundValue:
    """Evaluate a registered bound from keyword parameters.

    Unused keywords are ignored, missing required ones raise DomainError.
    """
    bid = BoundId.parse(bound_id) if isinstance(bound_id, str) else bound_id
    spec = REGISTRY[bid]
    missing = [k for k in spec.params if kwargs.get(k) is None]
    if missing:
        raise DomainError(f"{bid.cli_name} needs {', '.join('--' + k.replace('_', '-') for k in missing)}")
    args = {k: kwargs[k] for k in spec.params}
    if bid is BoundId.GGM:
        value = ggm(GGMParams(**args))
    else:
        value = spec.func(**args)
    return BoundValue(value, bid, args)


def params_dict(bv: BoundValue) -> dict:
    return asdict(bv)
