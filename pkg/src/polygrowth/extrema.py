"""Certified maximum and minimum of |p| on a circle |z| = r.

The angle interval [0, 2π) is cut into cells and refined by branch and
bound.  Every cell carries a rigorous enclosure of |p| on it, built from two
constants that are valid everywhere on the circle:

* ``L1``, a Lipschitz constant for θ ↦ |p(re^{iθ})| (the "tent" bound), and
* ``L2``, a bound on the second derivative of the trigonometric polynomial
  θ ↦ |p(re^{iθ})|², which gives an enclosure quadratic in the cell width.

Cells whose enclosure cannot beat the incumbent by more than ``tol`` are
discarded; the rest are bisected.  The final error radius is the largest
enclosure among discarded cells minus the attained value.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, ResourceError
from .poly import EPS, Polynomial, evaluate, horner_error_bound

TWO_PI = 2.0 * math.pi

# Applied to L1 and L2 to absorb rounding in their own computation.
CONSTANT_SLACK = 1.0 + 1e-10
DEFAULT_REL_TOL = 1e-9
SAMPLE_CAP = 10**8
# live cells held at once; guards memory independently of the sample cap
LIVE_CAP = 1 << 22
_MIN_CELL = 1e-15
_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class CircleEstimate:
    """Attained extremum of |p| on a circle plus a certified error radius.

    For ``kind == "max"`` the true maximum lies in ``[value, value + err]``;
    for ``kind == "min"`` the true minimum lies in ``[max(0, value - err), value]``.
    """

    value: float
    err: float
    arg_theta: float
    samples_used: int
    kind: str = "max"

    @property
    def lower(self) -> float:
        return self.value if self.kind == "max" else max(0.0, self.value - self.err)

    @property
    def upper(self) -> float:
        return self.value + self.err if self.kind == "max" else self.value


def lipschitz_bound(p: Polynomial, r: float) -> float:
    """r·Σ j|a_j| r^(j−1): bounds |d/dθ |p(re^{iθ})|| on the whole circle."""
    if r <= 0:
        raise DomainError("radius must be positive")
    j = np.arange(p.coeffs.size)
    return float(np.sum(j * np.abs(p.coeffs) * r**j))


def curvature_bound(p: Polynomial, r: float) -> float:
    """Bound on |d²/dθ² |p(re^{iθ})|²|.

    |p|² = c_0 + 2 Re Σ_{k≥1} c_k e^{ikθ} with c_k = Σ_j b_{j+k} conj(b_j),
    b_j = a_j r^j, so the second derivative is at most 2 Σ k²|c_k|.
    """
    b = p.coeffs * r ** np.arange(p.coeffs.size)
    n = p.degree
    total = 0.0
    for k in range(1, n + 1):
        total += k * k * abs(np.vdot(b[: n + 1 - k], b[k:]))
    return 2.0 * total


def default_tol(p: Polynomial, r: float, rel: float = DEFAULT_REL_TOL) -> float:
    return rel * (1.0 + p.abs_sum(r))


def rounding_floor(p: Polynomial, r: float) -> float:
    """Bound on the rounding error of a single sample of |p| on |z| = r.

    No enclosure can be certified tighter than twice this.
    """
    L1 = lipschitz_bound(p, r) * CONSTANT_SLACK
    # rounding in e^{iθ}, r·e^{iθ} and Horner
    return 2.0 * float(horner_error_bound(p, r)) + 8.0 * EPS * L1


def _modulus(p, r, theta):
    return np.abs(evaluate(p, r * np.exp(1j * theta)))


def _golden_polish(fun, a, b, iters=80):
    """Golden-section search for a maximizer of ``fun`` on [a, b]."""
    c = b - _GOLDEN * (b - a)
    d = a + _GOLDEN * (b - a)
    fc, fd = fun(c), fun(d)
    for _ in range(iters):
        if b - a < 1e-16 * max(1.0, abs(a)):
            break
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - _GOLDEN * (b - a)
            fc = fun(c)
        else:
            a, c, fc = c, d, fd
            d = a + _GOLDEN * (b - a)
            fd = fun(d)
    return (c, fc) if fc >= fd else (d, fd)


def _better(kind, v, t, best_v, best_t):
    if kind == "max":
        return v > best_v or (v == best_v and t < best_t)
    return v < best_v or (v == best_v and t < best_t)


def _pick(kind, values, thetas):
    """Best sample with ties broken toward the smallest angle."""
    target = values.max() if kind == "max" else values.min()
    hits = np.nonzero(values == target)[0]
    i = hits[np.argmin(thetas[hits])]
    return float(values[i]), float(thetas[i])


def _extremum(p, r, tol, kind, sample_cap):
    if r <= 0:
        raise DomainError("radius must be positive")
    if p.degree == 0:
        return CircleEstimate(abs(p.coeffs[0]), 0.0, 0.0, 0, kind)
    if tol is None:
        tol = default_tol(p, r)
    if tol <= 0:
        raise DomainError("tol must be positive")

    n = p.degree
    L1 = lipschitz_bound(p, r) * CONSTANT_SLACK
    L2 = curvature_bound(p, r) * CONSTANT_SLACK
    ev = rounding_floor(p, r)
    if tol < 2.0 * ev:
        raise ResourceError(f"tol {tol:.3g} is below the rounding floor {2.0 * ev:.3g}",
                            achievable=2.0 * ev)

    n0 = max(64, 16 * (n + 1))
    grid = TWO_PI * np.arange(n0 + 1) / n0
    f = _modulus(p, r, grid[:-1])
    f = np.append(f, f[0])
    samples = n0
    best_v, best_t = _pick(kind, f[:-1], grid[:-1])

    left, width = grid[:-1], np.full(n0, TWO_PI / n0)
    fl, fr = f[:-1], f[1:]
    # worst enclosure among discarded cells
    frontier = -np.inf if kind == "max" else np.inf

    while True:
        if kind == "max":
            tent = 0.5 * (fl + fr) + ev + 0.5 * L1 * width
            quad = np.sqrt((np.maximum(fl, fr) + ev) ** 2 + L2 * width**2 / 8.0)
            bound = np.minimum(tent, quad)
            live = bound > best_v + tol
            if np.any(~live):
                frontier = max(frontier, float(bound[~live].max()))
            achievable = max(frontier, float(bound.max(initial=-np.inf))) - best_v
        else:
            tent = 0.5 * (fl + fr) - ev - 0.5 * L1 * width
            low = np.maximum(np.minimum(fl, fr) - ev, 0.0)
            quad = np.sqrt(np.maximum(low**2 - L2 * width**2 / 8.0, 0.0))
            bound = np.maximum(tent, quad)
            live = bound < best_v - tol
            if np.any(~live):
                frontier = min(frontier, float(bound[~live].min()))
            achievable = best_v - min(frontier, float(bound.min(initial=np.inf)))
        if not np.any(live):
            break
        left, width, fl, fr = left[live], width[live], fl[live], fr[live]
        if (samples + left.size > sample_cap or left.size > LIVE_CAP
                or width[0] < _MIN_CELL):
            raise ResourceError(
                f"{kind}-modulus search exceeded its budget; achievable err {achievable:.3g}",
                achievable=achievable,
            )
        half = 0.5 * width
        mid = left + half
        fm = _modulus(p, r, mid)
        samples += mid.size
        v, t = _pick(kind, fm, mid)
        if _better(kind, v, t, best_v, best_t):
            best_v, best_t = v, t
        left = np.concatenate([left, mid])
        width = np.concatenate([half, half])
        fl, fr = np.concatenate([fl, fm]), np.concatenate([fm, fr])

    # polish the witness inside the finest cell around it
    h = TWO_PI / n0 / 2**12
    sign = 1.0 if kind == "max" else -1.0
    t, v = _golden_polish(lambda th: sign * float(_modulus(p, r, th)), best_t - h, best_t + h)
    samples += 82
    v = sign * v
    t = t % TWO_PI
    if _better(kind, v, t, best_v, best_t) and v != best_v:
        best_v, best_t = v, t

    if kind == "max":
        err = max(frontier - best_v, 0.0)
    else:
        err = max(best_v - frontier, 0.0)
    return CircleEstimate(best_v, err, best_t % TWO_PI, samples, kind)


def max_modulus(p: Polynomial, r: float, tol: float | None = None,
                sample_cap: int = SAMPLE_CAP) -> CircleEstimate:
    """Certified M(p, r) = max_{|z|=r} |p(z)| with ``err <= tol``."""
    return _extremum(p, r, tol, "max", sample_cap)


def min_modulus(p: Polynomial, r: float, tol: float | None = None,
                sample_cap: int = SAMPLE_CAP) -> CircleEstimate:
    """Certified min_{|z|=r} |p(z)|; the enclosure is [max(0, value−err), value]."""
    return _extremum(p, r, tol, "min", sample_cap)
