"""Instance and campaign verification of the growth inequalities.

A verdict is conservative: the left side is taken at the upper end of its
certified enclosure and the right side at the lower end, so ``passed`` never
relies on rounding luck.  Anything that does not pass is audited (exact
formula oracle, tighter extrema, dense grid) before it counts as a failure.
"""

from __future__ import annotations

import cmath
import csv
import io
import itertools
import json
import math
import time
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, fields, replace
from typing import Optional, Sequence

import numpy as np
from scipy import integrate

from . import bounds, oracle
from .bounds import BoundId
from .errors import DomainError, HypothesisError, ResourceError
from .extrema import CircleEstimate, max_modulus, min_modulus, rounding_floor
from .generators import (DEFAULT_SEED, ClassId, extremal_ar, extremal_bernstein,
                         instance_seed, lacunary_on_circle, no_zeros_in_disk, rng_for,
                         zeros_on_circle)
from .poly import Polynomial, derivative, dumps, evaluate, lacunary_profile, support

KUMAR_LAL = "kumar_lal"

CSV_COLUMNS = ("poly_id", "bound_id", "n", "m", "mu", "K", "R", "s",
               "lhs", "rhs", "ratio", "pass")


@dataclass(frozen=True)
class ToleranceSpec:
    rel_tol: float = 1e-9
    # requested extrema error, relative to 1 + Σ|a_j| r^j
    extrema_rel: float = 1e-12
    # hypothesis check: allowed relative deviation of root moduli
    root_tol: float = 1e-6
    zero_tol: float = 1e-12
    audit: bool = True
    audit_grid: int = 10**7


@dataclass
class VerificationRecord:
    poly_id: object
    bound_id: str
    n: int
    m: Optional[int]
    mu: Optional[int]
    K: Optional[float]
    R: float
    s: int
    lhs: float
    lhs_err: float
    rhs: float
    rhs_err: float
    ratio: float
    passed: bool
    status: str = "pass"
    t: Optional[int] = None
    norm_p: Optional[float] = None
    # RHS of the same instance at mu = 1 (lacunary records) or the
    # Ankeny-Rivlin RHS (ggm records), for comparison in reports
    alt_rhs: Optional[float] = None
    audited: bool = False
    note: str = ""

    def to_json(self) -> dict:
        d = asdict(self)
        d["pass"] = d.pop("passed")
        return d

    def csv_row(self) -> list:
        d = self.to_json()
        return [_fmt(d[c]) for c in CSV_COLUMNS]


def _fmt(v):
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return f"{v:.17g}"
    return str(v)


# ---------------------------------------------------------------------------
# hypothesis checks

def _roots(coeffs):
    # numpy wants highest degree first; used only to check membership
    c = np.asarray(coeffs, dtype=complex)[::-1]
    if c.size < 2:
        return np.zeros(0, dtype=complex)
    return np.roots(c)


def _require(cond, msg):
    if not cond:
        raise HypothesisError(msg)


def _require_degree(p, n):
    _require(p.degree == n, f"degree {p.degree} does not match n={n}")


def _zeros_on(coeffs, K, tol, what):
    r = np.abs(_roots(coeffs))
    dev = np.abs(r - K) / max(K, 1.0)
    _require(np.all(dev <= tol),
             f"{what}: zero of modulus {r[np.argmax(dev)]:.12g} is off |z|={K}" if r.size else "")


def check_hypothesis(p: Polynomial, bound_id, params: dict, tol: ToleranceSpec = ToleranceSpec()):
    """Raise HypothesisError unless ``p`` satisfies the hypothesis of ``bound_id``."""
    bid = BoundId.parse(bound_id) if isinstance(bound_id, str) else bound_id
    n = params["n"]
    _require_degree(p, n)
    _require(n >= 1, "degree must be at least 1")
    if bid is BoundId.BERNSTEIN:
        return
    if bid is BoundId.ANKENY_RIVLIN:
        r = np.abs(_roots(p.coeffs))
        _require(np.all(r >= 1.0 - tol.root_tol), f"zero of modulus {r.min():.12g} inside |z| < 1")
        return
    if bid is BoundId.DEWAN_AHUJA:
        _zeros_on(p.coeffs, params["K"], tol.root_tol, "dewan_ahuja")
        return
    if bid is BoundId.NWAEZE:
        prof = lacunary_profile(p, tol.zero_tol)
        _require(prof.m == params["m"], f"zero at origin has multiplicity {prof.m}, not m={params['m']}")
        _require(params["mu"] <= prof.mu, f"coefficient gap is {prof.mu}, smaller than mu={params['mu']}")
        _zeros_on(p.coeffs[prof.m:], params["K"], tol.root_tol, "nwaeze")
        return
    if bid is BoundId.GGM:
        t, K = params["t"], params["K"]
        idx = support(p, tol.zero_tol)
        inner = idx[(idx > 0) & (idx < t)]
        _require(inner.size == 0, f"nonzero coefficient at degree {inner[0] if inner.size else ''} below t={t}")
        r = np.abs(_roots(p.coeffs))
        _require(np.all(r >= K * (1.0 - tol.root_tol)), f"zero of modulus {r.min():.12g} inside |z| < {K}")
        return
    raise DomainError(f"no hypothesis check for {bid}")


# ---------------------------------------------------------------------------
# instance checks

def _extremum(p, r, tol, kind="max", scale=1.0):
    t = max(tol.extrema_rel * scale * (1.0 + p.abs_sum(r)), 4.0 * rounding_floor(p, r))
    return (max_modulus if kind == "max" else min_modulus)(p, r, tol=t)


def _power_err(v, e, s):
    """Certified (v+e)^s − v^s ≤ s(v+e)^(s−1)·e."""
    return s * (v + e) ** (s - 1) * e


def _verdict(lhs, lhs_err, rhs, rhs_err, rel_tol):
    if lhs + lhs_err <= rhs * (1.0 + rel_tol):
        return True, "pass"
    if lhs > (rhs + rhs_err) * (1.0 + rel_tol):
        return False, "fail"
    return False, "inconclusive"


def _multiplier(bid, params):
    """Multiplier for M(p,R)^s; bounds stated without s are raised to the s-th power."""
    mult = bounds.evaluate_bound(bid, **params).multiplier
    if "s" not in bounds.REGISTRY[bid].params:
        mult = mult ** int(params.get("s", 1))
    return mult


def _ggm_params(p, params, P: CircleEstimate, mK: CircleEstimate):
    """Pessimistic (smallest) GGM bound over the corners of the ‖p‖ and m enclosures."""
    t = params["t"]
    base = dict(n=p.degree, t=t, K=params["K"], R=params["R"],
                abs_a0=abs(p.coeffs[0]), abs_at=abs(p.coeffs[t]), abs_an=abs(p.coeffs[-1]))
    corners = [dict(base, norm_p=a, min_m=b)
               for a in {P.lower, P.upper} for b in {mK.lower, mK.upper}]
    vals = [bounds.ggm(bounds.GGMParams(**c)) for c in corners]
    i = int(np.argmin(vals))
    return corners[i], vals[i], max(vals) - vals[i]


def check_instance(p: Polynomial, bound_id, params: dict, tol: ToleranceSpec = ToleranceSpec(),
                   poly_id=None, check_class: bool = True) -> VerificationRecord:
    """Certified comparison of M(p,R)^s with the bound's right-hand side.

    ``params`` holds the bound's parameters (``R`` always, ``s`` defaults to 1,
    ``n`` defaults to the degree of ``p``).
    """
    bid = BoundId.parse(bound_id) if isinstance(bound_id, str) else bound_id
    params = dict(params)
    params.setdefault("n", p.degree)
    params.setdefault("s", 1)
    if check_class:
        check_hypothesis(p, bid, params, tol)
    R, s = params["R"], int(params["s"])
    MR = _extremum(p, R, tol)
    M1 = _extremum(p, 1.0, tol)
    rec = dict(poly_id=poly_id, bound_id=bid.value, n=params["n"], m=params.get("m"),
               mu=params.get("mu"), K=params.get("K"), R=R, s=s, t=params.get("t"),
               norm_p=M1.value)

    if bid is BoundId.GGM:
        if s != 1:
            raise DomainError("ggm bounds M(p,R) itself; s must be 1")
        mK = _extremum(p, params["K"], tol, kind="min")
        used, rhs, rhs_err = _ggm_params(p, params, M1, mK)
        lhs, lhs_err = MR.value, MR.err
        rec["alt_rhs"] = bounds.ankeny_rivlin(p.degree, R) * M1.value
    else:
        mult = _multiplier(bid, params)
        lhs = MR.value**s
        lhs_err = _power_err(MR.value, MR.err, s)
        rhs = mult * M1.value**s
        rhs_err = mult * _power_err(M1.value, M1.err, s)
        if bid is BoundId.NWAEZE and params["mu"] != 1:
            rec["alt_rhs"] = bounds.nwaeze(**dict(params, mu=1)) * M1.value**s

    passed, status = _verdict(lhs, lhs_err, rhs, rhs_err, tol.rel_tol)
    record = VerificationRecord(lhs=lhs, lhs_err=lhs_err, rhs=rhs, rhs_err=rhs_err,
                                ratio=lhs / rhs, passed=passed, status=status, **rec)
    if not passed and tol.audit:
        record = audit(p, record, params, tol)
    return record


def check_derivative_bound(p: Polynomial, n: int, m: int, mu: int, K: float,
                           tol: ToleranceSpec = ToleranceSpec(), poly_id=None) -> VerificationRecord:
    """max_{|z|=1}|p'| against kumar_lal_factor · max_{|z|=1}|p|."""
    c = bounds.kumar_lal_factor(n, m, mu, K)
    D = _extremum(derivative(p), 1.0, tol)
    M1 = _extremum(p, 1.0, tol)
    lhs, lhs_err = D.value, D.err
    rhs, rhs_err = c * M1.value, c * M1.err
    passed, status = _verdict(lhs, lhs_err, rhs, rhs_err, tol.rel_tol)
    rec = VerificationRecord(poly_id=poly_id, bound_id=KUMAR_LAL, n=n, m=m, mu=mu, K=K, R=1.0,
                             s=1, lhs=lhs, lhs_err=lhs_err, rhs=rhs, rhs_err=rhs_err,
                             ratio=lhs / rhs, passed=passed, status=status, norm_p=M1.value)
    if not passed and tol.audit:
        exact = oracle.kumar_lal_factor(n, m, mu, K)
        rec = _grid_audit(derivative(p), p, 1.0, 1, float(exact), rec, tol,
                          formula_ok=math.isclose(float(exact), c, rel_tol=1e-12))
    return rec


def dense_grid_max(p: Polynomial, r: float, points: int, chunk: int = 1 << 20) -> float:
    """Plain uniform-grid maximum of |p| on |z| = r (a lower bound on M(p, r))."""
    best = 0.0
    for start in range(0, points, chunk):
        k = np.arange(start, min(points, start + chunk))
        z = r * np.exp(2j * np.pi * k / points)
        best = max(best, float(np.abs(evaluate(p, z)).max()))
    return best


def _grid_audit(top, base, R, s, exact_mult, rec, tol, formula_ok=True):
    """Decide a non-passing record: refine the extrema, then look for a dense-grid witness."""
    tight = replace(tol, extrema_rel=tol.extrema_rel * 1e-3)
    T = _extremum(top, R, tight)
    B = _extremum(base, 1.0, tight)
    lhs, lhs_err = T.value**s, _power_err(T.value, T.err, s)
    rhs, rhs_err = exact_mult * B.value**s, exact_mult * _power_err(B.value, B.err, s)
    passed, status = _verdict(lhs, lhs_err, rhs, rhs_err, tol.rel_tol)
    witness = dense_grid_max(top, R, tol.audit_grid) ** s
    notes = []
    if not formula_ok:
        notes.append("formula disagrees with exact oracle")
    if not passed:
        if witness > (rhs + rhs_err) * (1.0 + tol.rel_tol):
            status = "fail"
            notes.append(f"grid witness {witness:.17g} exceeds rhs")
        else:
            status = "inconclusive"
    return replace(rec, lhs=lhs, lhs_err=lhs_err, rhs=rhs, rhs_err=rhs_err, ratio=lhs / rhs,
                   passed=passed, status=status, audited=True, note="; ".join(notes))


def audit(p: Polynomial, rec: VerificationRecord, params: dict, tol: ToleranceSpec):
    bid = BoundId(rec.bound_id)
    if bid is BoundId.GGM:
        tight = replace(tol, extrema_rel=tol.extrema_rel * 1e-3)
        M1 = _extremum(p, 1.0, tight)
        mK = _extremum(p, params["K"], tight, kind="min")
        MR = _extremum(p, params["R"], tight)
        used, rhs, rhs_err = _ggm_params(p, params, M1, mK)
        exact = float(oracle.evaluate(bid, **used))
        ok = math.isclose(exact, rhs, rel_tol=1e-10)
        passed, status = _verdict(MR.value, MR.err, exact, rhs_err, tol.rel_tol)
        witness = dense_grid_max(p, params["R"], tol.audit_grid)
        note = "" if ok else "formula disagrees with exact oracle"
        if not passed and witness > (exact + rhs_err) * (1.0 + tol.rel_tol):
            status = "fail"
        elif not passed:
            status = "inconclusive"
        return replace(rec, lhs=MR.value, lhs_err=MR.err, rhs=exact, ratio=MR.value / exact,
                       passed=passed, status=status, audited=True, note=note)
    exact = oracle.evaluate(bid, **params)
    if "s" not in bounds.REGISTRY[bid].params:
        exact = exact ** int(params.get("s", 1))
    mult = _multiplier(bid, params)
    return _grid_audit(p, p, params["R"], rec.s, float(exact), rec, tol,
                       formula_ok=math.isclose(float(exact), mult, rel_tol=1e-12))


# ---------------------------------------------------------------------------
# proof-chain identity

def proof_chain_check(p: Polynomial, theta: float, R: float, s: int = 1) -> float:
    """|p(Re^{iθ})^s − p(e^{iθ})^s − ∫_1^R s p(te^{iθ})^(s−1) p'(te^{iθ}) e^{iθ} dt|.

    The left side comes from direct evaluation, the right from adaptive
    quadrature of the derivative; raises ResourceError if either the
    quadrature fails to converge or the residual exceeds 1e-8·(1+|LHS|).
    """
    if R < 1:
        raise DomainError("need R >= 1")
    if s < 1 or int(s) != s:
        raise DomainError("need a positive integer s")
    u = complex(math.cos(theta), math.sin(theta))
    try:
        lhs = evaluate(p, R * u) ** s - evaluate(p, u) ** s
    except OverflowError:
        raise ResourceError("p(Re^{iθ})^s overflows double precision") from None
    if not cmath.isfinite(lhs):
        raise ResourceError("p(Re^{iθ})^s overflows double precision")
    if p.degree == 0:
        return abs(lhs)
    dp = derivative(p)

    def integrand(t):
        z = t * u
        return s * evaluate(p, z) ** (s - 1) * evaluate(dp, z) * u

    scale = 1.0 + abs(lhs)
    with warnings.catch_warnings():
        warnings.simplefilter("error", integrate.IntegrationWarning)
        try:
            value, _ = integrate.quad(integrand, 1.0, R, complex_func=True,
                                      epsabs=1e-10 * scale, epsrel=0.0, limit=200)
        except (integrate.IntegrationWarning, OverflowError) as exc:
            raise ResourceError(f"quadrature did not converge: {exc}") from None
    residual = abs(lhs - value)
    if residual >= 1e-8 * scale:
        raise ResourceError(f"proof-chain residual {residual:.3g} above 1e-8·(1+|LHS|)",
                            achievable=residual)
    return residual


# ---------------------------------------------------------------------------
# campaigns

DEFAULT_NS = tuple(range(2, 13))
DEFAULT_INNER_KS = tuple(round(0.1 * k, 1) for k in range(1, 11))
DEFAULT_OUTER_KS = (1.0, 1.25, 1.5, 2.0)
DEFAULT_RS = tuple(1.0 + 0.25 * k for k in range(1, 13))
DEFAULT_SS = (1, 2, 3, 4)

# which bound may be checked on which generated class
COMPATIBLE = {
    ClassId.EXTREMAL_BERNSTEIN: {BoundId.BERNSTEIN},
    ClassId.EXTREMAL_AR: {BoundId.BERNSTEIN, BoundId.ANKENY_RIVLIN, BoundId.DEWAN_AHUJA,
                          BoundId.NWAEZE},
    ClassId.ZEROS_ON_CIRCLE: {BoundId.BERNSTEIN, BoundId.DEWAN_AHUJA, BoundId.NWAEZE},
    ClassId.LACUNARY_ON_CIRCLE: {BoundId.BERNSTEIN, BoundId.NWAEZE, BoundId.DEWAN_AHUJA},
    ClassId.NO_ZEROS_IN_DISK: {BoundId.BERNSTEIN, BoundId.ANKENY_RIVLIN, BoundId.GGM},
}


@dataclass(frozen=True)
class CampaignConfig:
    class_id: ClassId
    bound_id: BoundId
    trials: int
    seed: int = DEFAULT_SEED
    ns: Sequence[int] = DEFAULT_NS
    ms: Optional[Sequence[int]] = None
    gaps: Optional[Sequence[int]] = None
    Ks: Optional[Sequence[float]] = None
    Rs: Sequence[float] = DEFAULT_RS
    ss: Sequence[int] = DEFAULT_SS
    tol: ToleranceSpec = ToleranceSpec()
    include_boundary_mu: bool = False
    check_derivative: bool = False
    workers: int = 1

    def __post_init__(self):
        if self.bound_id not in COMPATIBLE[self.class_id]:
            raise DomainError(f"{self.bound_id.cli_name} cannot be checked on "
                              f"{self.class_id.cli_name} instances")
        if self.trials < 0:
            raise DomainError("trials must be nonnegative")
        for name in ("ns", "Rs", "ss"):
            if len(getattr(self, name)) == 0:
                raise DomainError(f"empty grid axis {name}")

    def echo(self) -> dict:
        d = {f.name: getattr(self, f.name) for f in fields(self)}
        d["class_id"] = self.class_id.value
        d["bound_id"] = self.bound_id.value
        d["tol"] = asdict(self.tol)
        return {k: (list(v) if isinstance(v, (tuple, range)) else v) for k, v in d.items()}


@dataclass
class Instance:
    index: int
    poly: Polynomial
    params: dict
    gen: dict


def _choice(rng, seq):
    return seq[int(rng.integers(len(seq)))]


def _lacunary_choices(cfg, n):
    """(m, d) pairs realizable by composition for degree n."""
    ms = range(0, n) if cfg.ms is None else [m for m in cfg.ms if 0 <= m <= n - 1]
    if cfg.bound_id is BoundId.DEWAN_AHUJA:
        ms = [m for m in ms if m == 0]
    out = []
    for m in ms:
        k = n - m
        for d in range(1, k + 1):
            if k % d or (cfg.gaps is not None and d not in cfg.gaps):
                continue
            if d == k and not cfg.include_boundary_mu:
                continue
            out.append((m, d))
    return out


def draw_instance(cfg: CampaignConfig, index: int) -> Instance:
    """Deterministic instance ``index`` of a campaign."""
    rng = rng_for(instance_seed(cfg.seed, index))
    gen_seed = int(rng.integers(0, 2**63))
    R = float(_choice(rng, list(cfg.Rs)))
    s = int(_choice(rng, list(cfg.ss)))
    c, b = cfg.class_id, cfg.bound_id
    ns = list(cfg.ns)

    if c is ClassId.LACUNARY_ON_CIRCLE:
        pool = [(n, m, d) for n in ns for (m, d) in _lacunary_choices(cfg, n)]
        if not pool:
            raise DomainError("no composition-realizable (n, m, d) in the grid")
        n, m, d = _choice(rng, pool)
        K = float(_choice(rng, list(cfg.Ks or DEFAULT_INNER_KS)))
        p = lacunary_on_circle(n, m, d, K, gen_seed)
        gen = dict(class_id=c.value, n=n, m=m, d=d, K=K, seed=gen_seed)
        if b is BoundId.NWAEZE:
            params = dict(n=n, m=m, mu=d, K=K, R=R, s=s)
        elif b is BoundId.DEWAN_AHUJA:
            params = dict(n=n, K=K, R=R, s=s)
        else:
            params = dict(n=n, R=R, s=s)
    elif c is ClassId.ZEROS_ON_CIRCLE:
        n = int(_choice(rng, ns))
        K = float(_choice(rng, list(cfg.Ks or DEFAULT_INNER_KS)))
        p = zeros_on_circle(n, K, gen_seed)
        gen = dict(class_id=c.value, n=n, K=K, seed=gen_seed)
        if b is BoundId.NWAEZE:
            params = dict(n=n, m=0, mu=1, K=K, R=R, s=s)
        elif b is BoundId.DEWAN_AHUJA:
            params = dict(n=n, K=K, R=R, s=s)
        else:
            params = dict(n=n, R=R, s=s)
    elif c is ClassId.NO_ZEROS_IN_DISK:
        pool = [(n, t) for n in ns for t in range(1, n + 1)
                if n % t == 0 and (cfg.gaps is None or t in cfg.gaps)]
        if not pool:
            raise DomainError("no (n, t) with t | n in the grid")
        n, t = _choice(rng, pool)
        K = float(_choice(rng, list(cfg.Ks or DEFAULT_OUTER_KS)))
        p = no_zeros_in_disk(n, t, K, gen_seed)
        gen = dict(class_id=c.value, n=n, t=t, K=K, seed=gen_seed)
        if b is BoundId.GGM:
            params = dict(n=n, t=t, K=K, R=R, s=1)
        else:
            params = dict(n=n, R=R, s=1 if b is BoundId.ANKENY_RIVLIN else s)
    else:
        n = int(_choice(rng, ns))
        alpha = complex(np.exp(2j * np.pi * rng.random()))
        if c is ClassId.EXTREMAL_BERNSTEIN:
            alpha *= float(rng.uniform(0.5, 2.0))
            p = extremal_bernstein(n, alpha)
            gen = dict(class_id=c.value, n=n, alpha=[alpha.real, alpha.imag])
        else:
            beta = complex(np.exp(2j * np.pi * rng.random()))
            p = extremal_ar(n, alpha, beta)
            gen = dict(class_id=c.value, n=n, alpha=[alpha.real, alpha.imag],
                       beta=[beta.real, beta.imag])
        params = dict(n=n, R=R, s=s)
        if b is BoundId.ANKENY_RIVLIN:
            params["s"] = 1
        elif b is BoundId.DEWAN_AHUJA:
            params.update(K=1.0)
        elif b is BoundId.NWAEZE:
            params.update(m=0, mu=n, K=1.0)
    return Instance(index, p, params, gen)


def _run_one(cfg: CampaignConfig, index: int):
    inst = draw_instance(cfg, index)
    try:
        check_hypothesis(inst.poly, cfg.bound_id, inst.params, cfg.tol)
    except HypothesisError as exc:
        raise HypothesisError(f"instance {index} {json.dumps(inst.gen)} "
                              f"coeffs={dumps(inst.poly)}: {exc}") from None
    rec = check_instance(inst.poly, cfg.bound_id, inst.params, cfg.tol,
                         poly_id=index, check_class=False)
    extra = None
    if cfg.check_derivative and cfg.class_id is ClassId.LACUNARY_ON_CIRCLE:
        g = inst.gen
        extra = check_derivative_bound(inst.poly, g["n"], g["m"], g["d"], g["K"], cfg.tol, index)
    return rec, extra


@dataclass
class CampaignReport:
    config: dict
    trials: int
    records: list
    failures: list
    tightness: dict
    runtime_s: float
    derivative_records: list = field(default_factory=list)
    derivative_failures: list = field(default_factory=list)
    mu_comparison: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures and not self.derivative_failures

    def to_json(self) -> dict:
        return {
            "config": self.config,
            "trials": self.trials,
            "passed": self.passed,
            "tightness": self.tightness,
            "mu_comparison": self.mu_comparison,
            "runtime_s": self.runtime_s,
            "failures": [r.to_json() for r in self.failures],
            "derivative_failures": [r.to_json() for r in self.derivative_failures],
            "records": [r.to_json() for r in self.records],
            "derivative_records": [r.to_json() for r in self.derivative_records],
        }

    def summary(self) -> str:
        t = self.tightness
        lines = [f"{self.config['class_id']} / {self.config['bound_id']}: {self.trials} trials, "
                 f"{len(self.failures)} failures"]
        if self.records:
            lines.append(f"  tightness: max ratio {t['max_ratio']:.6g} (instance {t['argmax']}), "
                         f"mean ratio {t['mean_ratio']:.6g}")
        if self.derivative_records:
            lines.append(f"  derivative bound: {len(self.derivative_records)} checks, "
                         f"{len(self.derivative_failures)} failures")
        if self.mu_comparison:
            mc = self.mu_comparison
            lines.append(f"  gap mu vs mu=1: smaller rhs at detected mu in {mc['gap_smaller']}, "
                         f"at mu=1 in {mc['mu1_smaller']} of {mc['compared']}")
        lines.append(f"  runtime {self.runtime_s:.3g} s")
        return "\n".join(lines)


def _tightness(records):
    if not records:
        return {"max_ratio": None, "mean_ratio": None, "argmax": None}
    ratios = np.array([r.ratio for r in records])
    i = int(np.argmax(ratios))
    return {"max_ratio": float(ratios[i]), "mean_ratio": float(ratios.mean()),
            "argmax": records[i].poly_id}


def run_campaign(cfg: CampaignConfig) -> CampaignReport:
    """Check ``cfg.trials`` seeded instances; the fold is ordered by instance index."""
    start = time.perf_counter()
    indices = range(cfg.trials)
    if cfg.workers > 1 and cfg.trials > 1:
        with ProcessPoolExecutor(cfg.workers) as pool:
            results = list(pool.map(_run_one, itertools.repeat(cfg), indices,
                                    chunksize=max(1, cfg.trials // (4 * cfg.workers))))
    else:
        results = [_run_one(cfg, i) for i in indices]
    records = [r for r, _ in results]
    derivs = [d for _, d in results if d is not None]
    compared = [r for r in records if r.bound_id == "nwaeze" and r.alt_rhs is not None]
    mu_cmp = {}
    if compared:
        mu_cmp = {"compared": len(compared),
                  "gap_smaller": sum(r.rhs < r.alt_rhs for r in compared),
                  "mu1_smaller": sum(r.rhs > r.alt_rhs for r in compared)}
    return CampaignReport(
        config=cfg.echo(),
        trials=cfg.trials,
        records=records,
        failures=[r for r in records if not r.passed],
        tightness=_tightness(records),
        runtime_s=time.perf_counter() - start,
        derivative_records=derivs,
        derivative_failures=[d for d in derivs if not d.passed],
        mu_comparison=mu_cmp,
    )


# ---------------------------------------------------------------------------
# serialization

def records_to_csv(records: Sequence[VerificationRecord]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in records:
        w.writerow(r.csv_row())
    return buf.getvalue()


def report_to_json(report: CampaignReport) -> str:
    return json.dumps(report.to_json(), indent=2, default=_json_default)


def _json_default(o):
    if isinstance(o, complex):
        return [o.real, o.imag]
    if isinstance(o, np.generic):
        return o.item()
    raise TypeError(type(o))
