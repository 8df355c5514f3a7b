"""Reference evaluations of the bound formulas, transcribed independently of
:mod:`polygrowth.bounds`.

The multiplier bounds are evaluated in exact rational arithmetic: every
float converts to a :class:`~fractions.Fraction` without loss, so the result
is the exact value of the formula at the given double inputs.  The GGM bound
contains a logarithm and is evaluated with mpmath at 60 digits instead.
"""

from fractions import Fraction

import mpmath


def _q(x):
    return x if isinstance(x, Fraction) else Fraction(x)


def bernstein(n, R):
    return _q(R) ** n


def ankeny_rivlin(n, R):
    return (_q(R) ** n + 1) / 2


def dewan_ahuja(n, K, R, s=1):
    K, R = _q(K), _q(R)
    return (K ** (n - 1) * (1 + K) + (R ** (n * s) - 1)) / (K ** (n - 1) + K**n)


def nwaeze(n, m, mu, K, R, s=1):
    K, R = _q(K), _q(R)
    A = K ** (n - m - 2 * mu + 1)
    B = K ** (n - m - mu + 1)
    return (n * (A + B) + (R ** (n * s) - 1) * (n + m * A + m * B - m)) / (n * (A + B))


def lacunary_m0(n, mu, K, R, s=1):
    K, R = _q(K), _q(R)
    return (K ** (n - mu) * (K ** (1 - mu) + K) + (R ** (n * s) - 1)) / (
        K ** (n - 2 * mu + 1) + K ** (n - mu + 1))


def kumar_lal_factor(n, m, mu, K):
    K = _q(K)
    A = K ** (n - m - 2 * mu + 1)
    B = K ** (n - m - mu + 1)
    return (n + m * (A + B - 1)) / (A + B)


def ggm_s0(n, t, K, abs_a0, abs_at, min_m):
    K = _q(K)
    c = Fraction(t, n) * _q(abs_at) / (_q(abs_a0) - _q(min_m))
    return K ** (t + 1) * (c * K ** (t - 1) + 1) / (c * K ** (t + 1) + 1)


def ggm(n, t, K, R, norm_p, min_m, abs_a0, abs_at, abs_an, dps=60):
    """Absolute bound on M(p, R), term by term as printed."""
    s0 = ggm_s0(n, t, K, abs_a0, abs_at, min_m)
    with mpmath.workdps(dps):
        mp = lambda v: mpmath.mpf(v.numerator) / v.denominator
        s0, R, P, m, an = mp(s0), mp(_q(R)), mp(_q(norm_p)), mp(_q(min_m)), mp(_q(abs_an))
        Rn = R**n
        x = (R - 1) * (P - m) / ((P - m) + (1 + s0) * an)
        value = ((Rn + s0) / (1 + s0) * P
                 - (Rn - 1) / (1 + s0) * m
                 - n / (1 + s0) * (((P - m) ** 2 - (1 + s0) ** 2 * an**2) / (P - m))
                 * (x - mpmath.log(1 + x)))
        return value


def evaluate(bound_id, **kw):
    """Dispatch by bound name; returns a Fraction (or an mpf for ggm)."""
    name = getattr(bound_id, "value", bound_id)
    if name == "bernstein":
        return bernstein(kw["n"], kw["R"])
    if name == "ankeny_rivlin":
        return ankeny_rivlin(kw["n"], kw["R"])
    if name == "dewan_ahuja":
        return dewan_ahuja(kw["n"], kw["K"], kw["R"], kw.get("s", 1))
    if name == "nwaeze":
        return nwaeze(kw["n"], kw["m"], kw["mu"], kw["K"], kw["R"], kw.get("s", 1))
    if name == "ggm":
        return ggm(*(kw[k] for k in ("n", "t", "K", "R", "norm_p", "min_m",
                                     "abs_a0", "abs_at", "abs_an")))
    raise KeyError(name)
