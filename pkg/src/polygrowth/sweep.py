"""Cartesian parameter sweeps over the closed-form bounds."""

from __future__ import annotations

import csv
import io
import itertools
from fractions import Fraction

from . import bounds
from .errors import DomainError

INT_AXES = ("n", "m", "mu", "t", "s")
REAL_AXES = ("K", "R", "norm_p", "min_m", "abs_a0", "abs_at", "abs_an")
AXES = INT_AXES + REAL_AXES
DEFAULTS = {"m": 0, "mu": 1, "s": 1, "K": 1.0}
BOUND_COLUMNS = ("bernstein", "ankeny_rivlin", "dewan_ahuja", "nwaeze", "kumar_lal", "ggm")
GGM_KEYS = ("t", "norm_p", "min_m", "abs_a0", "abs_at", "abs_an")


def _values(text, integer):
    text = text.strip()
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise DomainError(f"range must be start:stop:step, got {text!r}")
        start, stop, step = (Fraction(x) for x in parts)
        if step <= 0:
            raise DomainError(f"range step must be positive in {text!r}")
        out, v = [], start
        while v <= stop:
            out.append(v)
            v += step
    else:
        out = [Fraction(x) for x in text.split(",") if x.strip()]
    if integer:
        if any(v.denominator != 1 for v in out):
            raise DomainError(f"integer axis got {text!r}")
        return [int(v) for v in out]
    return [float(v) for v in out]


def parse_axes(spec: str) -> dict:
    """``"n=4;K=0.25,0.5;R=1:4:0.25"`` → {"n": [4], "K": [...], "R": [...]}."""
    axes = {}
    for part in spec.replace(" ", "").split(";"):
        if not part:
            continue
        if "=" not in part:
            raise DomainError(f"axis needs name=values, got {part!r}")
        name, text = part.split("=", 1)
        if name not in AXES:
            raise DomainError(f"unknown axis {name!r}; choose from {', '.join(AXES)}")
        axes[name] = _values(text, name in INT_AXES)
    for required in ("n", "R"):
        if required not in axes:
            raise DomainError(f"sweep needs the {required} axis")
    if any(len(v) == 0 for v in axes.values()):
        raise DomainError("empty grid")
    return axes


def _try(f, *args, **kw):
    try:
        return f(*args, **kw)
    except DomainError:
        return None


def evaluate_cell(cell: dict) -> dict:
    """Every registered bound that applies to the cell, None where it does not."""
    c = dict(DEFAULTS, **cell)
    n, m, mu, K, R, s = c["n"], c["m"], c["mu"], c["K"], c["R"], c["s"]
    out = {
        "bernstein": _try(bounds.bernstein, n, R),
        "ankeny_rivlin": _try(bounds.ankeny_rivlin, n, R),
        "dewan_ahuja": _try(bounds.dewan_ahuja, n, K, R, s),
        "nwaeze": _try(bounds.nwaeze, n, m, mu, K, R, s),
        "kumar_lal": _try(bounds.kumar_lal_factor, n, m, mu, K),
        "ggm": None,
    }
    if all(c.get(k) is not None for k in GGM_KEYS):
        out["ggm"] = _try(lambda: bounds.ggm(bounds.GGMParams(
            n=n, t=c["t"], K=K, R=R, norm_p=c["norm_p"], min_m=c["min_m"],
            abs_a0=c["abs_a0"], abs_at=c["abs_at"], abs_an=c["abs_an"])))
    return out


def sweep(axes: dict) -> tuple:
    """Returns (columns, rows); rows are dicts keyed by column."""
    names = [a for a in AXES if a in axes]
    columns = names + list(BOUND_COLUMNS)
    rows = []
    for combo in itertools.product(*(axes[a] for a in names)):
        cell = dict(zip(names, combo))
        rows.append({**cell, **evaluate_cell(cell)})
    if not rows:
        raise DomainError("empty grid")
    return columns, rows


def to_csv(columns, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for r in rows:
        w.writerow(["" if r[c] is None else (f"{r[c]:.17g}" if isinstance(r[c], float) else r[c])
                    for c in columns])
    return buf.getvalue()
