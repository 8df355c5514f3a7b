"""Command-line front end.

Exit status: 0 on success or when every check passes, 1 when a verification
fails, 2 on usage or domain errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import bounds, generators, sweep as sweep_mod
from .bounds import BoundId
from .errors import PolygrowthError, ResourceError
from .generators import DEFAULT_SEED, ClassId
from .poly import dumps, lacunary_profile, loads
from .verify import (CampaignConfig, ToleranceSpec, check_instance, proof_chain_check,
                     records_to_csv, report_to_json, run_campaign)

BOUND_CHOICES = [b.cli_name for b in BoundId]
CLASS_CHOICES = [c.cli_name for c in ClassId]

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _floats(text):
    return [float(x) for x in text.split(",") if x]


def _ints(text):
    return [int(x) for x in text.split(",") if x]


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="polygrowth",
                                 description="Max-modulus growth bounds: evaluate, generate, verify.")
    sub = ap.add_subparsers(dest="command", required=True)

    e = sub.add_parser("eval-bound", help="evaluate one bound")
    e.add_argument("--bound", required=True, choices=BOUND_CHOICES)
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--m", type=int)
    e.add_argument("--mu", type=int)
    e.add_argument("--t", type=int)
    e.add_argument("--K", type=float)
    e.add_argument("--R", type=float, required=True)
    e.add_argument("--s", type=int, default=1)
    for name in ("norm-p", "min-m", "abs-a0", "abs-at", "abs-an"):
        e.add_argument(f"--{name}", type=float)

    g = sub.add_parser("gen", help="generate one polynomial as JSON [re, im] pairs")
    g.add_argument("--class", dest="class_id", required=True, choices=CLASS_CHOICES)
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--m", type=int, default=0)
    g.add_argument("--d", "--t", dest="d", type=int, default=1,
                   help="gap: mu for lacunary, t for no-zeros-in-disk")
    g.add_argument("--K", type=float, default=1.0)
    g.add_argument("--seed", type=lambda x: int(x, 0), default=DEFAULT_SEED)
    g.add_argument("--out", required=True)

    v = sub.add_parser("verify", help="verify a bound on generated instances or a polynomial file")
    v.add_argument("--class", dest="class_id", choices=CLASS_CHOICES)
    v.add_argument("--bound", required=True, choices=BOUND_CHOICES)
    v.add_argument("--poly-file")
    v.add_argument("--trials", type=int, default=10)
    v.add_argument("--seed", type=lambda x: int(x, 0), default=DEFAULT_SEED)
    v.add_argument("--tol", type=float, default=1e-9, help="relative slack on the inequality")
    v.add_argument("--out")
    v.add_argument("--format", choices=("csv", "json"), default="csv")
    v.add_argument("--n", type=_ints, help="degree(s), comma separated")
    v.add_argument("--m", type=_ints)
    v.add_argument("--d", "--t", dest="d", type=_ints, help="gap(s): mu, or t for ggm")
    v.add_argument("--mu", type=int, help="with --poly-file: gap to test (default: detected)")
    v.add_argument("--K", type=_floats)
    v.add_argument("--R", type=_floats)
    v.add_argument("--s", type=_ints)
    v.add_argument("--derivative", action="store_true",
                   help="also check the derivative bound on lacunary instances")
    v.add_argument("--include-boundary-mu", action="store_true",
                   help="allow mu = n - m in lacunary campaigns")
    v.add_argument("--workers", type=int, default=1)
    v.add_argument("--plot", help="write a tightness figure to this path")

    w = sub.add_parser("sweep", help="tabulate every applicable bound over a parameter grid")
    w.add_argument("--axes", required=True,
                   help='e.g. "n=4;K=0.25,0.5,0.75,1;R=1:4:0.25;s=1"')
    w.add_argument("--out", required=True)
    w.add_argument("--plot", help="write a figure of the bound columns to this path")
    w.add_argument("--x", dest="x_axis", help="axis for the figure's x (default: R)")

    pc = sub.add_parser("proof-check", help="check the s-power integral identity numerically")
    pc.add_argument("--poly-file", required=True)
    pc.add_argument("--theta", type=float, required=True)
    pc.add_argument("--R", type=float, required=True)
    pc.add_argument("--s", type=int, default=1)
    return ap


def _write(path, text):
    if path:
        Path(path).write_text(text)


def cmd_eval_bound(a):
    kw = dict(n=a.n, m=a.m, mu=a.mu, t=a.t, K=a.K, R=a.R, s=a.s, norm_p=a.norm_p,
              min_m=a.min_m, abs_a0=a.abs_a0, abs_at=a.abs_at, abs_an=a.abs_an)
    bv = bounds.evaluate_bound(a.bound, **kw)
    print(f"{bv.multiplier:.17g}")
    return EXIT_OK


def cmd_gen(a):
    cfg = generators.GeneratorConfig(ClassId.parse(a.class_id), n=a.n, m=a.m, gap=a.d,
                                     K=a.K, seed=a.seed)
    p = generators.generate(cfg)
    Path(a.out).write_text(dumps(p) + "\n")
    print(f"wrote degree-{p.degree} {cfg.class_id.cli_name} polynomial to {a.out}")
    return EXIT_OK


def _single(a):
    p = loads(Path(a.poly_file).read_text())
    bid = BoundId.parse(a.bound)
    params = dict(n=p.degree, R=(a.R or [None])[0], s=(a.s or [1])[0])
    if params["R"] is None:
        raise PolygrowthError("--R is required with --poly-file")
    if a.K:
        params["K"] = a.K[0]
    if bid is BoundId.NWAEZE:
        prof = lacunary_profile(p)
        params["m"] = a.m[0] if a.m else prof.m
        params["mu"] = a.mu if a.mu is not None else prof.mu
    if bid is BoundId.GGM:
        params["t"] = a.d[0] if a.d else 1
    tol = ToleranceSpec(rel_tol=a.tol)
    rec = check_instance(p, bid, params, tol, poly_id=Path(a.poly_file).name)
    if a.format == "json":
        _write(a.out, json.dumps([rec.to_json()], indent=2))
    else:
        _write(a.out, records_to_csv([rec]))
    print(f"{bid.cli_name}: lhs {rec.lhs:.6g}  rhs {rec.rhs:.6g}  ratio {rec.ratio:.6g}  "
          f"{rec.status}")
    return EXIT_OK if rec.passed else EXIT_FAIL


def cmd_verify(a):
    if a.poly_file:
        return _single(a)
    if not a.class_id:
        raise PolygrowthError("verify needs --class or --poly-file")
    cls = ClassId.parse(a.class_id)
    kw = {}
    if a.n:
        kw["ns"] = a.n
    if a.m:
        kw["ms"] = a.m
    if a.d:
        kw["gaps"] = a.d
    if a.K:
        kw["Ks"] = a.K
    if a.R:
        kw["Rs"] = a.R
    if a.s:
        kw["ss"] = a.s
    cfg = CampaignConfig(cls, BoundId.parse(a.bound), a.trials, seed=a.seed,
                         tol=ToleranceSpec(rel_tol=a.tol),
                         include_boundary_mu=a.include_boundary_mu,
                         check_derivative=a.derivative, workers=a.workers, **kw)
    report = run_campaign(cfg)
    if a.format == "json":
        _write(a.out, report_to_json(report))
    else:
        _write(a.out, records_to_csv(report.records + report.derivative_records))
    if a.plot:
        from .plotting import plot_campaign
        plot_campaign(report, a.plot)
    print(report.summary())
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_sweep(a):
    axes = sweep_mod.parse_axes(a.axes)
    columns, rows = sweep_mod.sweep(axes)
    Path(a.out).write_text(sweep_mod.to_csv(columns, rows))
    if a.plot:
        from .plotting import plot_sweep
        x = a.x_axis or "R"
        plot_sweep(rows, [c for c in sweep_mod.BOUND_COLUMNS if c != "kumar_lal"], x, a.plot)
    print(f"{len(rows)} rows x {len(columns)} columns written to {a.out}")
    return EXIT_OK


def cmd_proof_check(a):
    p = loads(Path(a.poly_file).read_text())
    residual = proof_chain_check(p, a.theta, a.R, a.s)
    print(f"{residual:.17g}")
    return EXIT_OK


COMMANDS = {
    "eval-bound": cmd_eval_bound,
    "gen": cmd_gen,
    "verify": cmd_verify,
    "sweep": cmd_sweep,
    "proof-check": cmd_proof_check,
}


def dispatch(argv=None) -> int:
    parser = build_parser()
    try:
        a = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return COMMANDS[a.command](a)
    except PolygrowthError as exc:
        print(f"error: {exc}", file=sys.stderr)
        # a residual or quadrature failure in proof-check is a failed verification
        if a.command == "proof-check" and isinstance(exc, ResourceError):
            return EXIT_FAIL
        return EXIT_USAGE
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main():
    sys.exit(dispatch())


if __name__ == "__main__":
    main()
