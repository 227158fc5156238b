"""Command-line front end: sampling, CDF evaluation, depth, verification.

Exit codes: 0 success, 2 invalid input (bad flags, malformed files,
unsupported parameter combinations), 1 numerical failure (quadrature budget
exhausted, convergence trend violated).  Identical argv and seed produce
byte-identical output files; console summaries may include timing.
"""

import argparse
import sys

import numpy as np

from .depth import (DepthResult, depth_1d, depth_2d_exact, depth_approx,
                    depth_bruteforce)
from .experiment import (ExperimentConfig, convergence_table, default_grid,
                         run_counterexample, write_report_csv,
                         write_report_json)
from .alpha_symmetric import (AlphaSymmetricLaw, Kind, load_sample_csv,
                              sample_law, save_sample_csv)
from .stable import DEFAULT_TOL, StableLaw1D, cdf_sas

__all__ = ["main"]


def _fmt(v: float) -> str:
    return f"{float(v):.17g}"


def _print_depth(res: DepthResult) -> None:
    f = res.fraction
    print(f"{f.numerator}/{f.denominator} ({_fmt(res.value)})")


# ---------------------------------------------------------------------------
# Subcommand handlers
# ---------------------------------------------------------------------------


def _cmd_sample(args) -> int:
    law = AlphaSymmetricLaw(d=args.d, alpha=args.alpha, kind=Kind(args.law))
    sample = sample_law(law, args.n, args.seed)
    save_sample_csv(sample, args.out)
    print(f"wrote {sample.n} x {sample.d} sample ({args.law}, "
          f"alpha={_fmt(args.alpha)}) to {args.out}")
    return 0


def _cmd_cdf(args) -> int:
    law = StableLaw1D(alpha=args.alpha)
    print(_fmt(cdf_sas(law, args.x, args.tol)))
    return 0


def _parse_query(text: str) -> np.ndarray:
    try:
        q = np.array([float(part) for part in text.split(",")])
    except ValueError:
        raise ValueError(f"malformed query {text!r}; expected \"x1,x2,...\"")
    return q


def _cmd_depth(args) -> int:
    pts = load_sample_csv(args.points)
    q = _parse_query(args.query)
    if q.size != pts.d:
        raise ValueError(
            f"query has {q.size} coordinates but {args.points} has "
            f"{pts.d} columns")
    d = pts.d
    if args.method == "exact":
        if d == 1:
            res = depth_1d(pts, q[0])
        elif d == 2:
            res = depth_2d_exact(pts, q)
        else:
            res = depth_bruteforce(pts, q)
    else:
        res = depth_approx(pts, q, k=args.k, seed=args.seed, refine=True)
    _print_depth(res)
    return 0


_CONFIG_INT_KEYS = ("d", "n", "seed", "k")
_CONFIG_FLOAT_KEYS = ("alpha", "tol")
_CONFIG_STR_KEYS = ("out_csv", "out_json")


def _read_config(path: str) -> dict:
    values = {}
    with open(path) as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected key=value, got {line!r}")
            key, _, val = line.partition("=")
            key, val = key.strip(), val.strip()
            if key in _CONFIG_INT_KEYS:
                values[key] = int(val)
            elif key in _CONFIG_FLOAT_KEYS:
                values[key] = float(val)
            elif key in _CONFIG_STR_KEYS:
                values[key] = val
            else:
                raise ValueError(f"{path}:{lineno}: unknown config key {key!r}")
    return values


_VERIFY_DEFAULTS = {"d": 2, "alpha": 0.5, "n": 200_000, "seed": 0, "k": 5000,
                    "tol": DEFAULT_TOL, "out_csv": "report.csv",
                    "out_json": "report.json"}


def _merge_verify_settings(args) -> dict:
    settings = dict(_VERIFY_DEFAULTS)
    if args.config is not None:
        settings.update(_read_config(args.config))
    for key in _VERIFY_DEFAULTS:
        flag = getattr(args, key)
        if flag is not None:
            settings[key] = flag
    return settings


def _cmd_verify(args) -> int:
    s = _merge_verify_settings(args)
    cfg = ExperimentConfig(d=s["d"], alpha=s["alpha"], n=s["n"],
                           grid=default_grid(s["d"], s["seed"]),
                           k=s["k"], seed=s["seed"], tol=s["tol"])
    report = run_counterexample(cfg)
    write_report_csv(report, s["out_csv"])
    write_report_json(report, s["out_json"])
    print(f"engine {report.engine}, {len(cfg.grid)} grid points, n={cfg.n}")
    print(f"sup|depth_P - closed_form| = {_fmt(report.sup_err_p)}")
    print(f"sup|depth_Q - closed_form| = {_fmt(report.sup_err_q)}")
    print(f"sup|depth_P - depth_Q|     = {_fmt(report.sup_err_pq)}")
    print(f"cf gap at t={report.cf_t.tolist()}: {_fmt(report.cf_gap)} "
          f"(se {_fmt(report.cf_gap_se)})")
    print(f"wrote {s['out_csv']} and {s['out_json']} "
          f"in {report.wall_time_s:.2f}s")
    return 0


def _cmd_converge(args) -> int:
    sizes = [int(part) for part in args.sizes.split(",")]
    cfg = ExperimentConfig(d=args.d, alpha=args.alpha, n=max(100, sizes[0]),
                           grid=default_grid(args.d, args.seed),
                           k=args.k, seed=args.seed, tol=args.tol)
    rows = convergence_table(cfg, sizes)
    print("n,sup_err_P,sup_err_Q,sup_err_PQ")
    for r in rows:
        print(f"{r.n},{_fmt(r.sup_err_p)},{_fmt(r.sup_err_q)},{_fmt(r.sup_err_pq)}")
    return 0


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="halfdepth",
        description="Halfspace depth tools: stable sampling, marginal CDF, "
                    "depth engines, and the two-laws-one-depth verification "
                    "experiment.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sample", help="draw a sample and write it as CSV")
    p.add_argument("--law", required=True, choices=[k.value for k in Kind],
                   help="which multivariate law to draw from")
    p.add_argument("--alpha", type=float, default=0.5,
                   help="stability index in (0, 1] (default 0.5)")
    p.add_argument("--d", type=int, required=True, help="dimension")
    p.add_argument("--n", type=int, required=True, help="number of rows")
    p.add_argument("--seed", type=int, default=0, help="rng seed (default 0)")
    p.add_argument("--out", required=True, help="output CSV path")
    p.set_defaults(func=_cmd_sample)

    p = sub.add_parser("cdf", help="evaluate the marginal CDF F(x)")
    p.add_argument("--alpha", type=float, required=True,
                   help="stability index in (0, 2]")
    p.add_argument("--x", type=float, required=True, help="evaluation point")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL,
                   help=f"absolute tolerance (default {DEFAULT_TOL:g})")
    p.set_defaults(func=_cmd_cdf)

    p = sub.add_parser("depth", help="depth of a query point in a CSV sample")
    p.add_argument("--points", required=True,
                   help="headerless CSV of sample points; d inferred from "
                        "the first row")
    p.add_argument("--query", required=True,
                   help="query point as \"x1,x2,...\"")
    p.add_argument("--method", choices=["exact", "approx"], default="exact",
                   help="exact engines (d<=3; d=3 limited to n<=200) or "
                        "direction sampling (default exact)")
    p.add_argument("--k", type=int, default=5000,
                   help="directions for --method approx (default 5000)")
    p.add_argument("--seed", type=int, default=0,
                   help="direction seed for --method approx (default 0)")
    p.set_defaults(func=_cmd_depth)

    p = sub.add_parser("verify",
                       help="run the depth-agreement experiment, write "
                            "report CSV + JSON summary")
    p.add_argument("--config", help="key=value file; flags override it")
    p.add_argument("--d", type=int, help="dimension (default 2)")
    p.add_argument("--alpha", type=float, help="stability index (default 0.5)")
    p.add_argument("--n", type=int, help="sample size (default 200000)")
    p.add_argument("--seed", type=int, help="master seed (default 0)")
    p.add_argument("--k", type=int,
                   help="directions for the d>=3 engine (default 5000)")
    p.add_argument("--tol", type=float,
                   help=f"CDF tolerance (default {DEFAULT_TOL:g})")
    p.add_argument("--out-csv", dest="out_csv",
                   help="per-point report path (default report.csv)")
    p.add_argument("--out-json", dest="out_json",
                   help="summary path (default report.json)")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("converge",
                       help="sup-error table over increasing sample sizes")
    p.add_argument("--sizes", default="1000,10000,100000",
                   help="comma-separated increasing sample sizes "
                        "(default 1000,10000,100000)")
    p.add_argument("--d", type=int, default=2, help="dimension (default 2)")
    p.add_argument("--alpha", type=float, default=0.5,
                   help="stability index (default 0.5)")
    p.add_argument("--seed", type=int, default=0, help="master seed (default 0)")
    p.add_argument("--k", type=int, default=5000,
                   help="directions for the d>=3 engine (default 5000)")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL,
                   help=f"CDF tolerance (default {DEFAULT_TOL:g})")
    p.set_defaults(func=_cmd_converge)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except RuntimeError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 1
