"""Command-line interface: ``memqec <command> [options]``.

Exit codes: 0 on success, 1 when a verification check fails, 2 for usage
errors (argparse's convention).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from . import __version__
from .acceptance import CRITERIA, run_criteria, supplementary_checks
from .channel import SYMMETRIC, ChannelParams, distribution_csv
from .codes import CODE_NAMES, ALIASES, CodeSpec, build_code, canonical_name
from .fidelity import CREDIT_MODES, entanglement_fidelity_exact
from .threshold import (
    ASYMMETRIC_ALPHAS,
    default_p_grid,
    fidelity_sweep,
    mu_threshold_curve,
    p_threshold_curve,
    rows_to_csv,
)

ALPHA_SUM_TOL = 1e-9
FIGURE_P_VALUES = (4.33e-2, 4e-2, 3.67e-2)


def _load_code(name: str) -> CodeSpec:
    code = build_code(name, allow_collisions=True)
    if code.collisions:
        print(
            f"warning: {code.name}: {len(code.collisions)} correctable elements share a "
            "syndrome with an earlier element; the lookup table keeps the first of each",
            file=sys.stderr,
        )
    return code


def _alphas(parser: argparse.ArgumentParser, args) -> Optional[tuple[float, float, float]]:
    given = [args.alpha_x, args.alpha_y, args.alpha_z]
    if all(a is None for a in given):
        return None
    if any(a is None for a in given):
        parser.error("--alpha-x, --alpha-y and --alpha-z must be given together")
    if any(a < 0 for a in given):
        parser.error("alpha weights must be nonnegative")
    total = sum(given)
    if abs(total - 1.0) > ALPHA_SUM_TOL:
        parser.error(f"alpha weights must sum to 1 within {ALPHA_SUM_TOL:g}, got {total!r}")
    # Renormalize so the channel's tighter check accepts them.
    return tuple(a / total for a in given)


def _code_arg(value: str) -> str:
    try:
        return canonical_name(value)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _add_alpha_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--alpha-x", type=float, help="fraction of p assigned to X errors")
    p.add_argument("--alpha-y", type=float, help="fraction of p assigned to Y errors")
    p.add_argument("--alpha-z", type=float, help="fraction of p assigned to Z errors")


def build_parser() -> argparse.ArgumentParser:
    codes = ", ".join(CODE_NAMES + tuple(ALIASES))
    parser = argparse.ArgumentParser(
        prog="memqec",
        description="Exact fidelity and threshold analysis of the five- and seven-qubit "
        "codes under a Markov-correlated Pauli channel.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    f = sub.add_parser("fidelity", help="entanglement fidelity report (JSON)")
    f.add_argument("--code", type=_code_arg, required=True, help=f"one of: {codes}")
    f.add_argument("--p", type=float, required=True, help="error probability per qubit")
    f.add_argument("--mu", type=float, default=0.0, help="degree of memory (default 0)")
    f.add_argument("--credit", choices=CREDIT_MODES, default="listed",
                   help="which error strings count as corrected (default: listed)")
    f.add_argument("--out", type=Path, help="write the report here instead of stdout")
    _add_alpha_flags(f)

    v = sub.add_parser("verify", help="run acceptance checks; exit 1 on any failure")
    v.add_argument("--all", action="store_true", help="run every criterion plus supplementary checks")
    v.add_argument("--criterion", type=int, action="append", choices=sorted(CRITERIA),
                   help="run only this criterion (repeatable)")
    v.add_argument("--json", action="store_true", help="print results as JSON")

    t = sub.add_parser("threshold", help="threshold curve as CSV")
    t.add_argument("--code", type=_code_arg, required=True, help=f"one of: {codes}")
    t.add_argument("--regime", choices=("symmetric", "asymmetric"), default="symmetric")
    t.add_argument("--axis", choices=("p", "mu"), default="p",
                   help="p: mu_threshold over a p grid; mu: p_threshold over a mu grid")
    t.add_argument("--min", dest="grid_min", type=float, help="grid start")
    t.add_argument("--max", dest="grid_max", type=float, help="grid end")
    t.add_argument("--points", type=int, default=200, help="grid size (default 200)")
    t.add_argument("--credit", choices=CREDIT_MODES, default="listed")
    t.add_argument("--format", dest="fmt", choices=("csv", "json"), default="csv")
    t.add_argument("--out", type=Path)
    _add_alpha_flags(t)

    g = sub.add_parser("figures", help="write data for the six figures into a directory")
    g.add_argument("--out", type=Path, required=True)
    g.add_argument("--points", type=int, default=200, help="p-grid size for threshold figures")
    g.add_argument("--mu-points", type=int, default=101, help="mu-grid size for fidelity figures")

    d = sub.add_parser("dump-code", help="code definition as JSON")
    d.add_argument("--code", type=_code_arg, required=True, help=f"one of: {codes}")
    d.add_argument("--out", type=Path)

    e = sub.add_parser("distribution", help="full error distribution as CSV")
    e.add_argument("--n", type=int, required=True, help="number of qubits (at most 10)")
    e.add_argument("--p", type=float, required=True)
    e.add_argument("--mu", type=float, default=0.0)
    e.add_argument("--out", type=Path)
    _add_alpha_flags(e)
    return parser


def _emit(text: str, out: Optional[Path]) -> None:
    if out is None:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(text if text.endswith("\n") else text + "\n")


def _params(parser: argparse.ArgumentParser, p: float, mu: float, alphas) -> ChannelParams:
    try:
        return ChannelParams(p, mu, alphas or SYMMETRIC)
    except ValueError as exc:
        parser.error(str(exc))


def cmd_fidelity(parser, args) -> int:
    params = _params(parser, args.p, args.mu, _alphas(parser, args))
    report = entanglement_fidelity_exact(_load_code(args.code), params, credit=args.credit)
    _emit(report.to_json(indent=2), args.out)
    return 0


def cmd_verify(parser, args) -> int:
    if args.all and args.criterion:
        parser.error("--all and --criterion are mutually exclusive")
    results = run_criteria(args.criterion)
    if not args.criterion:
        results.append(supplementary_checks())
    if args.json:
        _emit(json.dumps([r.to_dict() for r in results], indent=2), None)
    else:
        for r in results:
            print(r.line())
            for c in r.checks:
                print(f"    [{'ok' if c.passed else 'FAIL'}] {c.name}: {c.detail}")
    return 0 if all(r.passed for r in results) else 1


def cmd_threshold(parser, args) -> int:
    alphas = _alphas(parser, args)
    if args.regime == "symmetric" and alphas is not None:
        parser.error("alpha flags require --regime asymmetric")
    if args.points < 2:
        parser.error("--points must be at least 2")
    code = _load_code(args.code)
    if args.axis == "p":
        lo = 1e-4 if args.grid_min is None else args.grid_min
        hi = 0.2 if args.grid_max is None else args.grid_max
        if not 0 < lo < hi < 1:
            parser.error("p grid needs 0 < min < max < 1")
        grid = default_p_grid() if (args.grid_min, args.grid_max, args.points) == (None, None, 200) \
            else np.geomspace(lo, hi, args.points)
        curve = mu_threshold_curve(code, args.regime, grid, alphas=alphas, credit=args.credit)
    else:
        lo = 0.0 if args.grid_min is None else args.grid_min
        hi = 1.0 if args.grid_max is None else args.grid_max
        if not 0 <= lo < hi <= 1:
            parser.error("mu grid needs 0 <= min < max <= 1")
        curve = p_threshold_curve(code, args.regime, np.linspace(lo, hi, args.points),
                                  alphas=alphas, credit=args.credit)
    if args.fmt == "csv":
        _emit(curve.to_csv(), args.out)
    else:
        payload = {
            "code_name": curve.code_name,
            "regime": curve.regime,
            "alphas": list(curve.alphas),
            "axis": curve.axis,
            "credit": curve.credit,
            "bisection_tol": curve.bisection_tol,
            "samples": [list(s) for s in curve.samples],
            "monotonicity_violations": curve.monotonicity_violations(),
        }
        _emit(json.dumps(payload, indent=2), args.out)
    return 0


def write_figures(out: Path, points: int = 200, mu_points: int = 101) -> dict:
    """Write six CSV files plus ``manifest.json``; returns the manifest."""
    out.mkdir(parents=True, exist_ok=True)
    p_grid = default_p_grid() if points == 200 else np.geomspace(1e-4, 0.2, points)
    five = build_code("five_qubit")
    set1 = build_code("seven_qubit_set1")
    set2 = build_code("seven_qubit_set2", allow_collisions=True)

    def thresholds(curves):
        rows = [row for c in curves for row in ((x, t, c.label) for x, t in c.samples)]
        return rows_to_csv(("p", "mu_threshold", "curve"), rows)

    def sweeps(items):
        rows = [row for s in items for row in ((mu, f, s.label) for mu, f in s.rows)]
        return rows_to_csv(("mu", "fidelity", "curve"), rows)

    mu_five = np.linspace(0.0, 0.33, mu_points)
    mu_seven = np.linspace(0.0, 0.199, mu_points)
    five_curve = mu_threshold_curve(five, "symmetric", p_grid, label="five_qubit")
    figures = {
        "fig1": thresholds([five_curve]),
        "fig2": sweeps([fidelity_sweep(five, "symmetric", p, mu_five, label=f"p={p:g}") for p in FIGURE_P_VALUES]),
        "fig3": sweeps([fidelity_sweep(set1, "symmetric", p, mu_seven, label=f"p={p:g}") for p in FIGURE_P_VALUES]),
        "fig4": thresholds([
            five_curve,
            mu_threshold_curve(set2, "symmetric", p_grid, label="seven_qubit_set2"),
            mu_threshold_curve(set1, "symmetric", p_grid, label="seven_qubit_set1"),
        ]),
        "fig5": thresholds([
            mu_threshold_curve(set2, "asymmetric", p_grid, alphas=ASYMMETRIC_ALPHAS, label="seven_qubit_set2_asymmetric"),
            mu_threshold_curve(five, "asymmetric", p_grid, alphas=ASYMMETRIC_ALPHAS, label="five_qubit_asymmetric"),
        ]),
        "fig6": sweeps([
            fidelity_sweep(set2, "asymmetric", 4e-2, mu_seven, ASYMMETRIC_ALPHAS, label="seven_qubit_set2_asymmetric"),
            fidelity_sweep(five, "symmetric", 4e-2, mu_seven, label="five_qubit"),
            fidelity_sweep(set2, "symmetric", 4e-2, mu_seven, label="seven_qubit_set2_symmetric"),
        ]),
    }
    manifest = {"schema": 1, "alphas_asymmetric": list(ASYMMETRIC_ALPHAS), "figures": {}}
    for name, text in figures.items():
        path = out / f"{name}.csv"
        path.write_text(text)
        manifest["figures"][name] = path.name
    (out / "manifest.json").write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n")
    return manifest


def cmd_figures(parser, args) -> int:
    if args.points < 2 or args.mu_points < 2:
        parser.error("--points and --mu-points must be at least 2")
    write_figures(args.out, args.points, args.mu_points)
    return 0


def cmd_dump_code(parser, args) -> int:
    _emit(_load_code(args.code).to_json(indent=2), args.out)
    return 0


def cmd_distribution(parser, args) -> int:
    if not 1 <= args.n <= 10:
        parser.error("--n must be between 1 and 10")
    params = _params(parser, args.p, args.mu, _alphas(parser, args))
    _emit(distribution_csv(params, args.n), args.out)
    return 0


COMMANDS = {
    "fidelity": cmd_fidelity,
    "verify": cmd_verify,
    "threshold": cmd_threshold,
    "figures": cmd_figures,
    "dump-code": cmd_dump_code,
    "distribution": cmd_distribution,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](parser, args)
    except ValueError as exc:
        # Environment problems such as a malformed QEC_THREADS.
        parser.error(str(exc))
    return 2


if __name__ == "__main__":
    sys.exit(main())
