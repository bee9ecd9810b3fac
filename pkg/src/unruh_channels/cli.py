"""Command-line front end: inspect states, run sweeps, print the discrepancy report."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import List, Optional

import numpy as np

from .channel import R_MAX, AccelerationPair, REGION_LABELS, channel
from .measures import measure_report
from .states import (
    Bell,
    GeneralizedWerner,
    GenericPure,
    InvariantViolation,
    StateFamily,
    Werner,
    density_to_bloch,
    make_state,
    validate_density,
)
from .sweep import (
    FIGURE_NAMES,
    AxisSpec,
    SweepConfig,
    discrepancy_report,
    emit_csv,
    figure_config,
    render_figure,
    run_sweep,
)

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_INVARIANT = 3


def _add_family_args(parser: argparse.ArgumentParser, with_ranges: bool) -> None:
    parser.add_argument(
        "--family", choices=("bell", "werner", "gwerner", "pure"), help="state family"
    )
    parser.add_argument("--x", type=float, help="Werner mixing parameter")
    parser.add_argument("--p", type=float, help="generic-pure Bloch length")
    parser.add_argument("--cxx", type=float, help="generalized-Werner c_xx")
    parser.add_argument("--cyy", type=float, help="generalized-Werner c_yy")
    parser.add_argument("--czz", type=float, help="generalized-Werner c_zz")
    if with_ranges:
        parser.add_argument(
            "--x-range", metavar="MIN:MAX:STEPS", help="sweep the Werner parameter"
        )
        parser.add_argument(
            "--p-range", metavar="MIN:MAX:STEPS", help="sweep the pure-state parameter"
        )


def _parse_range(text: str) -> AxisSpec:
    parts = text.split(":")
    if len(parts) != 3:
        raise ValueError(f"range must look like MIN:MAX:STEPS, got {text!r}")
    return AxisSpec(float(parts[0]), float(parts[1]), int(parts[2]))


def _build_family(args) -> StateFamily:
    if args.family is None:
        raise ValueError("--family is required (or use --figure)")
    given = {
        name: getattr(args, name)
        for name in ("x", "p", "cxx", "cyy", "czz")
        if getattr(args, name) is not None
    }
    allowed = {
        "bell": set(),
        "werner": {"x"},
        "gwerner": {"cxx", "cyy", "czz"},
        "pure": {"p"},
    }[args.family]
    stray = set(given) - allowed
    if stray:
        raise ValueError(
            f"conflicting family parameters for --family {args.family}: "
            f"{sorted('--' + s for s in stray)}"
        )
    if args.family == "bell":
        return Bell()
    if args.family == "werner":
        return Werner(given.get("x", 0.6))
    if args.family == "pure":
        return GenericPure(given.get("p", 0.5))
    return GeneralizedWerner(
        given.get("cxx", -0.7), given.get("cyy", -0.5), given.get("czz", -0.3)
    )


def _build_sweep_config(args) -> SweepConfig:
    if args.figure is not None:
        return figure_config(args.figure, steps=args.grid)
    family = _build_family(args)
    family_param = None
    family_axis = None
    ranges = [(n, getattr(args, f"{n}_range")) for n in ("x", "p")]
    ranges = [(n, r) for n, r in ranges if r is not None]
    if len(ranges) > 1:
        raise ValueError("at most one family parameter range may be swept")
    if ranges:
        name, text = ranges[0]
        if getattr(args, name) is not None:
            raise ValueError(f"conflicting family parameters: --{name} and --{name}-range")
        family_param = name
        family_axis = _parse_range(text)
    if args.lock_acc and args.stationary:
        raise ValueError("--lock-acc conflicts with --stationary")
    if args.lock_acc:
        mode = "locked"
    elif args.stationary:
        mode = f"stationary-{args.stationary}"
    else:
        mode = "grid"
    regions = tuple(REGION_LABELS[r] for r in (args.region or ["I-I"]))
    measures = tuple(args.measures.split(",")) if args.measures else (
        "concurrence",
        "fidelity",
        "telp",
        "purity",
    )
    return SweepConfig(
        family=family,
        regions=regions,
        measures=measures,
        acc_mode=mode,
        acc_axis=AxisSpec(0.0, R_MAX, args.grid),
        family_param=family_param,
        family_axis=family_axis,
    )


def _cmd_state(args) -> int:
    family = _build_family(args)
    rho = make_state(family)
    if args.r_a or args.r_b:
        rho_out = channel(
            rho, AccelerationPair(args.r_a, args.r_b), REGION_LABELS[args.region]
        )
    else:
        rho_out = rho
    b = density_to_bloch(rho_out)
    rep = measure_report(rho_out, rho)
    val = validate_density(rho_out)
    with np.printoptions(precision=6, suppress=True, linewidth=120):
        print(f"family: {family}")
        print(f"region: {args.region}, r_a={args.r_a}, r_b={args.r_b}")
        print("density matrix:")
        print(rho_out)
        print(f"bloch s: {b.s}")
        print(f"bloch t: {b.t}")
        print("correlation dyadic:")
        print(b.C)
    print(
        f"concurrence={rep.concurrence:.12g} fidelity={rep.fidelity:.12g} "
        f"telp={rep.telp:.12g} purity={rep.purity:.12g} verdict={rep.separable_verdict}"
    )
    print(
        f"validation: hermiticity {val.hermiticity_deviation:.2e}, "
        f"trace deviation {val.trace_deviation:.2e}, "
        f"min eigenvalue {val.min_eigenvalue:.2e}"
    )
    return EXIT_OK


def _cmd_sweep(args) -> int:
    cfg = _build_sweep_config(args)
    rows = run_sweep(cfg)
    out = Path(args.out)
    if args.format in ("csv", "both"):
        emit_csv(rows, out)
        print(f"wrote {out} ({len(rows)} rows)")
    if args.format in ("plot", "both"):
        plot_measures = [m for m in cfg.measures if m != "separability"]
        for sel in cfg.regions:
            region_rows = [r for r in rows if r.region == sel.label]
            for measure in plot_measures:
                dest = out.with_name(
                    f"{out.stem}_{sel.label}_{measure}.svg"
                )
                render_figure(region_rows, measure, dest)
                print(f"wrote {dest}")
    return EXIT_OK


def _cmd_report(args) -> int:
    print(discrepancy_report(grid_steps=args.grid, samples=args.samples))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="unruh-channels",
        description="Two-qubit channels between accelerated observers: "
        "states, sweeps, and discrepancy reports.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_state = sub.add_parser("state", help="print a family's matrix and measures")
    _add_family_args(p_state, with_ranges=False)
    p_state.add_argument("--r-a", type=float, default=0.0, help="Alice acceleration")
    p_state.add_argument("--r-b", type=float, default=0.0, help="Rob acceleration")
    p_state.add_argument(
        "--region", choices=sorted(REGION_LABELS), default="I-I", help="kept wedges"
    )
    p_state.set_defaults(func=_cmd_state)

    p_sweep = sub.add_parser("sweep", help="run a grid sweep and emit CSV/plots")
    _add_family_args(p_sweep, with_ranges=True)
    p_sweep.add_argument(
        "--figure", choices=FIGURE_NAMES, help="use a published-figure preset"
    )
    p_sweep.add_argument(
        "--region",
        action="append",
        choices=sorted(REGION_LABELS),
        help="kept wedges (repeatable)",
    )
    p_sweep.add_argument("--grid", type=int, default=64, help="steps per axis")
    p_sweep.add_argument(
        "--lock-acc", action="store_true", help="sweep one axis with r_a = r_b"
    )
    p_sweep.add_argument(
        "--stationary",
        choices=("alice", "rob"),
        help="keep one observer at r = 0 and sweep the other",
    )
    p_sweep.add_argument(
        "--measures", help="comma-separated subset of measures to plot"
    )
    p_sweep.add_argument("--out", default="sweep.csv", help="CSV destination")
    p_sweep.add_argument(
        "--format", choices=("csv", "plot", "both"), default="csv", help="outputs"
    )
    p_sweep.set_defaults(func=_cmd_sweep)

    p_report = sub.add_parser(
        "report", help="print the printed-formula discrepancy report"
    )
    p_report.add_argument("--grid", type=int, default=16, help="grid steps per axis")
    p_report.add_argument("--samples", type=int, default=25, help="random states")
    p_report.set_defaults(func=_cmd_report)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InvariantViolation as exc:
        print(f"numeric invariant violation: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
