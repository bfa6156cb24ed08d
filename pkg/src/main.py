"""
File: main.py
Description: Command-line entry point for walks, sweeps, classical ensembles and fits.
"""

import argparse
import cProfile
import json
import logging
import sys
from pathlib import Path

from colored import Fore, Style
from rich.console import Console
from rich.table import Table

from errors import DegenerateSeriesError, SeriesFormatError, StepCapError, WalkError
from operators import InputKind, WalkParams, reflectivity
from params import (
    EXIT_DEGENERATE,
    EXIT_INVALID,
    EXIT_IO,
    EXIT_OK,
    EXIT_PARSE,
    MAX_STEPS,
    default_beta_curve_params,
    default_saw_params,
    default_sweep_params,
    default_walk_params,
)
from saw import SawConfig, beta_vs_g, simulate_saw
from sim import reference_distances, run_walk
from stats import VarianceSeries, coupling_report, fit_summary
from sweep import quantum_beta_vs_theta_b, sweep
from utils.logging_config import LOGS_DIR, set_log_level, setup_logger
from utils.regime_loader import REGIME_PRESETS, list_regimes, load_regime
from utils.series_io import (
    CLASSICAL_BETA_HEADER,
    DISTRIBUTION_HEADER,
    QUANTUM_BETA_HEADER,
    SURFACE_HEADER,
    read_series,
    write_series,
    write_table,
)
from utils.utils import parse_angle, parse_grid

logger = setup_logger(__name__)


def _check_steps(steps: int) -> int:
    if not 1 <= steps <= MAX_STEPS:
        raise StepCapError(f"--steps must be between 1 and {MAX_STEPS} (got {steps})")
    return steps


def _print_json(payload) -> None:
    print(json.dumps(payload))


def cmd_run(args) -> int:
    values = dict(default_walk_params)
    if args.regime:
        values.update(load_regime(args.regime))
    for key in ("theta_c", "theta_b", "theta_m"):
        if getattr(args, key) is not None:
            values[key] = parse_angle(getattr(args, key))
    if args.steps is not None:
        values["steps"] = args.steps
    if args.input is not None:
        values["input"] = args.input
    _check_steps(int(values["steps"]))

    params = WalkParams.from_dict(values)
    trajectory = run_walk(params, keep_states=args.keep_states, prune=args.prune)

    out = Path(args.out)
    write_series(out / "series", trajectory.variances, args.format)
    write_table(
        out / "distribution", DISTRIBUTION_HEADER, trajectory.distribution_rows(), args.format
    )

    distances = reference_distances(trajectory)
    logger.info(
        f"🌀 {Fore.cyan}t={params.steps} final variance "
        f"{trajectory.final_variance:.6f}{Style.reset}; distance to ideal quantum walk "
        f"{distances.quantum[-1]:.4f}, to classical walk {distances.classical[-1]:.4f}"
    )
    _print_json(fit_summary(trajectory.variances))
    return EXIT_OK


def cmd_sweep(args) -> int:
    steps = _check_steps(args.steps)
    surface = sweep(
        parse_grid(args.grid_m),
        parse_grid(args.grid_b),
        theta_c=parse_angle(args.theta_c),
        steps=steps,
        input=args.input,
        workers=args.workers,
    )
    write_table(Path(args.out) / "surface", SURFACE_HEADER, surface.rows(), args.format)
    logger.info(
        f"Sweep done: final variance in [{surface.values.min():.4f}, "
        f"{surface.values.max():.4f}]"
    )
    return EXIT_OK


def cmd_classical(args) -> int:
    out = Path(args.out)
    if args.g_grid:

        def save_series(index: int, g: float, series: VarianceSeries) -> None:
            write_series(out / f"series_g{index}", series, args.format)

        points = beta_vs_g(
            [float(g) for g in args.g_grid.split(",") if g.strip()],
            steps=args.steps,
            replicates=args.reps,
            mod2=args.mod2,
            seed=args.seed,
            workers=args.workers,
            on_series=save_series,
        )
        write_table(out / "beta", CLASSICAL_BETA_HEADER, points, args.format)
        _print_json([dict(zip(CLASSICAL_BETA_HEADER, p, strict=True)) for p in points])
        return EXIT_OK

    config = SawConfig(args.g, args.steps, args.reps, args.mod2, args.seed)
    series = simulate_saw(config, workers=args.workers)
    write_series(out / "series", series, args.format)
    _print_json(fit_summary(series))
    return EXIT_OK


def cmd_fit(args) -> int:
    series = read_series(args.series)
    summary = fit_summary(series)
    _print_json(summary)
    if summary["beta"] is None or summary["k2"] is None:
        raise DegenerateSeriesError(f"{args.series}: degenerate series, fit incomplete")
    return EXIT_OK


def cmd_beta_curve(args) -> int:
    steps = _check_steps(args.steps)
    points = quantum_beta_vs_theta_b(
        parse_grid(args.grid_b),
        theta_c=parse_angle(args.theta_c),
        theta_m=parse_angle(args.theta_m),
        steps=steps,
        input=args.input,
        workers=args.workers,
    )
    write_table(Path(args.out) / "beta_curve", QUANTUM_BETA_HEADER, points, args.format)
    _print_json([dict(zip(QUANTUM_BETA_HEADER, p, strict=True)) for p in points])
    return EXIT_OK


def cmd_regimes(args) -> int:
    table = Table(title="Walk regimes")
    for column in ("", "name", "θ_C", "θ_B", "θ_M", "input", "r", "couplings"):
        table.add_column(column)

    for name in list_regimes():
        regime = load_regime(name)
        report = coupling_report(regime["theta_b"], regime["theta_c"], regime["theta_m"])
        couplings = ", ".join(
            label
            for label, on in (
                ("coin", report.coin_couples_all),
                ("memory", report.memory_couples_position),
                ("step", report.step_couples_position_coin),
            )
            if on
        )
        preset = REGIME_PRESETS[name]
        table.add_row(
            preset.get("icon", ""),
            name,
            preset["theta_c"],
            preset["theta_b"],
            preset["theta_m"],
            preset["input"],
            f"{reflectivity(regime['theta_b']):.3f}",
            couplings,
        )
    Console().print(table)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="saqwalk", description="Self-avoiding quantum walks and their classical analogue."
    )
    noise = parser.add_mutually_exclusive_group()
    noise.add_argument("--verbose", action="store_true", help="log per-step detail")
    noise.add_argument("--quiet", action="store_true", help="warnings and errors only")
    parser.add_argument(
        "--profile", action="store_true", help="write a cProfile dump to logs/ for snakeviz"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def _outputs(p, default_out):
        p.add_argument("--out", default=default_out, help="output directory")
        p.add_argument("--format", choices=("csv", "json"), default="csv")

    run = sub.add_parser("run", help="evolve one walk")
    run.add_argument("--regime", choices=list_regimes())
    run.add_argument("--theta-c")
    run.add_argument("--theta-b")
    run.add_argument("--theta-m")
    run.add_argument("--steps", type=int)
    run.add_argument("--input", choices=[k.value for k in InputKind])
    run.add_argument("--prune", type=float, default=0.0, help="drop |amp| below this")
    run.add_argument("--keep-states", action="store_true")
    _outputs(run, "results/run")
    run.set_defaults(func=cmd_run)

    sw = sub.add_parser("sweep", help="final variance over a (theta_M, theta_B) grid")
    sw.add_argument("--theta-c", default="pi/4")
    sw.add_argument("--steps", type=int, default=default_sweep_params["steps"])
    sw.add_argument("--input", choices=[k.value for k in InputKind], default="sym")
    sw.add_argument("--grid-m", default=default_sweep_params["grid_m"])
    sw.add_argument("--grid-b", default=default_sweep_params["grid_b"])
    sw.add_argument("--workers", type=int, default=default_sweep_params["workers"])
    _outputs(sw, "results/sweep")
    sw.set_defaults(func=cmd_sweep)

    cl = sub.add_parser("classical", help="classical self-avoiding walk ensemble")
    cl.add_argument("--g", type=float, default=default_saw_params["g"])
    cl.add_argument(
        "--g-grid",
        nargs="?",
        const=default_saw_params["g_grid"],
        help="comma-separated g values (bare flag: the default grid); writes beta.csv "
        "and one series_g<index> file per g",
    )
    cl.add_argument("--steps", type=int, default=default_saw_params["steps"])
    cl.add_argument("--reps", type=int, default=default_saw_params["replicates"])
    cl.add_argument("--seed", type=int, default=default_saw_params["seed"])
    cl.add_argument(
        "--mod2",
        action=argparse.BooleanOptionalAction,
        default=default_saw_params["mod2"],
        help="count visits modulo 2",
    )
    cl.add_argument("--workers", type=int, default=default_saw_params["workers"])
    _outputs(cl, "results/classical")
    cl.set_defaults(func=cmd_classical)

    fit = sub.add_parser("fit", help="fit an existing t,mean,variance file")
    fit.add_argument("series", type=Path)
    fit.set_defaults(func=cmd_fit)

    bc = sub.add_parser("beta-curve", help="quantum beta versus theta_B")
    bc.add_argument("--theta-c", default="pi/4")
    bc.add_argument("--theta-m", default="pi/2")
    bc.add_argument("--steps", type=int, default=default_beta_curve_params["steps"])
    bc.add_argument("--input", choices=[k.value for k in InputKind], default="sym")
    bc.add_argument("--grid-b", default=default_beta_curve_params["grid_b"])
    bc.add_argument("--workers", type=int, default=1)
    _outputs(bc, "results/beta_curve")
    bc.set_defaults(func=cmd_beta_curve)

    rg = sub.add_parser("regimes", help="list the named parameter presets")
    rg.set_defaults(func=cmd_regimes)

    return parser


def _dispatch(args) -> int:
    try:
        return args.func(args)
    except SeriesFormatError as e:
        logger.error(f"❌ {e}")
        return EXIT_PARSE
    except DegenerateSeriesError as e:
        logger.error(f"❌ {e}")
        return EXIT_DEGENERATE
    except WalkError as e:
        logger.error(f"❌ {e}")
        return EXIT_INVALID
    except OSError as e:
        logger.error(f"❌ Cannot write output: {e}")
        return EXIT_IO


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.verbose:
        set_log_level(logging.DEBUG)
    elif args.quiet:
        set_log_level(logging.WARNING)

    if not args.profile:
        return _dispatch(args)

    profiler = cProfile.Profile()
    status = profiler.runcall(_dispatch, args)
    dump = LOGS_DIR / f"{args.command}.prof"
    profiler.dump_stats(dump)
    logger.info(f"Profile written to {dump}; view it with `snakeviz {dump}`")
    return status


if __name__ == "__main__":
    sys.exit(main())
