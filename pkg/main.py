#!/usr/bin/env python3
"""
Besov Ill-Posedness Lab - Experiment CLI

Builds the lacunary initial data, evolves it with the pseudo-spectral Euler
solver and writes structured reports for each quantitative step of the
norm-inflation argument.

Example Usage:
    python main.py verify-lemma --n 3 4 5
    python main.py remainder-scaling --t 0.001 0.002 0.004 --format csv --out rem.csv
    python main.py inflation --eps 0.1 --n 1 2 3 --check
    python main.py all --out reports/ --format json

Thread count is read from BESOV_LAB_THREADS (default 1).
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional

logging.basicConfig(
    level=logging.INFO,
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
    handlers=[logging.StreamHandler(sys.stderr)]
)
logger = logging.getLogger("besov_lab")

EXPERIMENTS = ("verify-lemma", "remainder-scaling", "inflation")


def _build_params(args: argparse.Namespace, defaults: Dict[str, Any]):
    from src.construction.params import ConstructionParams
    from src.spectral.grid import make_grid

    grid = make_grid(int(defaults["grid_N"]), float(defaults["domain_L"]))
    return ConstructionParams(
        sigma=float(defaults["sigma"]),
        p=float(defaults["p"]),
        k=int(defaults["k"]),
        J=int(defaults["J"]),
        grid=grid,
    )


def _build_solver_config(args: argparse.Namespace, params, eps: Optional[float] = None):
    """SolverConfig with dt from --dt or min(dt_cap, CFL/4) of the initial data."""
    from src.construction.packets import make_u0
    from src.foundation.model_config import get_solver_params
    from src.simulation.euler_solver import SolverConfig, choose_dt

    solver = get_solver_params({"T": args.T})
    dt = args.dt
    if dt is None:
        dt = choose_dt(make_u0(params), float(solver["dt_cap"]), float(solver["cfl_safety"]))
        if eps:
            # at least four steps inside the shortest t_n
            dt = min(dt, eps * 2.0 ** (-params.k * params.J) / 4.0)
    return SolverConfig(
        dt=float(dt),
        T=float(solver["T"]),
        dealias=float(solver["dealias"]),
        diagnostics_every=int(solver["diagnostics_every"]),
        cfl_safety=float(solver["cfl_safety"]),
    )


def default_n_list(requested: Optional[List[int]], configured: List[int], J: int) -> List[int]:
    """Block indices for verify-lemma and inflation.

    Explicit ``--n`` values pass through unchanged so the harness rejects any
    outside 0..J. Otherwise the configured ``n_list`` is cut to n <= J, falling
    back to the top block when nothing is left.
    """
    if requested:
        return list(requested)
    kept = [int(n) for n in configured if int(n) <= J]
    return kept or [J]


def _runner(experiment: str, args: argparse.Namespace, defaults: Dict[str, Any]) -> Callable:
    """Closure running ``experiment`` for a given ConstructionParams."""
    from src.validation import inflation, remainder_scaling, verify_lemma

    j_min = int(defaults["j_min_homog"])
    seed = int(defaults["seed"])

    if experiment == "verify-lemma":
        def run(params):
            n_list = default_n_list(args.n, defaults["n_list"], params.J)
            return verify_lemma(params, n_list, j_min_homog=j_min, seed=seed)
        return run

    if experiment == "remainder-scaling":
        if args.t:
            t_list = [float(t) for t in args.t]
        elif args.T is not None:
            t_list = [args.T * 2.0 ** (-i) for i in (3, 2, 1, 0)]
        else:
            t_list = [float(t) for t in defaults["t_list"]]

        def run(params):
            cfg = _build_solver_config(args, params)
            return remainder_scaling(params, t_list, cfg, j_min_homog=j_min, seed=seed)
        return run

    eps = float(defaults["eps"])

    def run(params):
        cfg = _build_solver_config(args, params, eps=eps)
        n_list = default_n_list(args.n, defaults["n_list"], params.J)
        return inflation(params, eps, n_list, cfg, j_min_homog=j_min, seed=seed)
    return run


def _output_path(args: argparse.Namespace, experiment: str) -> Optional[Path]:
    if args.out is None:
        return None
    if args.command == "all":
        return Path(args.out) / f"{experiment}.{args.format}"
    return Path(args.out)


def run_experiment(experiment: str, args: argparse.Namespace) -> bool:
    """Run one experiment, emit its report and return whether its checks passed."""
    from src.foundation.errors import ConfigurationError
    from src.foundation.model_config import get_check_thresholds, get_experiment_defaults, load_settings
    from src.utilities.data_logging import log_experiment_run
    from src.utilities.output_formatter import emit, format_summary, report_frame
    from src.validation import apply_checks, sensitivity_sweep

    defaults = get_experiment_defaults(
        {
            "sigma": args.sigma,
            "p": args.p,
            "k": args.k,
            "J": args.J,
            "grid_N": args.grid_N,
            "domain_L": args.domain_L,
            "eps": args.eps,
        }
    )
    params = _build_params(args, defaults)
    logger.info(
        f"Running {experiment}: sigma={params.sigma} p={params.p} k={params.k} "
        f"J={params.J} N={params.grid.N} L={params.grid.L:.6g}"
    )
    run = _runner(experiment, args, defaults)
    report = run(params)

    if args.sensitivity:
        report = report.model_copy(update={"sensitivity": sensitivity_sweep(run, params, report)})
    if args.check:
        report = apply_checks(report, get_check_thresholds())

    out = _output_path(args, experiment)
    if out is not None:
        emit(report, args.format, out, column=args.column)
        print(format_summary(report))
    elif args.format == "json":
        print(report.to_json())
    elif args.format == "csv":
        print(report_frame(report).to_csv(index=False), end="")
    else:
        raise ConfigurationError("--format svg needs --out", field="out")

    log_experiment_run(
        report,
        output_path=str(out) if out else None,
        directory=load_settings()["runtime"].get("log_dir"),
    )
    return report.all_checks_passed if args.check else True


def _add_common_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--sigma", type=float, default=None, help="Regularity sigma (> 1 + 2/p)")
    sub.add_argument("--p", type=float, default=None, help="Integrability exponent p >= 1")
    sub.add_argument("--k", type=int, default=None, help="Lacunarity step k >= 1")
    sub.add_argument("--J", type=int, default=None, help="Number of packets beyond f_0")
    sub.add_argument("--n", type=int, nargs="+", default=None, help="Block indices n")
    sub.add_argument("--t", type=float, nargs="+", default=None, help="Times for remainder-scaling")
    sub.add_argument("--eps", type=float, default=None, help="Inflation time scale eps >= 0")
    sub.add_argument("--grid-N", dest="grid_N", type=int, default=None, help="Grid points per axis")
    sub.add_argument("--domain-L", dest="domain_L", type=float, default=None,
                     help="Period L (default 24*pi)")
    sub.add_argument("--dt", type=float, default=None, help="Time step (default min(dt_cap, CFL/4))")
    sub.add_argument("--T", type=float, default=None, help="Final time of the solver")
    sub.add_argument("--out", default=None,
                     help="Output path (a directory for 'all'); stdout JSON if omitted")
    sub.add_argument("--format", choices=("json", "csv", "svg"), default="json",
                     help="Report format (default: json)")
    sub.add_argument("--column", default=None, help="Column plotted by --format svg")
    sub.add_argument("--check", action="store_true",
                     help="Apply configured thresholds; exit 1 on failure")
    sub.add_argument("--sensitivity", action="store_true",
                     help="Re-run at N/2 and (2N, 2L) and record the headline change")
    sub.add_argument("--verbose", action="store_true", help="Debug logging")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description="Besov Ill-Posedness Lab - Euler norm-inflation experiments",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  python main.py verify-lemma --n 3 4 5 --check
  python main.py remainder-scaling --grid-N 1024 --J 4 --format svg --out rem.svg
  python main.py inflation --eps 0.05 --n 2 3 4
  python main.py all --out reports/ --format csv

For programmatic usage:

  from src.validation import verify_lemma
  report = verify_lemma(params, [3, 4, 5])
"""
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    for name, help_text in (
        ("verify-lemma", "Divergence, Besov plateau, block identities and lower bound"),
        ("remainder-scaling", "t-scaling of the departure and of the Taylor remainder"),
        ("inflation", "B^sigma norm of S_t(u0) - u0 along t_n = eps 2^{-kn}"),
        ("all", "Run all three experiments"),
    ):
        _add_common_flags(subparsers.add_parser(name, help=help_text))
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point. Returns the process exit code."""
    from src.contracts.schemas import ErrorResponse
    from src.foundation.errors import LabError

    args = build_parser().parse_args(argv)
    if args.verbose:
        logging.getLogger().setLevel(logging.DEBUG)

    experiments = EXPERIMENTS if args.command == "all" else (args.command,)
    passed = True
    try:
        for experiment in experiments:
            passed = run_experiment(experiment, args) and passed
    except LabError as exc:
        logger.error(f"{exc.error_code}: {exc.message}")
        print(ErrorResponse(**exc.to_dict()).model_dump_json(), file=sys.stderr)
        return 2
    return 0 if passed else 1


if __name__ == "__main__":
    sys.exit(main())
