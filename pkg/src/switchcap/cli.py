"""Command-line entry point: capacity sweeps and verification suites.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import capacity, oracle
from .channels import depolarizing_channel
from .switch import ControlState, switch_with_fixed_control

CSV_COLUMNS = ("d", "q", "p", "chi_analytic", "chi_numeric", "entropy_control", "h_min")


@dataclass(frozen=True)
class SweepConfig:
    dims: tuple[int, ...]
    q_values: tuple[float, ...]
    p_values: tuple[float, ...] = (0.5,)
    optimizer_trials: int = 200
    seed: int = 0
    output_path: str | None = None
    format: str = "csv"

    def __post_init__(self):
        if not (self.dims and self.q_values and self.p_values):
            raise ValueError("dims, q and p lists must be nonempty")
        if any(d < 2 for d in self.dims):
            raise ValueError("dimensions must be >= 2")
        if any(not 0.0 <= v <= 1.0 for v in self.q_values + self.p_values):
            raise ValueError("q and p values must lie in [0, 1]")
        if self.format not in ("csv", "json"):
            raise ValueError(f"unknown format {self.format!r}")


def run_sweep(cfg: SweepConfig) -> list[capacity.CapacityReport]:
    """One CapacityReport per (d, q, p), in lexicographic order.

    The analytic columns are filled only at p = 1/2, where the closed form
    holds; the numeric column always comes from the ensemble optimizer.
    """
    rows = []
    for d in sorted(cfg.dims):
        for q in sorted(cfg.q_values):
            for p in sorted(cfg.p_values):
                ctrl = ControlState(p)
                dep = depolarizing_channel(d, q)
                ch = switch_with_fixed_control(dep, dep, ctrl)
                result = capacity.optimize_ensemble(
                    ch, d, trials=cfg.optimizer_trials, seed=cfg.seed
                )
                if p == 0.5:
                    analytic = capacity.holevo_analytic(d, q)
                    chi_a, hc, hm = analytic
                else:
                    chi_a, hm = None, None
                    hc = capacity.control_entropy(d, q, ctrl)
                rows.append(
                    capacity.CapacityReport(
                        d=d,
                        q=q,
                        p=p,
                        chi_analytic=chi_a,
                        chi_numeric=result.chi,
                        entropy_control=hc,
                        h_min=hm,
                        optimizer_trials=result.trials_run,
                        optimizer_refine_steps=result.refine_steps,
                        best_source=result.best_source,
                    )
                )
    return rows


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, int):
        return str(value)
    return f"{value:.12g}"


def render_csv(rows) -> str:
    lines = [",".join(CSV_COLUMNS)]
    for r in rows:
        lines.append(",".join(_fmt(getattr(r, c)) for c in CSV_COLUMNS))
    return "\n".join(lines) + "\n"


def render_json(rows) -> str:
    payload = [{c: getattr(r, c) for c in CSV_COLUMNS} for r in rows]
    return json.dumps(payload, indent=2) + "\n"


def _write(text: str, path: str | None):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _int_list(text: str) -> tuple[int, ...]:
    return tuple(int(v) for v in text.split(","))


def _float_list(text: str) -> tuple[float, ...]:
    return tuple(float(v) for v in text.split(","))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="switchcap",
        description="Quantum SWITCH of depolarizing channels: capacity sweeps "
        "and brute-force verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sweep = sub.add_parser("sweep", help="tabulate capacities over (d, q, p)")
    sweep.add_argument("--dims", type=_int_list, required=True,
                       help="comma-separated dimensions, e.g. 2,3,4")
    sweep.add_argument("--q", type=_float_list, required=True,
                       help="comma-separated noise parameters in [0,1]")
    sweep.add_argument("--p", type=_float_list, default=(0.5,),
                       help="comma-separated control weights (default 0.5)")
    sweep.add_argument("--trials", type=int, default=200,
                       help="optimizer random restarts per row")
    sweep.add_argument("--seed", type=int, default=0)
    sweep.add_argument("--out", default=None, help="output path (default stdout)")
    sweep.add_argument("--format", choices=("csv", "json"), default="csv")

    verify = sub.add_parser("verify", help="run a named comparison suite")
    verify.add_argument("suite", help=f"one of: {', '.join(oracle.SUITES)}")
    verify.add_argument("--tol", type=float, default=1e-9)
    verify.add_argument("--json", action="store_true", dest="as_json",
                        help="emit the report as JSON instead of text")
    verify.add_argument("--out", default=None, help="output path (default stdout)")
    return parser


def run_verify(suite: str, tolerance: float) -> tuple[int, oracle.ComparisonReport]:
    report = oracle.verify_equivalence(suite, tolerance)
    status = 0 if report.max_abs_deviation <= tolerance else 1
    return status, report


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.command == "sweep":
        try:
            cfg = SweepConfig(
                dims=args.dims,
                q_values=args.q,
                p_values=args.p,
                optimizer_trials=args.trials,
                seed=args.seed,
                output_path=args.out,
                format=args.format,
            )
        except ValueError as exc:
            parser.error(str(exc))  # exits 2
        rows = run_sweep(cfg)
        text = render_csv(rows) if cfg.format == "csv" else render_json(rows)
        _write(text, cfg.output_path)
        return 0

    # verify
    try:
        status, report = run_verify(args.suite, args.tol)
    except ValueError as exc:
        parser.error(str(exc))
    _write((report.to_json() if args.as_json else str(report)) + "\n", args.out)
    return status


if __name__ == "__main__":
    sys.exit(main())
