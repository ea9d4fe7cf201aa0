"""Command-line front end.

Subcommands::

    detsearch plan  --p 0.375
    detsearch run   --qubits 3 --targets 101,110,111 --mode deterministic
    detsearch sweep --start 0.01 --end 0.99 --points 99
    detsearch multi --qubits 4 --targets 0000,0001,0010

Exit codes: 0 success, 2 usage or validation error, 3 internal invariant
violation.  All numbers are written with 12 significant digits.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from . import operators, planner, simcore
from .operators import SearchProblem
from .planner import DeterministicPlan
from .search import (
    InvariantViolation,
    MultiTargetTrace,
    RunReport,
    amplitude_amplification,
    deterministic_search,
    grover_search,
    multi_target_exact_search,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INVARIANT = 3

SWEEP_HEADER = ["p", "k", "k_prime", "standard_success", "deterministic_success"]
SCHEMA_DIR = Path(__file__).with_name("schemas")


def num(x: float) -> float:
    """Round to 12 significant digits."""
    return float(f"{float(x):.12g}")


def plan_to_dict(plan: DeterministicPlan) -> dict:
    return {
        "p": num(plan.p),
        "k": num(plan.k),
        "k_prime": plan.k_prime,
        "needs_auxiliary": plan.needs_auxiliary,
        "p_prime": num(plan.p_prime),
        "phi": num(plan.phi),
        "alpha_sq": num(plan.alpha_sq),
    }


def report_to_dict(report: RunReport) -> dict:
    out = {
        "mode": report.mode.value,
        "num_qubits": report.num_qubits,
        "register_qubits": report.register_qubits,
        "targets": [simcore.bitstring(t, report.num_qubits) for t in report.targets],
        "initial_p": num(report.initial_p),
        "iterations_used": report.iterations_used,
        "plan": plan_to_dict(report.plan) if report.plan is not None else None,
        "success_probability": num(report.success_probability),
        "measured_outcome": report.measured_outcome,
        "rng_seed": report.rng_seed,
        "final_distribution": [
            {"index": i, "bitstring": simcore.bitstring(i, report.register_qubits), "probability": num(prob)}
            for i, prob in report.final_distribution
        ],
    }
    if report.snapshots:
        out["snapshots"] = [
            {
                "iteration": s.iteration,
                "stage": s.stage,
                "amplitudes": [[num(a.real), num(a.imag)] for a in s.amplitudes],
            }
            for s in report.snapshots
        ]
    return out


def trace_to_dict(trace: MultiTargetTrace) -> dict:
    first = trace.executions[0][1]
    return {
        "num_qubits": first.num_qubits,
        "targets": [simcore.bitstring(t, first.num_qubits) for t in first.targets],
        "executions": [
            {
                "found": bits,
                "remaining_before": [simcore.bitstring(t, first.num_qubits) for t in sorted(remaining)],
                "report": report_to_dict(report),
            }
            for (bits, report), remaining in zip(trace.executions, trace.remaining_before_each)
        ],
    }


def load_schema(name: str) -> dict:
    return json.loads((SCHEMA_DIR / f"{name}.schema.json").read_text())


def load_amplitudes(path: str | Path) -> simcore.StateVector:
    """Read a JSON array of ``[real, imag]`` pairs."""
    try:
        raw = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise ValueError(f"cannot read amplitude file {path}: {exc}") from exc
    if not isinstance(raw, list) or not all(
        isinstance(pair, list) and len(pair) == 2 and all(isinstance(v, (int, float)) for v in pair)
        for pair in raw
    ):
        raise ValueError("amplitude file must be a JSON array of [real, imag] pairs")
    return simcore.from_amplitudes([complex(re, im) for re, im in raw])


def sweep_rows(start: float, end: float, points: int, num_qubits: int = 4, seed: int = 0) -> list[list[float]]:
    """Closed-form standard success next to simulated deterministic success."""
    if not (0.0 < start < end < 1.0):
        raise ValueError(f"sweep grid needs 0 < start < end < 1, got start={start}, end={end}")
    if points < 2:
        raise ValueError(f"sweep needs at least 2 points, got {points}")
    rows = []
    for p in np.linspace(start, end, points):
        p = float(p)
        std = planner.predicted_success(p, planner.standard_iterations(p))
        state = operators.state_with_target_mass(p, num_qubits, targets=[0])
        report = deterministic_search(SearchProblem(num_qubits, [0], state), seed=seed)
        rows.append([p, planner.compute_k(p), report.iterations_used, std, report.success_probability])
    return rows


def _parse_targets(text: str) -> list[str]:
    return [t.strip() for t in text.split(",") if t.strip()]


def _problem_from_args(args) -> SearchProblem:
    initial = load_amplitudes(args.amplitudes) if args.amplitudes else None
    return SearchProblem(args.qubits, _parse_targets(args.targets), initial)


def _json_text(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _csv_text(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([num(v) if isinstance(v, float) else v for v in row])
    return buf.getvalue()


def cmd_plan(args) -> str:
    plan = planner.make_plan(args.p, args.tolerance)
    data = plan_to_dict(plan)
    if args.format == "csv":
        return _csv_text(list(data), [list(data.values())])
    return _json_text(data)


def cmd_run(args) -> str:
    problem = _problem_from_args(args)
    if args.mode == "deterministic":
        if args.iterations is not None:
            raise ValueError("--iterations applies to standard mode only")
        report = deterministic_search(problem, seed=args.seed, trace=args.trace)
    else:
        iterations = args.iterations
        if iterations is None:
            iterations = planner.standard_iterations(problem.p)
        if problem.is_uniform:
            report = grover_search(problem, iterations, seed=args.seed, trace=args.trace)
        else:
            report = amplitude_amplification(problem, iterations, seed=args.seed, trace=args.trace)
    if args.format == "csv":
        rows = [[i, simcore.bitstring(i, report.register_qubits), prob] for i, prob in report.final_distribution]
        return _csv_text(["index", "bitstring", "probability"], rows)
    return _json_text(report_to_dict(report))


def cmd_sweep(args) -> str:
    rows = sweep_rows(args.start, args.end, args.points, num_qubits=args.qubits, seed=args.seed)
    if args.format == "json":
        return _json_text([dict(zip(SWEEP_HEADER, (num(v) if isinstance(v, float) else v for v in row))) for row in rows])
    return _csv_text(SWEEP_HEADER, rows)


def cmd_multi(args) -> str:
    trace = multi_target_exact_search(_problem_from_args(args), seed=args.seed)
    if args.format == "csv":
        rows = [
            [j, bits, report.iterations_used, report.success_probability]
            for j, (bits, report) in enumerate(trace.executions)
        ]
        return _csv_text(["execution", "found", "iterations_used", "success_probability"], rows)
    return _json_text(trace_to_dict(trace))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="detsearch", description="Deterministic quantum search simulator")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(p, default_format="json"):
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--output", "-o", help="write to this file instead of stdout")
        p.add_argument("--format", choices=["json", "csv"], default=default_format)

    p_plan = sub.add_parser("plan", help="iteration count and auxiliary-qubit angle for a given p")
    p_plan.add_argument("--p", type=float, required=True)
    p_plan.add_argument("--tolerance", type=float, default=planner.NATURAL_TOL)
    common(p_plan)
    p_plan.set_defaults(func=cmd_plan)

    p_run = sub.add_parser("run", help="simulate one search")
    p_run.add_argument("--qubits", type=int, required=True)
    p_run.add_argument("--targets", required=True, help="comma-separated big-endian bitstrings")
    p_run.add_argument("--mode", choices=["standard", "deterministic"], default="deterministic")
    p_run.add_argument("--iterations", type=int)
    p_run.add_argument("--amplitudes", help="JSON file of [real, imag] pairs for the initial state")
    p_run.add_argument("--trace", action="store_true", help="include amplitude snapshots after each step")
    common(p_run)
    p_run.set_defaults(func=cmd_run)

    p_sweep = sub.add_parser("sweep", help="standard vs deterministic success over a p grid")
    p_sweep.add_argument("--start", type=float, required=True)
    p_sweep.add_argument("--end", type=float, required=True)
    p_sweep.add_argument("--points", type=int, required=True)
    p_sweep.add_argument("--qubits", type=int, default=4, help="register size of the synthesized states")
    common(p_sweep, default_format="csv")
    p_sweep.set_defaults(func=cmd_sweep)

    p_multi = sub.add_parser("multi", help="recover every target, one per execution")
    p_multi.add_argument("--qubits", type=int, required=True)
    p_multi.add_argument("--targets", required=True)
    p_multi.add_argument("--amplitudes")
    common(p_multi)
    p_multi.set_defaults(func=cmd_multi)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        text = args.func(args)
    except InvariantViolation as exc:
        print(f"detsearch: invariant violation: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except ValueError as exc:
        print(f"detsearch: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
