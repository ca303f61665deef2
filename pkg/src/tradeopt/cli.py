"""Command-line interface over scenario files.

    tradeopt solve PATH [--json] [--verify] [--trace N] [--trace-out FILE]
    tradeopt enumerate PATH [--json]
    tradeopt sensitivity PATH --param NAME [--step X] [--json]
    tradeopt infer PATH [--json]
    tradeopt serve [--host H] [--port P]

Exit codes: 0 success, 2 validation error (schema or domain, with a dotted
field path), 3 I/O error. ``--json`` emits the same documents the HTTP
service returns, at full precision; the default text output rounds
allocations and ratios to 4 decimals.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from pathlib import Path

from . import __version__
from .errors import TradeoffError
from .oracle import DEFAULT_SWEEP_POINTS
from .reports import (
    chain_report,
    dynamic_report,
    enumeration_report,
    infer_report,
    sensitivity_report,
    static_report,
    tangent_segment,
    trace_report,
)
from .scenario_io import ScenarioFile, parse_scenario_file
from .static import solve_static

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_IO = 3


def _fail(message: str, code: int) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


class _IoProblem(Exception):
    pass


def _load_scenario(path: str) -> ScenarioFile:
    try:
        raw = Path(path).read_text()
    except OSError as err:
        raise _IoProblem(str(err)) from err
    try:
        document = json.loads(raw)
    except json.JSONDecodeError as err:
        raise TradeoffError(f"{path} is not valid JSON: {err}") from err
    return parse_scenario_file(document)


def _format_error(err: TradeoffError) -> str:
    if err.path:
        return f"{err.message} [{err.code} at {err.path}]"
    return f"{err.message} [{err.code}]"


def _print_kkt(kkt: dict) -> None:
    residuals = ", ".join(
        f"{key}={value:.2e}"
        for key, value in kkt.items()
        if isinstance(value, float)
    )
    print(f"KKT residuals: {residuals}")
    print(f"KKT check: {'PASS' if kkt['passed'] else 'FAIL'}")


def _print_oracle(oracle: dict) -> None:
    print(
        f"Oracle sweep ({oracle['n_points']} points): best z = {oracle['best_z']:.6e}, "
        f"relative gap = {oracle['relative_gap']:.3e}"
    )


def _render_static(report: dict) -> None:
    solution = report["solution"]
    alloc = solution["allocation"]
    print("Optimal allocation:")
    print(f"  lives saved  {alloc['lives_saved']:.4f}")
    print(f"  jobs saved   {alloc['jobs_saved']:.4f}")
    print(f"Shadow price (per unit of frontier level): {solution['multiplier']:.4f}")
    if report["optimality_ratio"] is not None:
        print(f"Optimality ratio (lives/jobs): {report['optimality_ratio']:.4f}")
    print(f"Maximized benefit z*: {solution['z_star']:.4e}")
    if report["unit_scale"] != 1.0:
        print(f"  scaled by unit_scale {report['unit_scale']:g}: {solution['z_star_scaled']:.4e}")
    _print_kkt(report["diagnostics"]["kkt"])
    if "oracle" in report["diagnostics"]:
        _print_oracle(report["diagnostics"]["oracle"])


def _render_dynamic(report: dict) -> None:
    alloc = report["solution"]["allocations"]
    print("Optimal allocations:")
    print(f"  lives saved, period 1  {alloc['lives_1']:.4f}")
    print(f"  jobs saved,  period 1  {alloc['jobs_1']:.4f}")
    print(f"  lives saved, period 2  {alloc['lives_2']:.4f}")
    print(f"  jobs saved,  period 2  {alloc['jobs_2']:.4f}")
    lam1, lam2 = report["solution"]["multipliers"]
    print(f"Shadow prices: constraint1 {lam1:.4f}, constraint2 {lam2:.4f}")
    first, second = report["optimality_ratios"]
    if first is not None:
        print(f"Optimality ratio lives_1/jobs_2: {first:.4f}")
    if second is not None:
        print(f"Optimality ratio lives_2/jobs_1: {second:.4f}")
    print(f"Maximized discounted benefit z*: {report['solution']['z_star']:.4e}")
    if report["unit_scale"] != 1.0:
        print(
            f"  scaled by unit_scale {report['unit_scale']:g}: "
            f"{report['solution']['z_star_scaled']:.4e}"
        )
    _print_kkt(report["diagnostics"]["kkt"])
    if "oracle" in report["diagnostics"]:
        _print_oracle(report["diagnostics"]["oracle"])


def _render_chain(report: dict) -> None:
    print("Per-constraint optima (prices discounted to present value):")
    print("  lives@t  jobs@t   lives*      jobs*       multiplier    z*")
    for row in report["solution"]["per_constraint"]:
        alloc = row["allocation"]
        print(
            f"  {row['lives_period']:>7} {row['jobs_period']:>6}  "
            f"{alloc['lives_saved']:>10.4f} {alloc['jobs_saved']:>11.4f} "
            f"{row['multiplier']:>12.4f}  {row['z_star']:.4e}"
        )
    print(f"Total discounted benefit: {report['solution']['z_total']:.4e}")
    if report["unit_scale"] != 1.0:
        print(
            f"  scaled by unit_scale {report['unit_scale']:g}: "
            f"{report['solution']['z_total_scaled']:.4e}"
        )
    all_passed = all(row["passed"] for row in report["diagnostics"]["kkt"])
    print(f"KKT check (all constraints): {'PASS' if all_passed else 'FAIL'}")
    if "oracle" in report["diagnostics"]:
        _print_oracle(report["diagnostics"]["oracle"])


def _write_trace(path: str, scenario, n_points: int) -> None:
    """Plot file: frontier polyline, the optimum, and the objective level
    line through it, as tab-separated (theta, lives, jobs, z) rows.

    Tangent rows reuse the theta column for a 0..1 segment parameter; each
    tangent row's z equals z* by construction (it is a level line).
    """
    solution = solve_static(scenario)
    trace = trace_report(scenario.frontier, n_points)
    valuation = scenario.valuation
    lines = ["# columns: theta\tlives\tjobs\tz", "# series: frontier"]
    for point in trace["points"]:
        z = valuation.value_of(point["lives_saved"], point["jobs_saved"])
        lines.append(
            f"{point['theta']!r}\t{point['lives_saved']!r}\t{point['jobs_saved']!r}\t{z!r}"
        )
    lines.append("# series: optimum")
    alloc = solution.allocation
    theta_star = math.atan2(
        alloc.jobs_saved / scenario.frontier.jobs_intercept,
        alloc.lives_saved / scenario.frontier.lives_intercept,
    )
    lines.append(
        f"{theta_star!r}\t{alloc.lives_saved!r}\t{alloc.jobs_saved!r}\t{solution.z_star!r}"
    )
    lines.append("# series: tangent")
    for s, end in zip((0.0, 1.0), tangent_segment(scenario, solution.z_star)):
        lines.append(
            f"{s!r}\t{end['lives_saved']!r}\t{end['jobs_saved']!r}\t{solution.z_star!r}"
        )
    Path(path).write_text("\n".join(lines) + "\n")


def _cmd_solve(args: argparse.Namespace) -> int:
    scenario_file = _load_scenario(args.path)
    kind, problem = scenario_file.kind, scenario_file.problem
    if kind == "static":
        report = static_report(
            problem,
            scenario_file.unit_scale,
            verify=args.verify,
            oracle_points=args.oracle_points,
        )
    elif kind == "dynamic":
        report = dynamic_report(
            problem,
            scenario_file.unit_scale,
            verify=args.verify,
            oracle_points=args.oracle_points,
        )
    elif kind == "chain":
        report = chain_report(
            problem,
            scenario_file.unit_scale,
            verify=args.verify,
            oracle_points=args.oracle_points,
        )
    else:
        raise TradeoffError(
            f"solve expects a static, dynamic or chain scenario, got kind={kind!r} "
            f"(use the 'enumerate' or 'infer' command)",
            path="kind",
        )

    if args.trace is not None:
        if kind != "static":
            raise TradeoffError(
                "--trace is only available for static scenarios", path="kind"
            )
        trace_out = args.trace_out or f"{args.path}.trace.tsv"
        try:
            _write_trace(trace_out, problem, args.trace)
        except OSError as err:
            raise _IoProblem(str(err)) from err
        print(f"wrote {args.trace}-point trace to {trace_out}", file=sys.stderr)

    if args.json:
        print(json.dumps(report))
    elif kind == "static":
        _render_static(report)
    elif kind == "dynamic":
        _render_dynamic(report)
    else:
        _render_chain(report)
    return EXIT_OK


def _cmd_enumerate(args: argparse.Namespace) -> int:
    scenario_file = _load_scenario(args.path)
    if scenario_file.kind != "discrete":
        raise TradeoffError(
            f"enumerate expects a discrete scenario, got kind={scenario_file.kind!r}",
            path="kind",
        )
    report = enumeration_report(scenario_file.problem, scenario_file.unit_scale)
    if args.json:
        print(json.dumps(report))
        return EXIT_OK
    print("   #  lives       jobs        z")
    for i, row in enumerate(report["rows"]):
        marker = " <- best" if i == report["best_index"] else ""
        print(
            f"  {i + 1:>2}  {row['lives_saved']:>9.4f}  {row['jobs_saved']:>9.4f}  "
            f"{row['z']:.4e}{marker}"
        )
    if report["tied"]:
        print("note: best z is tied; favoring the allocation with more lives saved")
    best = report["best"]
    print(
        f"Best allocation: ({best['lives_saved']:.4f}, {best['jobs_saved']:.4f}) "
        f"with z = {best['z']:.4e}"
        + (
            f" (scaled: {best['z_scaled']:.4e})"
            if report["unit_scale"] != 1.0
            else ""
        )
    )
    return EXIT_OK


def _cmd_sensitivity(args: argparse.Namespace) -> int:
    scenario_file = _load_scenario(args.path)
    if scenario_file.kind != "static":
        raise TradeoffError(
            f"sensitivity expects a static scenario, got kind={scenario_file.kind!r}",
            path="kind",
        )
    report = sensitivity_report(scenario_file.problem, args.param, args.step)
    if args.json:
        print(json.dumps(report))
        return EXIT_OK
    print(f"Sensitivity to {report['parameter']} (relative step {report['relative_step']:g}):")
    print(f"  d(lives*)/dp  {report['d_lives']:.6e}")
    print(f"  d(jobs*)/dp   {report['d_jobs']:.6e}")
    print(f"  d(z*)/dp      {report['d_z']:.6e}")
    return EXIT_OK


def _cmd_infer(args: argparse.Namespace) -> int:
    scenario_file = _load_scenario(args.path)
    if scenario_file.kind != "infer":
        raise TradeoffError(
            f"infer expects an infer scenario, got kind={scenario_file.kind!r}",
            path="kind",
        )
    report = infer_report(scenario_file.problem)
    if args.json:
        print(json.dumps(report))
        return EXIT_OK
    print(f"Implied p_life/p_job ratio: {report['implied_price_ratio']:.4f}")
    print(f"Constraint residual of the observation: {report['residual']:.3e}")
    return EXIT_OK


def _cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app

    host = args.host or os.environ.get("TRADEOPT_HOST", "127.0.0.1")
    port = args.port if args.port is not None else int(os.environ.get("TRADEOPT_PORT", "8000"))
    uvicorn.run(create_app(), host=host, port=port)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tradeopt",
        description="Solve lives-vs-jobs trade-off scenarios from JSON files.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="solve a static, dynamic or chain scenario")
    solve.add_argument("path")
    solve.add_argument("--json", action="store_true", help="full-precision JSON output")
    solve.add_argument(
        "--verify", action="store_true", help="run the sweep oracle and report the gap"
    )
    solve.add_argument(
        "--oracle-points",
        type=int,
        default=DEFAULT_SWEEP_POINTS,
        help="sweep density for --verify",
    )
    solve.add_argument(
        "--trace", type=int, metavar="N", help="write an N-point frontier trace (static only)"
    )
    solve.add_argument("--trace-out", metavar="FILE", help="trace output path")
    solve.set_defaults(handler=_cmd_solve)

    enumerate_ = sub.add_parser("enumerate", help="score a discrete candidate set")
    enumerate_.add_argument("path")
    enumerate_.add_argument("--json", action="store_true")
    enumerate_.set_defaults(handler=_cmd_enumerate)

    sens = sub.add_parser("sensitivity", help="finite-difference parameter sensitivity")
    sens.add_argument("path")
    sens.add_argument(
        "--param", required=True, help="one of a, b, c, p_life, p_job"
    )
    sens.add_argument("--step", type=float, default=1e-6, help="relative step size")
    sens.add_argument("--json", action="store_true")
    sens.set_defaults(handler=_cmd_sensitivity)

    infer = sub.add_parser(
        "infer", help="invert the optimality condition for an observed allocation"
    )
    infer.add_argument("path")
    infer.add_argument("--json", action="store_true")
    infer.set_defaults(handler=_cmd_infer)

    serve = sub.add_parser("serve", help="run the HTTP service")
    serve.add_argument("--host", default=None)
    serve.add_argument("--port", type=int, default=None)
    serve.set_defaults(handler=_cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except _IoProblem as err:
        return _fail(str(err), EXIT_IO)
    except TradeoffError as err:
        return _fail(_format_error(err), EXIT_VALIDATION)


if __name__ == "__main__":
    sys.exit(main())
