"""Plain-dict result documents shared by the CLI and the HTTP service.

Both front ends serialize these dicts with ``json.dumps``, so a scenario
produces byte-identical numbers whichever way it is solved. Raw solver
values are kept unscaled; ``*_scaled`` fields multiply by the scenario's
``unit_scale`` for display (e.g. allocation units of millions turn a
per-unit z into a currency total).
"""

from __future__ import annotations

from .analysis import SensitivityEstimate, infer_valuation_ratio, sensitivity
from .dynamic import (
    ChainScenario,
    DynamicScenario,
    chain_subproblems,
    solve_dynamic,
    verify_kkt_dynamic,
)
from .errors import ZeroPriceError
from .model import (
    Allocation,
    PossibilityFrontier,
    ShiftSpec,
    StaticScenario,
    apply_shift,
    intercepts,
    trace_arrays,
)
from .oracle import DEFAULT_SWEEP_POINTS, oracle_dynamic, oracle_static
from .scenario_io import DiscreteProblem, InferenceProblem
from .static import enumerate_discrete, optimality_ratio, solve_static, verify_kkt

__all__ = [
    "static_report",
    "dynamic_report",
    "chain_report",
    "enumeration_report",
    "trace_report",
    "sensitivity_report",
    "infer_report",
    "shift_report",
    "tangent_segment",
]


def _allocation(a: Allocation) -> dict:
    return {"lives_saved": a.lives_saved, "jobs_saved": a.jobs_saved}


def _frontier(f: PossibilityFrontier) -> dict:
    return {"a": f.a, "b": f.b, "c": f.c}


def tangent_segment(scenario: StaticScenario, z_star: float) -> list[dict]:
    """Endpoints of the objective level line through the optimum.

    This is the line every point of which yields exactly ``z_star``; it
    touches the frontier only at the optimum. Degenerate prices make it
    horizontal or vertical, clipped to the frontier's bounding box.
    """
    p_life, p_job = scenario.valuation.p_life, scenario.valuation.p_job
    lives_max, jobs_max = intercepts(scenario.frontier)
    if p_life > 0 and p_job > 0:
        ends = [(z_star / p_life, 0.0), (0.0, z_star / p_job)]
    elif p_life == 0:
        ends = [(0.0, z_star / p_job), (lives_max, z_star / p_job)]
    else:
        ends = [(z_star / p_life, 0.0), (z_star / p_life, jobs_max)]
    return [{"lives_saved": l, "jobs_saved": j} for l, j in ends]


def _static_kkt_dict(kkt) -> dict:
    return {
        "stationarity_lives": kkt.stationarity_lives,
        "stationarity_jobs": kkt.stationarity_jobs,
        "feasibility": kkt.feasibility,
        "multiplier_nonnegative": kkt.multiplier_nonnegative,
        "max_residual": kkt.max_residual,
        "passed": kkt.passed,
    }


def static_report(
    scenario: StaticScenario,
    unit_scale: float | None = None,
    verify: bool = False,
    oracle_points: int = DEFAULT_SWEEP_POINTS,
) -> dict:
    scale = scenario.unit_scale if unit_scale is None else unit_scale
    solution = solve_static(scenario)
    kkt = verify_kkt(scenario, solution)
    try:
        ratio = optimality_ratio(scenario)
    except ZeroPriceError:
        ratio = None
    report = {
        "kind": "static",
        "unit_scale": scale,
        "solution": {
            "allocation": _allocation(solution.allocation),
            "multiplier": solution.multiplier,
            "z_star": solution.z_star,
            "z_star_scaled": solution.z_star * scale,
        },
        "optimality_ratio": ratio,
        "tangent": tangent_segment(scenario, solution.z_star),
        "diagnostics": {"kkt": _static_kkt_dict(kkt)},
    }
    if verify:
        sweep = oracle_static(scenario.frontier, scenario.valuation, oracle_points)
        report["diagnostics"]["oracle"] = {
            "best_z": sweep.best_z,
            "best_allocation": _allocation(sweep.best_allocation),
            "n_points": sweep.n_points,
            "gap": solution.z_star - sweep.best_z,
            "relative_gap": (solution.z_star - sweep.best_z) / solution.z_star
            if solution.z_star
            else 0.0,
        }
    return report


def dynamic_report(
    scenario: DynamicScenario,
    unit_scale: float = 1.0,
    verify: bool = False,
    oracle_points: int = DEFAULT_SWEEP_POINTS,
) -> dict:
    solution = solve_dynamic(scenario)
    kkt = verify_kkt_dynamic(scenario, solution)
    ratios: list[float | None] = [None, None]
    if scenario.p_job_2 > 0:
        ratios[0] = (
            scenario.constraint2.b
            * (1.0 + scenario.discount_rate)
            * scenario.p_life_1
            / (scenario.constraint2.a * scenario.p_job_2)
        )
    if scenario.p_job_1 > 0:
        ratios[1] = (
            scenario.constraint1.b
            * scenario.p_life_2
            / (scenario.constraint1.a * (1.0 + scenario.discount_rate) * scenario.p_job_1)
        )
    report = {
        "kind": "dynamic",
        "unit_scale": unit_scale,
        "solution": {
            "allocations": {
                "lives_1": solution.allocations.lives_1,
                "jobs_1": solution.allocations.jobs_1,
                "lives_2": solution.allocations.lives_2,
                "jobs_2": solution.allocations.jobs_2,
            },
            "multipliers": list(solution.multipliers),
            "z_star": solution.z_star,
            "z_star_scaled": solution.z_star * unit_scale,
        },
        "optimality_ratios": ratios,
        "diagnostics": {
            "kkt": {
                "stationarity_lives_1": kkt.stationarity_lives_1,
                "stationarity_jobs_1": kkt.stationarity_jobs_1,
                "stationarity_lives_2": kkt.stationarity_lives_2,
                "stationarity_jobs_2": kkt.stationarity_jobs_2,
                "feasibility_1": kkt.feasibility_1,
                "feasibility_2": kkt.feasibility_2,
                "multipliers_nonnegative": kkt.multipliers_nonnegative,
                "max_residual": kkt.max_residual,
                "passed": kkt.passed,
            }
        },
    }
    if verify:
        _, total = oracle_dynamic(scenario, oracle_points)
        report["diagnostics"]["oracle"] = {
            "best_z": total,
            "n_points": oracle_points,
            "gap": solution.z_star - total,
            "relative_gap": (solution.z_star - total) / solution.z_star
            if solution.z_star
            else 0.0,
        }
    return report


def chain_report(
    chain: ChainScenario,
    unit_scale: float = 1.0,
    verify: bool = False,
    oracle_points: int = DEFAULT_SWEEP_POINTS,
) -> dict:
    subproblems = chain_subproblems(chain)
    solutions = [solve_static(sub) for sub in subproblems]
    z_total = sum(sol.z_star for sol in solutions)
    rows = []
    kkt_rows = []
    for constraint, sub, sol in zip(chain.constraints, subproblems, solutions):
        rows.append(
            {
                "lives_period": constraint.lives_period,
                "jobs_period": constraint.jobs_period,
                "allocation": _allocation(sol.allocation),
                "multiplier": sol.multiplier,
                "z_star": sol.z_star,
            }
        )
        kkt_rows.append(_static_kkt_dict(verify_kkt(sub, sol)))
    report = {
        "kind": "chain",
        "unit_scale": unit_scale,
        "solution": {
            "per_constraint": rows,
            "z_total": z_total,
            "z_total_scaled": z_total * unit_scale,
        },
        "diagnostics": {"kkt": kkt_rows},
    }
    if verify:
        best_total = sum(
            oracle_static(sub.frontier, sub.valuation, oracle_points).best_z
            for sub in subproblems
        )
        report["diagnostics"]["oracle"] = {
            "best_z": best_total,
            "n_points": oracle_points,
            "gap": z_total - best_total,
            "relative_gap": (z_total - best_total) / z_total if z_total else 0.0,
        }
    return report


def enumeration_report(problem: DiscreteProblem, unit_scale: float = 1.0) -> dict:
    result = enumerate_discrete(problem.points, problem.valuation)
    return {
        "kind": "discrete",
        "unit_scale": unit_scale,
        "rows": [
            {
                "lives_saved": row.allocation.lives_saved,
                "jobs_saved": row.allocation.jobs_saved,
                "z": row.z,
                "z_scaled": row.z * unit_scale,
            }
            for row in result.rows
        ],
        "best_index": result.best_index,
        "best": {
            "lives_saved": result.best.allocation.lives_saved,
            "jobs_saved": result.best.allocation.jobs_saved,
            "z": result.best.z,
            "z_scaled": result.best.z * unit_scale,
        },
        "tied": result.tied,
    }


def trace_report(frontier: PossibilityFrontier, n_points: int) -> dict:
    theta, lives, jobs = trace_arrays(frontier, n_points)
    lives_max, jobs_max = intercepts(frontier)
    return {
        "frontier": _frontier(frontier),
        "n": int(n_points),
        "intercepts": {"lives": lives_max, "jobs": jobs_max},
        "points": [
            {"theta": t, "lives_saved": l, "jobs_saved": j}
            for t, l, j in zip(theta.tolist(), lives.tolist(), jobs.tolist())
        ],
    }


def sensitivity_report(
    scenario: StaticScenario, parameter: str, relative_step: float = 1e-6
) -> dict:
    estimate: SensitivityEstimate = sensitivity(scenario, parameter, relative_step)
    return {
        "parameter": estimate.parameter,
        "relative_step": estimate.relative_step,
        "d_lives": estimate.d_lives,
        "d_jobs": estimate.d_jobs,
        "d_z": estimate.d_z,
    }


def infer_report(problem: InferenceProblem) -> dict:
    ratio = infer_valuation_ratio(problem.frontier, problem.observed)
    return {
        "frontier": _frontier(problem.frontier),
        "observed": _allocation(problem.observed),
        "implied_price_ratio": ratio,
        "residual": problem.frontier.residual(
            problem.observed.lives_saved, problem.observed.jobs_saved
        )
        / problem.frontier.c,
    }


def shift_report(frontier: PossibilityFrontier, shift: ShiftSpec) -> dict:
    shifted = apply_shift(frontier, shift)
    lives_max, jobs_max = intercepts(shifted)
    return {
        "frontier": _frontier(frontier),
        "shift": {"kind": shift.kind, "factors": list(shift.factors)},
        "shifted": _frontier(shifted),
        "intercepts": {"lives": lives_max, "jobs": jobs_max},
    }
