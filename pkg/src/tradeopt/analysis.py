"""What-if instrumentation over the one-period solver.

Three tools for decision review: finite-difference parameter sensitivities
(kept independent of the solver algebra on purpose, so they double as a
cross-check of the closed forms), inversion of the optimality condition to
recover the price ratio a decision-maker implicitly used, and side-by-side
scenario comparison against a pinned baseline.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Sequence

from .errors import (
    CornerObservationError,
    InvalidParameterNameError,
    OffFrontierObservationError,
    StepOutOfRangeError,
)
from .model import Allocation, PossibilityFrontier, StaticScenario
from .static import StaticSolution, solve_static

__all__ = [
    "SensitivityEstimate",
    "ComparisonRow",
    "ScenarioComparison",
    "SENSITIVITY_PARAMETERS",
    "sensitivity",
    "infer_valuation_ratio",
    "compare_scenarios",
]

SENSITIVITY_PARAMETERS = ("a", "b", "c", "p_life", "p_job")

# Observations further off the frontier than this (relative to c) cannot be
# inverted for an implied valuation.
ON_FRONTIER_TOLERANCE = 1e-6


@dataclass(frozen=True)
class SensitivityEstimate:
    """Central-difference derivatives of the optimum w.r.t. one parameter."""

    parameter: str
    relative_step: float
    d_lives: float
    d_jobs: float
    d_z: float


@dataclass(frozen=True)
class ComparisonRow:
    label: str
    solution: StaticSolution
    delta_lives: float
    delta_jobs: float
    delta_z: float


@dataclass(frozen=True)
class ScenarioComparison:
    base: StaticSolution
    rows: tuple[ComparisonRow, ...]


def _with_parameter(scenario: StaticScenario, name: str, value: float) -> StaticScenario:
    if name in ("a", "b", "c"):
        return replace(scenario, frontier=replace(scenario.frontier, **{name: value}))
    return replace(scenario, valuation=replace(scenario.valuation, **{name: value}))


def sensitivity(
    scenario: StaticScenario, parameter_name: str, relative_step: float = 1e-6
) -> SensitivityEstimate:
    """Estimate d(lives*)/dp, d(jobs*)/dp and dz*/dp by central differences.

    The step is relative: the parameter p is evaluated at p*(1 +/- h).
    For the constraint level c, the z derivative is the shadow price, so
    the estimate must agree with the reported multiplier to ~1e-4.

    Raises:
        InvalidParameterNameError: unknown ``parameter_name``.
        StepOutOfRangeError: ``relative_step`` outside (0, 0.1], or the
            parameter is zero so a relative step cannot perturb it.
    """
    if parameter_name not in SENSITIVITY_PARAMETERS:
        raise InvalidParameterNameError(
            f"parameter must be one of {SENSITIVITY_PARAMETERS}, got {parameter_name!r}",
            path="parameter",
        )
    if not 0 < relative_step <= 0.1:
        raise StepOutOfRangeError(
            f"relative_step must be in (0, 0.1], got {relative_step!r}",
            path="relative_step",
        )
    if parameter_name in ("a", "b", "c"):
        value = getattr(scenario.frontier, parameter_name)
    else:
        value = getattr(scenario.valuation, parameter_name)
    if value == 0:
        raise StepOutOfRangeError(
            f"a relative step cannot perturb {parameter_name} = 0",
            path="parameter",
        )

    step = value * relative_step
    upper = solve_static(_with_parameter(scenario, parameter_name, value + step))
    lower = solve_static(_with_parameter(scenario, parameter_name, value - step))
    span = 2.0 * step
    return SensitivityEstimate(
        parameter=parameter_name,
        relative_step=relative_step,
        d_lives=(upper.allocation.lives_saved - lower.allocation.lives_saved) / span,
        d_jobs=(upper.allocation.jobs_saved - lower.allocation.jobs_saved) / span,
        d_z=(upper.z_star - lower.z_star) / span,
    )


def infer_valuation_ratio(
    frontier: PossibilityFrontier, observed: Allocation
) -> float:
    """Invert the optimality condition: the p_life/p_job ratio that makes
    ``observed`` the optimum of ``frontier``.

    Raises:
        CornerObservationError: observation on an axis; corner optima are
            consistent with every sufficiently extreme price ratio, so no
            single ratio is identified.
        OffFrontierObservationError: observation not on the frontier within
            ``ON_FRONTIER_TOLERANCE`` (the constraint residual is attached).
    """
    lives, jobs = observed.lives_saved, observed.jobs_saved
    if lives == 0 or jobs == 0:
        raise CornerObservationError(
            "observed allocation must be strictly interior to identify a ratio",
            path="observed",
        )
    residual = frontier.residual(lives, jobs) / frontier.c
    if abs(residual) > ON_FRONTIER_TOLERANCE:
        raise OffFrontierObservationError(
            f"observed allocation is off the frontier "
            f"(relative residual {residual:.3e})",
            residual=residual,
            path="observed",
        )
    return (frontier.a * lives) / (frontier.b * jobs)


def compare_scenarios(
    base: StaticScenario, variants: Sequence[tuple[str, StaticScenario]]
) -> ScenarioComparison:
    """Solve the base and every variant independently and report deltas.

    Each delta is an exact difference of two full solves; nothing is
    computed incrementally.
    """
    base_solution = solve_static(base)
    rows = []
    for label, variant in variants:
        solution = solve_static(variant)
        rows.append(
            ComparisonRow(
                label=label,
                solution=solution,
                delta_lives=solution.allocation.lives_saved
                - base_solution.allocation.lives_saved,
                delta_jobs=solution.allocation.jobs_saved
                - base_solution.allocation.jobs_saved,
                delta_z=solution.z_star - base_solution.z_star,
            )
        )
    return ScenarioComparison(base=base_solution, rows=tuple(rows))
