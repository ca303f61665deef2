"""Closed-form solution of the one-period trade-off problem.

Maximizing ``p_life*lives + p_job*jobs`` subject to
``a*lives**2 + b*jobs**2 = c`` has first-order conditions

    p_life - 2*a*lam*lives = 0
    p_job  - 2*b*lam*jobs  = 0
    c - a*lives**2 - b*jobs**2 = 0

which pin the allocation ratio to ``lives/jobs = b*p_life / (a*p_job)``
and admit the closed forms implemented by :func:`solve_static`. Only the
nonnegative roots are meaningful (lives and jobs are counts), and the
equality constraint always binds because the objective is strictly
increasing in both variables.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import DegenerateValuationError, EmptyPointSetError, ZeroPriceError
from .model import Allocation, StaticScenario, Valuation

__all__ = [
    "StaticSolution",
    "KktReport",
    "ScoredPoint",
    "EnumerationResult",
    "solve_static",
    "optimality_ratio",
    "verify_kkt",
    "enumerate_discrete",
]

# A solution must satisfy every first-order condition to this relative level.
KKT_PASS_TOLERANCE = 1e-6


@dataclass(frozen=True)
class StaticSolution:
    """Optimal allocation, shadow price of the constraint level, and the
    maximized monetarized benefit ``z_star = p_life*lives + p_job*jobs``."""

    allocation: Allocation
    multiplier: float
    z_star: float


@dataclass(frozen=True)
class KktReport:
    """Relative first-order-condition residuals for a candidate solution.

    Stationarity residuals are normalized by the corresponding price (or by
    the multiplier term when the price is zero), feasibility by c. A report
    passes when every residual is within ``KKT_PASS_TOLERANCE`` and the
    multiplier is nonnegative.
    """

    stationarity_lives: float
    stationarity_jobs: float
    feasibility: float
    multiplier_nonnegative: bool

    @property
    def max_residual(self) -> float:
        return max(
            abs(self.stationarity_lives),
            abs(self.stationarity_jobs),
            abs(self.feasibility),
        )

    @property
    def passed(self) -> bool:
        return self.multiplier_nonnegative and self.max_residual <= KKT_PASS_TOLERANCE


@dataclass(frozen=True)
class ScoredPoint:
    """A candidate allocation with its monetarized benefit."""

    allocation: Allocation
    z: float


@dataclass(frozen=True)
class EnumerationResult:
    """Discrete-mode output: every candidate scored, plus the argmax.

    ``tied`` is set when more than one candidate attains the best z; the
    winner is then the tied point with the most lives saved.
    """

    rows: tuple[ScoredPoint, ...]
    best_index: int
    tied: bool

    @property
    def best(self) -> ScoredPoint:
        return self.rows[self.best_index]


def solve_static(scenario: StaticScenario) -> StaticSolution:
    """Solve the one-period problem in closed form.

    When one price is zero the optimum is the corresponding corner of the
    frontier (all effort on the priced outcome); otherwise it is interior
    and the multiplier is strictly positive.

    Raises:
        DegenerateValuationError: if both prices are zero (already rejected
            by :class:`Valuation`, re-checked here for defense in depth).
    """
    a, b, c = scenario.frontier.a, scenario.frontier.b, scenario.frontier.c
    p_life, p_job = scenario.valuation.p_life, scenario.valuation.p_job
    if p_life == 0 and p_job == 0:
        raise DegenerateValuationError("p_life and p_job cannot both be zero")

    denominator = a * b * b * p_life * p_life + a * a * b * p_job * p_job
    lives = math.sqrt(b * b * c * p_life * p_life / denominator)
    jobs = math.sqrt(a * a * c * p_job * p_job / denominator)

    # Shadow price: recovered from the first-order condition of whichever
    # variable carries a positive price (both agree at the optimum).
    if p_life > 0:
        multiplier = p_life / (2.0 * a * lives)
    else:
        multiplier = p_job / (2.0 * b * jobs)

    z_star = p_life * lives + p_job * jobs
    return StaticSolution(Allocation(lives, jobs), multiplier, z_star)


def optimality_ratio(scenario: StaticScenario) -> float:
    """The optimal lives/jobs ratio ``b*p_life / (a*p_job)``.

    Raises:
        ZeroPriceError: when ``p_job`` is zero and the ratio is undefined.
    """
    if scenario.valuation.p_job == 0:
        raise ZeroPriceError(
            "optimality ratio is undefined when p_job is zero", path="p_job"
        )
    return (scenario.frontier.b * scenario.valuation.p_life) / (
        scenario.frontier.a * scenario.valuation.p_job
    )


def _relative(residual: float, primary_scale: float, fallback_scale: float) -> float:
    scale = primary_scale if primary_scale > 0 else fallback_scale
    if scale == 0:
        return 0.0 if residual == 0 else math.inf
    return residual / scale


def verify_kkt(scenario: StaticScenario, solution: StaticSolution) -> KktReport:
    """Report-only check of the three first-order conditions at ``solution``."""
    a, b, c = scenario.frontier.a, scenario.frontier.b, scenario.frontier.c
    p_life, p_job = scenario.valuation.p_life, scenario.valuation.p_job
    lives, jobs = solution.allocation.lives_saved, solution.allocation.jobs_saved
    lam = solution.multiplier

    lives_term = 2.0 * a * lam * lives
    jobs_term = 2.0 * b * lam * jobs
    return KktReport(
        stationarity_lives=_relative(p_life - lives_term, p_life, abs(lives_term)),
        stationarity_jobs=_relative(p_job - jobs_term, p_job, abs(jobs_term)),
        feasibility=(a * lives * lives + b * jobs * jobs - c) / c,
        multiplier_nonnegative=lam >= 0,
    )


def enumerate_discrete(
    points: Sequence[Allocation], valuation: Valuation
) -> EnumerationResult:
    """Score a finite candidate set and pick the best allocation.

    Rows keep the input order. Exact z ties are broken toward the point
    with more lives saved and reported via ``tied``.
    """
    if len(points) == 0:
        raise EmptyPointSetError("point set must not be empty", path="points")
    rows = tuple(
        ScoredPoint(p, valuation.value_of(p.lives_saved, p.jobs_saved)) for p in points
    )
    best_z = max(row.z for row in rows)
    contenders = [i for i, row in enumerate(rows) if row.z == best_z]
    best_index = max(contenders, key=lambda i: rows[i].allocation.lives_saved)
    return EnumerationResult(rows=rows, best_index=best_index, tied=len(contenders) > 1)
