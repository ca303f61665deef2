"""Two-period discounted trade-off with cross-temporal constraints.

The dynamic model couples this year's jobs to next year's lives and this
year's lives to next year's jobs:

    maximize  p_life_1*L1 + p_job_1*J1 + (p_life_2*L2 + p_job_2*J2)/(1+i)
    s.t.      a1*L2**2 + b1*J1**2 = c1
              a2*L1**2 + b2*J2**2 = c2

Because each constraint touches a disjoint variable pair, the Lagrangian
separates: the problem is two independent one-period problems with the
period-2 prices discounted by 1/(1+i). :func:`solve_dynamic` implements the
closed forms directly; :func:`decouple_dynamic` exposes the structural
reduction so the two routes can be checked against each other. The same
decoupling generalizes to longer horizons via :func:`solve_chain`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    DegenerateValuationError,
    InvalidDiscountRateError,
    InvalidPeriodError,
    NegativeParameterError,
    NonFiniteParameterError,
    OverlappingVariablesError,
    ZeroPriceError,
)
from .model import Allocation, PossibilityFrontier, StaticScenario, Valuation
from .static import StaticSolution, _relative, solve_static

__all__ = [
    "CrossConstraint",
    "DynamicScenario",
    "PeriodAllocations",
    "DynamicSolution",
    "DynamicKktReport",
    "ChainScenario",
    "ChainSolution",
    "solve_dynamic",
    "dynamic_optimality_ratios",
    "decouple_dynamic",
    "verify_kkt_dynamic",
    "solve_chain",
]


def _check_price(name: str, value: float) -> float:
    value = float(value)
    if not math.isfinite(value):
        raise NonFiniteParameterError(f"{name} must be finite, got {value!r}", path=name)
    if value < 0:
        raise NegativeParameterError(f"{name} must be >= 0, got {value!r}", path=name)
    return value


def _check_period(name: str, value: int) -> int:
    if not isinstance(value, int) or isinstance(value, bool) or value < 1:
        raise InvalidPeriodError(
            f"{name} must be an integer >= 1, got {value!r}", path=name
        )
    return value


@dataclass(frozen=True)
class CrossConstraint:
    """One elliptic constraint ``a*lives**2 + b*jobs**2 = c`` whose lives and
    jobs variables may belong to different periods."""

    a: float
    b: float
    c: float
    lives_period: int
    jobs_period: int

    def __post_init__(self):
        # Reuse the frontier validation; the geometry is identical.
        PossibilityFrontier(self.a, self.b, self.c)
        _check_period("lives_period", self.lives_period)
        _check_period("jobs_period", self.jobs_period)

    @property
    def frontier(self) -> PossibilityFrontier:
        return PossibilityFrontier(self.a, self.b, self.c)


@dataclass(frozen=True)
class DynamicScenario:
    """The two-period model: constraint1 couples period-2 lives with
    period-1 jobs, constraint2 couples period-1 lives with period-2 jobs.

    Per-period prices are plain nonnegative floats rather than
    :class:`~tradeopt.model.Valuation` values: a period may carry two zero
    prices as long as each *constraint pair* -- (p_life_1, p_job_2) and
    (p_life_2, p_job_1) -- keeps at least one positive price.
    """

    constraint1: CrossConstraint
    constraint2: CrossConstraint
    p_life_1: float
    p_job_1: float
    p_life_2: float
    p_job_2: float
    discount_rate: float

    def __post_init__(self):
        if (self.constraint1.lives_period, self.constraint1.jobs_period) != (2, 1):
            raise InvalidPeriodError(
                "constraint1 must couple period-2 lives with period-1 jobs",
                path="constraint1",
            )
        if (self.constraint2.lives_period, self.constraint2.jobs_period) != (1, 2):
            raise InvalidPeriodError(
                "constraint2 must couple period-1 lives with period-2 jobs",
                path="constraint2",
            )
        for name in ("p_life_1", "p_job_1", "p_life_2", "p_job_2"):
            object.__setattr__(self, name, _check_price(name, getattr(self, name)))
        rate = float(self.discount_rate)
        if not math.isfinite(rate) or rate <= -1:
            raise InvalidDiscountRateError(
                f"discount_rate must be a finite number > -1, got {rate!r}",
                path="discount_rate",
            )
        object.__setattr__(self, "discount_rate", rate)
        if self.p_life_1 == 0 and self.p_job_2 == 0:
            raise DegenerateValuationError(
                "p_life_1 and p_job_2 cannot both be zero (constraint2 pair)",
                path="p_life_1",
            )
        if self.p_life_2 == 0 and self.p_job_1 == 0:
            raise DegenerateValuationError(
                "p_life_2 and p_job_1 cannot both be zero (constraint1 pair)",
                path="p_life_2",
            )

    @classmethod
    def from_params(
        cls,
        a1: float,
        b1: float,
        c1: float,
        a2: float,
        b2: float,
        c2: float,
        p_life_1: float,
        p_job_1: float,
        p_life_2: float,
        p_job_2: float,
        discount_rate: float,
    ) -> "DynamicScenario":
        """Build the scenario with the cross-temporal wiring filled in."""
        return cls(
            constraint1=CrossConstraint(a1, b1, c1, lives_period=2, jobs_period=1),
            constraint2=CrossConstraint(a2, b2, c2, lives_period=1, jobs_period=2),
            p_life_1=p_life_1,
            p_job_1=p_job_1,
            p_life_2=p_life_2,
            p_job_2=p_job_2,
            discount_rate=discount_rate,
        )


@dataclass(frozen=True)
class PeriodAllocations:
    """Optimal lives/jobs for both periods."""

    lives_1: float
    jobs_1: float
    lives_2: float
    jobs_2: float


@dataclass(frozen=True)
class DynamicSolution:
    """Allocations, one multiplier per constraint, and the discounted
    maximized benefit."""

    allocations: PeriodAllocations
    multipliers: tuple[float, float]
    z_star: float


@dataclass(frozen=True)
class DynamicKktReport:
    """Relative residuals of all six first-order conditions."""

    stationarity_lives_1: float
    stationarity_jobs_1: float
    stationarity_lives_2: float
    stationarity_jobs_2: float
    feasibility_1: float
    feasibility_2: float
    multipliers_nonnegative: bool

    @property
    def max_residual(self) -> float:
        return max(
            abs(self.stationarity_lives_1),
            abs(self.stationarity_jobs_1),
            abs(self.stationarity_lives_2),
            abs(self.stationarity_jobs_2),
            abs(self.feasibility_1),
            abs(self.feasibility_2),
        )

    @property
    def passed(self) -> bool:
        return self.multipliers_nonnegative and self.max_residual <= 1e-6


def solve_dynamic(scenario: DynamicScenario) -> DynamicSolution:
    """Solve the two-period problem in closed form.

    Multipliers are recovered from the first-order condition of a
    positive-price variable in each constraint (lambda_1 from period-1 jobs
    or, when p_job_1 is zero, from period-2 lives; symmetrically for
    lambda_2).
    """
    a1, b1, c1 = scenario.constraint1.a, scenario.constraint1.b, scenario.constraint1.c
    a2, b2, c2 = scenario.constraint2.a, scenario.constraint2.b, scenario.constraint2.c
    pl1, pj1 = scenario.p_life_1, scenario.p_job_1
    pl2, pj2 = scenario.p_life_2, scenario.p_job_2
    g = 1.0 + scenario.discount_rate

    den2 = a2 * b2 * b2 * g * g * pl1 * pl1 + b2 * a2 * a2 * pj2 * pj2
    lives_1 = math.sqrt(c2 * b2 * b2 * g * g * pl1 * pl1 / den2)
    jobs_2 = math.sqrt(c2 * a2 * a2 * pj2 * pj2 / den2)

    den1 = a1 * b1 * b1 * pl2 * pl2 + b1 * a1 * a1 * g * g * pj1 * pj1
    lives_2 = math.sqrt(c1 * b1 * b1 * pl2 * pl2 / den1)
    jobs_1 = math.sqrt(c1 * a1 * a1 * g * g * pj1 * pj1 / den1)

    if pj1 > 0:
        lam1 = pj1 / (2.0 * b1 * jobs_1)
    else:
        lam1 = pl2 / (g * 2.0 * a1 * lives_2)
    if pl1 > 0:
        lam2 = pl1 / (2.0 * a2 * lives_1)
    else:
        lam2 = pj2 / (g * 2.0 * b2 * jobs_2)

    z_star = pl1 * lives_1 + pj1 * jobs_1 + (pl2 * lives_2 + pj2 * jobs_2) / g
    return DynamicSolution(
        allocations=PeriodAllocations(lives_1, jobs_1, lives_2, jobs_2),
        multipliers=(lam1, lam2),
        z_star=z_star,
    )


def dynamic_optimality_ratios(scenario: DynamicScenario) -> tuple[float, float]:
    """(lives_1/jobs_2, lives_2/jobs_1) at the optimum.

    Raises:
        ZeroPriceError: when the price in a ratio's denominator is zero.
    """
    if scenario.p_job_2 == 0:
        raise ZeroPriceError(
            "lives_1/jobs_2 ratio is undefined when p_job_2 is zero", path="p_job_2"
        )
    if scenario.p_job_1 == 0:
        raise ZeroPriceError(
            "lives_2/jobs_1 ratio is undefined when p_job_1 is zero", path="p_job_1"
        )
    g = 1.0 + scenario.discount_rate
    first = (
        scenario.constraint2.b * g * scenario.p_life_1
        / (scenario.constraint2.a * scenario.p_job_2)
    )
    second = (
        scenario.constraint1.b * scenario.p_life_2
        / (scenario.constraint1.a * g * scenario.p_job_1)
    )
    return first, second


def decouple_dynamic(
    scenario: DynamicScenario,
) -> tuple[StaticScenario, StaticScenario]:
    """Split the two-period problem into its two independent one-period
    subproblems with period-2 prices discounted.

    Returns:
        A pair of static scenarios: first the constraint-2 subproblem,
        whose (lives, jobs) roles are (period-1 lives, period-2 jobs);
        then the constraint-1 subproblem with roles
        (period-2 lives, period-1 jobs).
    """
    g = 1.0 + scenario.discount_rate
    sub2 = StaticScenario(
        frontier=scenario.constraint2.frontier,
        valuation=Valuation(scenario.p_life_1, scenario.p_job_2 / g),
    )
    sub1 = StaticScenario(
        frontier=scenario.constraint1.frontier,
        valuation=Valuation(scenario.p_life_2 / g, scenario.p_job_1),
    )
    return sub2, sub1


def verify_kkt_dynamic(
    scenario: DynamicScenario, solution: DynamicSolution
) -> DynamicKktReport:
    """Report-only check of all six first-order conditions at ``solution``."""
    a1, b1, c1 = scenario.constraint1.a, scenario.constraint1.b, scenario.constraint1.c
    a2, b2, c2 = scenario.constraint2.a, scenario.constraint2.b, scenario.constraint2.c
    g = 1.0 + scenario.discount_rate
    alloc = solution.allocations
    lam1, lam2 = solution.multipliers

    term_l1 = 2.0 * a2 * lam2 * alloc.lives_1
    term_j1 = 2.0 * b1 * lam1 * alloc.jobs_1
    term_l2 = 2.0 * a1 * lam1 * alloc.lives_2
    term_j2 = 2.0 * b2 * lam2 * alloc.jobs_2
    return DynamicKktReport(
        stationarity_lives_1=_relative(
            scenario.p_life_1 - term_l1, scenario.p_life_1, abs(term_l1)
        ),
        stationarity_jobs_1=_relative(
            scenario.p_job_1 - term_j1, scenario.p_job_1, abs(term_j1)
        ),
        stationarity_lives_2=_relative(
            scenario.p_life_2 / g - term_l2, scenario.p_life_2 / g, abs(term_l2)
        ),
        stationarity_jobs_2=_relative(
            scenario.p_job_2 / g - term_j2, scenario.p_job_2 / g, abs(term_j2)
        ),
        feasibility_1=(
            a1 * alloc.lives_2 ** 2 + b1 * alloc.jobs_1 ** 2 - c1
        ) / c1,
        feasibility_2=(
            a2 * alloc.lives_1 ** 2 + b2 * alloc.jobs_2 ** 2 - c2
        ) / c2,
        multipliers_nonnegative=lam1 >= 0 and lam2 >= 0,
    )


@dataclass(frozen=True)
class ChainScenario:
    """A horizon of T periods constrained by a list of decoupled
    cross-temporal frontiers.

    ``lives_prices[t-1]`` and ``jobs_prices[t-1]`` value period-t outcomes.
    Every (variable, period) pair may appear in at most one constraint;
    that is what keeps each constraint solvable on its own. Same-period
    pairs (lives_period == jobs_period) are allowed -- the decoupled math
    is identical.
    """

    constraints: tuple[CrossConstraint, ...]
    lives_prices: tuple[float, ...]
    jobs_prices: tuple[float, ...]
    discount_rate: float
    horizon: int

    def __post_init__(self):
        object.__setattr__(self, "constraints", tuple(self.constraints))
        object.__setattr__(
            self,
            "lives_prices",
            tuple(_check_price(f"lives_prices.{t}", p) for t, p in enumerate(self.lives_prices)),
        )
        object.__setattr__(
            self,
            "jobs_prices",
            tuple(_check_price(f"jobs_prices.{t}", p) for t, p in enumerate(self.jobs_prices)),
        )
        if not isinstance(self.horizon, int) or self.horizon < 1:
            raise InvalidPeriodError(
                f"horizon must be an integer >= 1, got {self.horizon!r}", path="horizon"
            )
        rate = float(self.discount_rate)
        if not math.isfinite(rate) or rate <= -1:
            raise InvalidDiscountRateError(
                f"discount_rate must be a finite number > -1, got {rate!r}",
                path="discount_rate",
            )
        object.__setattr__(self, "discount_rate", rate)
        if len(self.lives_prices) != self.horizon or len(self.jobs_prices) != self.horizon:
            raise InvalidPeriodError(
                "lives_prices and jobs_prices must each have one entry per period",
                path="lives_prices",
            )
        seen: set[tuple[str, int]] = set()
        for idx, constraint in enumerate(self.constraints):
            for kind, period in (
                ("lives", constraint.lives_period),
                ("jobs", constraint.jobs_period),
            ):
                if period > self.horizon:
                    raise InvalidPeriodError(
                        f"constraint {idx} references period {period} beyond the "
                        f"horizon {self.horizon}",
                        path=f"constraints.{idx}",
                    )
                key = (kind, period)
                if key in seen:
                    raise OverlappingVariablesError(
                        f"{kind} in period {period} appears in more than one constraint",
                        path=f"constraints.{idx}",
                    )
                seen.add(key)


@dataclass(frozen=True)
class ChainSolution:
    """Per-constraint optima (prices already discounted to present value)
    and their total."""

    per_constraint: tuple[StaticSolution, ...]
    z_total: float


def chain_subproblems(chain: ChainScenario) -> list[StaticScenario]:
    """The discounted one-period subproblem for each constraint, in order.

    Period-t prices are divided by (1+i)**(t-1), so each subproblem's
    z_star is already a present value.
    """
    g = 1.0 + chain.discount_rate
    subproblems = []
    for idx, constraint in enumerate(chain.constraints):
        p_life = chain.lives_prices[constraint.lives_period - 1] / g ** (
            constraint.lives_period - 1
        )
        p_job = chain.jobs_prices[constraint.jobs_period - 1] / g ** (
            constraint.jobs_period - 1
        )
        try:
            valuation = Valuation(p_life, p_job)
        except DegenerateValuationError as err:
            raise err.prepend_path(f"constraints.{idx}")
        subproblems.append(StaticScenario(constraint.frontier, valuation))
    return subproblems


def solve_chain(chain: ChainScenario) -> ChainSolution:
    """Solve every constraint's subproblem and sum the discounted optima.

    With two constraints wired like :class:`DynamicScenario`, the output
    matches :func:`solve_dynamic`; with one same-period constraint it
    reduces to :func:`~tradeopt.static.solve_static`.
    """
    solutions = tuple(solve_static(sub) for sub in chain_subproblems(chain))
    return ChainSolution(
        per_constraint=solutions,
        z_total=sum(sol.z_star for sol in solutions),
    )
