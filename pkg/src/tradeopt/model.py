"""Domain types for the lives-vs-jobs trade-off model.

The feasible set is the nonnegative quadrant of the ellipse

    a * lives**2 + b * jobs**2 = c          (a, b, c > 0)

whose axis intercepts sqrt(c/a) and sqrt(c/b) bound how many lives or jobs
can be saved when the other outcome is abandoned entirely. Allocations are
dimensionless counts in a scenario-declared scale (``unit_scale`` maps them
to persons/jobs for display only; it never enters the math).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .errors import (
    DegenerateValuationError,
    InvalidPointCountError,
    NegativeParameterError,
    NonFiniteParameterError,
    NonPositiveFactorError,
    NonPositiveParameterError,
)

__all__ = [
    "PossibilityFrontier",
    "Valuation",
    "Allocation",
    "StaticScenario",
    "ShiftSpec",
    "validate_frontier",
    "intercepts",
    "trace_frontier",
    "trace_arrays",
    "apply_shift",
]


def _check_positive(name: str, value: float) -> float:
    value = float(value)
    if not math.isfinite(value):
        raise NonFiniteParameterError(f"{name} must be finite, got {value!r}", path=name)
    if value <= 0:
        raise NonPositiveParameterError(f"{name} must be > 0, got {value!r}", path=name)
    return value


def _check_nonnegative(name: str, value: float) -> float:
    value = float(value)
    if not math.isfinite(value):
        raise NonFiniteParameterError(f"{name} must be finite, got {value!r}", path=name)
    if value < 0:
        raise NegativeParameterError(f"{name} must be >= 0, got {value!r}", path=name)
    return value


@dataclass(frozen=True)
class PossibilityFrontier:
    """Elliptic trade-off constraint ``a*lives**2 + b*jobs**2 = c``.

    ``a`` and ``b`` control the curvature (increasing opportunity cost) on
    the lives and jobs axes; ``c`` sets the overall attainment level.
    """

    a: float
    b: float
    c: float

    def __post_init__(self):
        object.__setattr__(self, "a", _check_positive("a", self.a))
        object.__setattr__(self, "b", _check_positive("b", self.b))
        object.__setattr__(self, "c", _check_positive("c", self.c))

    @property
    def lives_intercept(self) -> float:
        """Maximum attainable lives when no jobs are saved: sqrt(c/a)."""
        return math.sqrt(self.c / self.a)

    @property
    def jobs_intercept(self) -> float:
        """Maximum attainable jobs when no lives are saved: sqrt(c/b)."""
        return math.sqrt(self.c / self.b)

    def residual(self, lives: float, jobs: float) -> float:
        """Signed constraint residual ``a*lives**2 + b*jobs**2 - c``."""
        return self.a * lives * lives + self.b * jobs * jobs - self.c

    def contains(self, lives: float, jobs: float, rel_tol: float = 1e-9) -> bool:
        """Whether the point lies on the frontier within ``rel_tol * c``."""
        return abs(self.residual(lives, jobs)) <= rel_tol * self.c


@dataclass(frozen=True)
class Valuation:
    """Monetary weights: currency per life saved and per job saved.

    ``p_job`` is a one-period compensation figure; a lost job is treated
    as recoverable next period while a lost life is permanent, which is
    why the two prices live on very different scales in practice.
    """

    p_life: float
    p_job: float

    def __post_init__(self):
        object.__setattr__(self, "p_life", _check_nonnegative("p_life", self.p_life))
        object.__setattr__(self, "p_job", _check_nonnegative("p_job", self.p_job))
        if self.p_life == 0 and self.p_job == 0:
            raise DegenerateValuationError(
                "p_life and p_job cannot both be zero", path="p_life"
            )

    def value_of(self, lives: float, jobs: float) -> float:
        """Monetarized benefit ``p_life*lives + p_job*jobs``."""
        return self.p_life * lives + self.p_job * jobs


@dataclass(frozen=True)
class Allocation:
    """A (lives saved, jobs saved) pair in scenario units."""

    lives_saved: float
    jobs_saved: float

    def __post_init__(self):
        object.__setattr__(
            self, "lives_saved", _check_nonnegative("lives_saved", self.lives_saved)
        )
        object.__setattr__(
            self, "jobs_saved", _check_nonnegative("jobs_saved", self.jobs_saved)
        )


@dataclass(frozen=True)
class StaticScenario:
    """A one-period decision problem: frontier plus valuation.

    ``unit_scale`` is display metadata (how many persons/jobs one
    allocation unit represents); solver math never touches it.
    """

    frontier: PossibilityFrontier
    valuation: Valuation
    unit_scale: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "unit_scale", _check_positive("unit_scale", self.unit_scale))


_SHIFT_KINDS = ("level", "proportional", "per_axis")


@dataclass(frozen=True)
class ShiftSpec:
    """An outward/inward frontier shift.

    kinds:
        ``level``         -- scale the constraint level c by ``factors[0]``.
        ``proportional``  -- scale both intercepts by ``factors[0]``
                             (a parallel shift of the whole curve).
        ``per_axis``      -- scale the lives and jobs intercepts by
                             ``factors[0]`` and ``factors[1]`` independently.
    """

    kind: str
    factors: tuple[float, ...]

    def __post_init__(self):
        if self.kind not in _SHIFT_KINDS:
            raise NonPositiveFactorError(
                f"kind must be one of {_SHIFT_KINDS}, got {self.kind!r}", path="kind"
            )
        expected = 2 if self.kind == "per_axis" else 1
        factors = tuple(float(f) for f in self.factors)
        if len(factors) != expected:
            raise NonPositiveFactorError(
                f"{self.kind} shift takes {expected} factor(s), got {len(factors)}",
                path="factors",
            )
        for i, f in enumerate(factors):
            if not math.isfinite(f) or f <= 0:
                raise NonPositiveFactorError(
                    f"factors[{i}] must be a positive finite number, got {f!r}",
                    path=f"factors.{i}",
                )
        object.__setattr__(self, "factors", factors)

    @classmethod
    def level(cls, k: float) -> "ShiftSpec":
        return cls("level", (k,))

    @classmethod
    def proportional(cls, k: float) -> "ShiftSpec":
        return cls("proportional", (k,))

    @classmethod
    def per_axis(cls, k_lives: float, k_jobs: float) -> "ShiftSpec":
        return cls("per_axis", (k_lives, k_jobs))


def validate_frontier(a: float, b: float, c: float) -> PossibilityFrontier:
    """Build a frontier, rejecting non-positive or non-finite parameters."""
    return PossibilityFrontier(a, b, c)


def intercepts(frontier: PossibilityFrontier) -> tuple[float, float]:
    """(lives_max, jobs_max): the axis endpoints of the frontier."""
    return frontier.lives_intercept, frontier.jobs_intercept


def trace_arrays(
    frontier: PossibilityFrontier, n_points: int
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Vectorized quarter-ellipse trace used by plotting and the sweep oracle.

    Returns (theta, lives, jobs) with theta uniform on [0, pi/2]. The first
    point is pinned to the exact lives intercept and the last to the exact
    jobs intercept so the endpoints are corner points, not near-corner floats.
    """
    if n_points < 2:
        raise InvalidPointCountError(
            f"n_points must be >= 2, got {n_points}", path="n_points"
        )
    theta = np.linspace(0.0, math.pi / 2, int(n_points))
    lives = frontier.lives_intercept * np.cos(theta)
    jobs = frontier.jobs_intercept * np.sin(theta)
    lives[0], jobs[0] = frontier.lives_intercept, 0.0
    lives[-1], jobs[-1] = 0.0, frontier.jobs_intercept
    return theta, lives, jobs


def trace_frontier(frontier: PossibilityFrontier, n_points: int) -> list[Allocation]:
    """Trace the frontier from the lives intercept to the jobs intercept.

    Every returned point satisfies the constraint to within 1e-9 * c.
    """
    _, lives, jobs = trace_arrays(frontier, n_points)
    return [Allocation(l, j) for l, j in zip(lives.tolist(), jobs.tolist())]


def apply_shift(frontier: PossibilityFrontier, shift: ShiftSpec) -> PossibilityFrontier:
    """Return the shifted frontier (see :class:`ShiftSpec` for the kinds).

    ``proportional(k)`` multiplies c by k**2 so that both intercepts scale
    by exactly k; ``per_axis`` rescales a and b so each intercept scales by
    its own factor.
    """
    if shift.kind == "level":
        return replace(frontier, c=shift.factors[0] * frontier.c)
    if shift.kind == "proportional":
        k = shift.factors[0]
        return replace(frontier, c=k * k * frontier.c)
    k_lives, k_jobs = shift.factors
    return replace(
        frontier,
        a=frontier.a / (k_lives * k_lives),
        b=frontier.b / (k_jobs * k_jobs),
    )
