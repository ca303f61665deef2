"""Decision support for lives-vs-jobs trade-offs.

Closed-form constrained optimization over elliptic possibility frontiers:
one-period and discounted multi-period solvers, a brute-force sweep oracle
for independent verification, and what-if analysis tools. See the demos/
directory for narrated walkthroughs and ``tradeopt --help`` for the CLI.
"""

from .errors import (
    CornerObservationError,
    DegenerateValuationError,
    EmptyPointSetError,
    InvalidDiscountRateError,
    InvalidParameterNameError,
    InvalidPeriodError,
    InvalidPointCountError,
    NegativeParameterError,
    NonFiniteParameterError,
    NonPositiveFactorError,
    NonPositiveParameterError,
    OffFrontierObservationError,
    OverlappingVariablesError,
    SchemaError,
    StepOutOfRangeError,
    TradeoffError,
    ZeroPriceError,
)
from .model import (
    Allocation,
    PossibilityFrontier,
    ShiftSpec,
    StaticScenario,
    Valuation,
    apply_shift,
    intercepts,
    trace_frontier,
    validate_frontier,
)
from .static import (
    EnumerationResult,
    KktReport,
    ScoredPoint,
    StaticSolution,
    enumerate_discrete,
    optimality_ratio,
    solve_static,
    verify_kkt,
)
from .dynamic import (
    ChainScenario,
    ChainSolution,
    CrossConstraint,
    DynamicKktReport,
    DynamicScenario,
    DynamicSolution,
    PeriodAllocations,
    decouple_dynamic,
    dynamic_optimality_ratios,
    solve_chain,
    solve_dynamic,
    verify_kkt_dynamic,
)
from .oracle import SweepResult, oracle_dynamic, oracle_static
from .analysis import (
    ComparisonRow,
    ScenarioComparison,
    SensitivityEstimate,
    compare_scenarios,
    infer_valuation_ratio,
    sensitivity,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # model
    "PossibilityFrontier",
    "Valuation",
    "Allocation",
    "StaticScenario",
    "ShiftSpec",
    "validate_frontier",
    "intercepts",
    "trace_frontier",
    "apply_shift",
    # static solver
    "StaticSolution",
    "KktReport",
    "ScoredPoint",
    "EnumerationResult",
    "solve_static",
    "optimality_ratio",
    "verify_kkt",
    "enumerate_discrete",
    # dynamic solver
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
    # oracle
    "SweepResult",
    "oracle_static",
    "oracle_dynamic",
    # analysis
    "SensitivityEstimate",
    "ComparisonRow",
    "ScenarioComparison",
    "sensitivity",
    "infer_valuation_ratio",
    "compare_scenarios",
    # errors
    "TradeoffError",
    "NonPositiveParameterError",
    "NegativeParameterError",
    "NonFiniteParameterError",
    "NonPositiveFactorError",
    "InvalidPointCountError",
    "DegenerateValuationError",
    "ZeroPriceError",
    "EmptyPointSetError",
    "InvalidDiscountRateError",
    "InvalidPeriodError",
    "OverlappingVariablesError",
    "InvalidParameterNameError",
    "StepOutOfRangeError",
    "CornerObservationError",
    "OffFrontierObservationError",
    "SchemaError",
]
