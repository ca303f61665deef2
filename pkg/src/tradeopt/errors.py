"""Exception hierarchy shared by every solver and interface layer.

Each error carries a stable machine-readable ``code`` and, where it concerns
a specific input field, a dotted ``path`` (e.g. ``frontier.a``). The CLI maps
these to exit code 2 and the HTTP service to status 422 (400 for schema-level
problems).
"""

from __future__ import annotations


class TradeoffError(ValueError):
    """Base class for all domain and schema errors raised by this package."""

    code = "TRADEOFF_ERROR"

    def __init__(self, message: str, *, path: str | None = None):
        super().__init__(message)
        self.path = path

    def prepend_path(self, prefix: str) -> "TradeoffError":
        """Qualify ``path`` with an enclosing field prefix; returns self."""
        if self.path:
            self.path = f"{prefix}.{self.path}"
        else:
            self.path = prefix
        return self

    @property
    def message(self) -> str:
        return str(self.args[0]) if self.args else ""


class NonPositiveParameterError(TradeoffError):
    code = "NON_POSITIVE_PARAMETER"


class NegativeParameterError(TradeoffError):
    code = "NEGATIVE_PARAMETER"


class NonFiniteParameterError(TradeoffError):
    code = "NON_FINITE_PARAMETER"


class NonPositiveFactorError(TradeoffError):
    code = "NON_POSITIVE_FACTOR"


class InvalidPointCountError(TradeoffError):
    code = "INVALID_POINT_COUNT"


class DegenerateValuationError(TradeoffError):
    code = "DEGENERATE_VALUATION"


class ZeroPriceError(TradeoffError):
    code = "ZERO_PRICE"


class EmptyPointSetError(TradeoffError):
    code = "EMPTY_POINT_SET"


class InvalidDiscountRateError(TradeoffError):
    code = "INVALID_DISCOUNT_RATE"


class InvalidPeriodError(TradeoffError):
    code = "INVALID_PERIOD"


class OverlappingVariablesError(TradeoffError):
    code = "OVERLAPPING_VARIABLES"


class InvalidParameterNameError(TradeoffError):
    code = "INVALID_PARAMETER_NAME"


class StepOutOfRangeError(TradeoffError):
    code = "STEP_OUT_OF_RANGE"


class CornerObservationError(TradeoffError):
    code = "CORNER_OBSERVATION"


class OffFrontierObservationError(TradeoffError):
    code = "OFF_FRONTIER_OBSERVATION"

    def __init__(self, message: str, *, residual: float, path: str | None = None):
        super().__init__(message, path=path)
        self.residual = residual


class SchemaError(TradeoffError):
    """Structural problem in a scenario document (wrong type, unknown field)."""

    code = "SCHEMA_VIOLATION"
