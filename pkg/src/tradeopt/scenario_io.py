"""Versioned JSON scenario documents and their (de)serialization.

One document format feeds both the CLI and the HTTP service::

    {
      "version": "1",
      "kind": "static" | "dynamic" | "chain" | "discrete" | "infer",
      "unit_scale": 1e6,          # optional display metadata, default 1.0
      "payload": { ... }          # shape depends on kind, see the parsers
    }

Validation is strict: unknown fields, wrong types and domain violations are
all rejected with a dotted path to the offending field (``payload.frontier.a``
in files, ``frontier.a`` in service request bodies). Parsing and serializing
are exact inverses for every valid document.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable

from .dynamic import ChainScenario, CrossConstraint, DynamicScenario
from .errors import SchemaError, TradeoffError
from .model import (
    Allocation,
    PossibilityFrontier,
    ShiftSpec,
    StaticScenario,
    Valuation,
)

__all__ = [
    "SCENARIO_FORMAT_VERSION",
    "SCENARIO_KINDS",
    "DiscreteProblem",
    "InferenceProblem",
    "ScenarioFile",
    "parse_scenario_file",
    "serialize_scenario_file",
    "parse_static_payload",
    "parse_dynamic_payload",
    "parse_chain_payload",
    "parse_discrete_payload",
    "parse_infer_payload",
    "parse_frontier",
    "parse_shift",
]

SCENARIO_FORMAT_VERSION = "1"
SCENARIO_KINDS = ("static", "dynamic", "chain", "discrete", "infer")


@dataclass(frozen=True)
class DiscreteProblem:
    """Finite candidate allocations plus the valuation to score them with."""

    points: tuple[Allocation, ...]
    valuation: Valuation


@dataclass(frozen=True)
class InferenceProblem:
    """A frontier and an observed allocation whose implied valuation ratio
    is wanted."""

    frontier: PossibilityFrontier
    observed: Allocation


@dataclass(frozen=True)
class ScenarioFile:
    version: str
    kind: str
    unit_scale: float
    problem: StaticScenario | DynamicScenario | ChainScenario | DiscreteProblem | InferenceProblem


# --------------------------------------------------------------------------
# schema primitives
# --------------------------------------------------------------------------


def _at(prefix: str, key: str) -> str:
    return f"{prefix}.{key}" if prefix else key


def _obj(value: Any, path: str) -> dict:
    if not isinstance(value, dict):
        raise SchemaError(f"{path or 'document'} must be an object", path=path or None)
    return value


def _number(value: Any, path: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise SchemaError(f"{path} must be a number", path=path)
    return float(value)


def _integer(value: Any, path: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise SchemaError(f"{path} must be an integer", path=path)
    return value


def _string(value: Any, path: str) -> str:
    if not isinstance(value, str):
        raise SchemaError(f"{path} must be a string", path=path)
    return value


def _array(value: Any, path: str) -> list:
    if not isinstance(value, list):
        raise SchemaError(f"{path} must be an array", path=path)
    return value


def _check_keys(obj: dict, prefix: str, required: set[str], optional: set[str] = frozenset()):
    for key in obj:
        if key not in required and key not in optional:
            raise SchemaError(f"unknown field {_at(prefix, str(key))}", path=_at(prefix, str(key)))
    for key in required:
        if key not in obj:
            raise SchemaError(f"missing required field {_at(prefix, key)}", path=_at(prefix, key))


def _build(prefix: str, ctor: Callable, *args, **kwargs):
    """Construct a domain object, qualifying any domain error with ``prefix``."""
    try:
        return ctor(*args, **kwargs)
    except SchemaError:
        raise
    except TradeoffError as err:
        raise err.prepend_path(prefix) if prefix else err


# --------------------------------------------------------------------------
# payload parsers (paths are relative to the payload / request body)
# --------------------------------------------------------------------------


def parse_frontier(value: Any, prefix: str = "frontier") -> PossibilityFrontier:
    obj = _obj(value, prefix)
    _check_keys(obj, prefix, {"a", "b", "c"})
    params = {k: _number(obj[k], _at(prefix, k)) for k in ("a", "b", "c")}
    return _build(prefix, PossibilityFrontier, **params)


def _parse_valuation(value: Any, prefix: str = "valuation") -> Valuation:
    obj = _obj(value, prefix)
    _check_keys(obj, prefix, {"p_life", "p_job"})
    return _build(
        prefix,
        Valuation,
        _number(obj["p_life"], _at(prefix, "p_life")),
        _number(obj["p_job"], _at(prefix, "p_job")),
    )


def _parse_allocation(value: Any, prefix: str) -> Allocation:
    obj = _obj(value, prefix)
    _check_keys(obj, prefix, {"lives_saved", "jobs_saved"})
    return _build(
        prefix,
        Allocation,
        _number(obj["lives_saved"], _at(prefix, "lives_saved")),
        _number(obj["jobs_saved"], _at(prefix, "jobs_saved")),
    )


def parse_static_payload(value: Any, prefix: str = "") -> StaticScenario:
    obj = _obj(value, prefix)
    _check_keys(obj, prefix, {"frontier", "valuation"})
    return StaticScenario(
        parse_frontier(obj["frontier"], _at(prefix, "frontier")),
        _parse_valuation(obj["valuation"], _at(prefix, "valuation")),
    )


def parse_dynamic_payload(value: Any, prefix: str = "") -> DynamicScenario:
    obj = _obj(value, prefix)
    _check_keys(obj, prefix, {"constraint1", "constraint2", "prices", "discount_rate"})
    constraints = {}
    for name, periods in (("constraint1", (2, 1)), ("constraint2", (1, 2))):
        sub = _obj(obj[name], _at(prefix, name))
        _check_keys(sub, _at(prefix, name), {"a", "b", "c"})
        constraints[name] = _build(
            _at(prefix, name),
            CrossConstraint,
            *(_number(sub[k], _at(_at(prefix, name), k)) for k in ("a", "b", "c")),
            lives_period=periods[0],
            jobs_period=periods[1],
        )
    prices_prefix = _at(prefix, "prices")
    prices_obj = _obj(obj["prices"], prices_prefix)
    price_keys = {"p_life_1", "p_job_1", "p_life_2", "p_job_2"}
    _check_keys(prices_obj, prices_prefix, price_keys)
    prices = {k: _number(prices_obj[k], _at(prices_prefix, k)) for k in sorted(price_keys)}
    rate = _number(obj["discount_rate"], _at(prefix, "discount_rate"))
    try:
        return DynamicScenario(
            constraint1=constraints["constraint1"],
            constraint2=constraints["constraint2"],
            discount_rate=rate,
            **prices,
        )
    except TradeoffError as err:
        if err.path in price_keys:
            err.prepend_path(prices_prefix)
        elif prefix and err.path:
            err.prepend_path(prefix)
        raise


def parse_chain_payload(value: Any, prefix: str = "") -> ChainScenario:
    obj = _obj(value, prefix)
    _check_keys(
        obj, prefix, {"constraints", "lives_prices", "jobs_prices", "discount_rate", "horizon"}
    )
    constraints = []
    for i, item in enumerate(_array(obj["constraints"], _at(prefix, "constraints"))):
        item_prefix = _at(prefix, f"constraints.{i}")
        sub = _obj(item, item_prefix)
        _check_keys(sub, item_prefix, {"a", "b", "c", "lives_period", "jobs_period"})
        constraints.append(
            _build(
                item_prefix,
                CrossConstraint,
                *(_number(sub[k], _at(item_prefix, k)) for k in ("a", "b", "c")),
                lives_period=_integer(sub["lives_period"], _at(item_prefix, "lives_period")),
                jobs_period=_integer(sub["jobs_period"], _at(item_prefix, "jobs_period")),
            )
        )
    lives_prices = [
        _number(p, _at(prefix, f"lives_prices.{i}"))
        for i, p in enumerate(_array(obj["lives_prices"], _at(prefix, "lives_prices")))
    ]
    jobs_prices = [
        _number(p, _at(prefix, f"jobs_prices.{i}"))
        for i, p in enumerate(_array(obj["jobs_prices"], _at(prefix, "jobs_prices")))
    ]
    return _build(
        prefix,
        ChainScenario,
        constraints=tuple(constraints),
        lives_prices=tuple(lives_prices),
        jobs_prices=tuple(jobs_prices),
        discount_rate=_number(obj["discount_rate"], _at(prefix, "discount_rate")),
        horizon=_integer(obj["horizon"], _at(prefix, "horizon")),
    )


def parse_discrete_payload(value: Any, prefix: str = "") -> DiscreteProblem:
    obj = _obj(value, prefix)
    _check_keys(obj, prefix, {"points", "valuation"})
    points = tuple(
        _parse_allocation(item, _at(prefix, f"points.{i}"))
        for i, item in enumerate(_array(obj["points"], _at(prefix, "points")))
    )
    return DiscreteProblem(points, _parse_valuation(obj["valuation"], _at(prefix, "valuation")))


def parse_infer_payload(value: Any, prefix: str = "") -> InferenceProblem:
    obj = _obj(value, prefix)
    _check_keys(obj, prefix, {"frontier", "observed"})
    return InferenceProblem(
        parse_frontier(obj["frontier"], _at(prefix, "frontier")),
        _parse_allocation(obj["observed"], _at(prefix, "observed")),
    )


def parse_shift(value: Any, prefix: str = "shift") -> ShiftSpec:
    obj = _obj(value, prefix)
    _check_keys(obj, prefix, {"kind", "factors"})
    factors = tuple(
        _number(f, _at(prefix, f"factors.{i}"))
        for i, f in enumerate(_array(obj["factors"], _at(prefix, "factors")))
    )
    return _build(prefix, ShiftSpec, _string(obj["kind"], _at(prefix, "kind")), factors)


_PAYLOAD_PARSERS = {
    "static": parse_static_payload,
    "dynamic": parse_dynamic_payload,
    "chain": parse_chain_payload,
    "discrete": parse_discrete_payload,
    "infer": parse_infer_payload,
}


def parse_scenario_file(document: Any) -> ScenarioFile:
    """Validate a whole scenario document and build its domain objects."""
    obj = _obj(document, "")
    _check_keys(obj, "", {"version", "kind", "payload"}, optional={"unit_scale"})
    version = _string(obj["version"], "version")
    if version != SCENARIO_FORMAT_VERSION:
        raise SchemaError(
            f"unsupported version {version!r}; this build reads version "
            f"{SCENARIO_FORMAT_VERSION!r}",
            path="version",
        )
    kind = _string(obj["kind"], "kind")
    if kind not in SCENARIO_KINDS:
        raise SchemaError(
            f"kind must be one of {list(SCENARIO_KINDS)}, got {kind!r}", path="kind"
        )
    unit_scale = _number(obj.get("unit_scale", 1.0), "unit_scale")
    problem = _PAYLOAD_PARSERS[kind](obj["payload"], "payload")
    if kind == "static":
        problem = StaticScenario(problem.frontier, problem.valuation, unit_scale)
    return ScenarioFile(version=version, kind=kind, unit_scale=unit_scale, problem=problem)


# --------------------------------------------------------------------------
# serializers (exact inverses of the parsers)
# --------------------------------------------------------------------------


def _frontier_dict(f: PossibilityFrontier) -> dict:
    return {"a": f.a, "b": f.b, "c": f.c}


def _allocation_dict(a: Allocation) -> dict:
    return {"lives_saved": a.lives_saved, "jobs_saved": a.jobs_saved}


def _payload_dict(kind: str, problem) -> dict:
    if kind == "static":
        return {
            "frontier": _frontier_dict(problem.frontier),
            "valuation": {
                "p_life": problem.valuation.p_life,
                "p_job": problem.valuation.p_job,
            },
        }
    if kind == "dynamic":
        return {
            "constraint1": _frontier_dict(problem.constraint1.frontier),
            "constraint2": _frontier_dict(problem.constraint2.frontier),
            "prices": {
                "p_life_1": problem.p_life_1,
                "p_job_1": problem.p_job_1,
                "p_life_2": problem.p_life_2,
                "p_job_2": problem.p_job_2,
            },
            "discount_rate": problem.discount_rate,
        }
    if kind == "chain":
        return {
            "constraints": [
                {
                    "a": c.a,
                    "b": c.b,
                    "c": c.c,
                    "lives_period": c.lives_period,
                    "jobs_period": c.jobs_period,
                }
                for c in problem.constraints
            ],
            "lives_prices": list(problem.lives_prices),
            "jobs_prices": list(problem.jobs_prices),
            "discount_rate": problem.discount_rate,
            "horizon": problem.horizon,
        }
    if kind == "discrete":
        return {
            "points": [_allocation_dict(p) for p in problem.points],
            "valuation": {
                "p_life": problem.valuation.p_life,
                "p_job": problem.valuation.p_job,
            },
        }
    if kind == "infer":
        return {
            "frontier": _frontier_dict(problem.frontier),
            "observed": _allocation_dict(problem.observed),
        }
    raise ValueError(f"unknown kind {kind!r}")


def serialize_scenario_file(scenario: ScenarioFile) -> dict:
    return {
        "version": scenario.version,
        "kind": scenario.kind,
        "unit_scale": scenario.unit_scale,
        "payload": _payload_dict(scenario.kind, scenario.problem),
    }
