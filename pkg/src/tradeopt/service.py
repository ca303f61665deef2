"""Stateless JSON-over-HTTP service exposing the solvers.

    POST /v1/solve/static    body: {frontier, valuation [, unit_scale, verify, oracle_points]}
    POST /v1/solve/dynamic   body: {constraint1, constraint2, prices, discount_rate [, ...]}
    POST /v1/solve/chain     body: {constraints, lives_prices, jobs_prices, discount_rate, horizon}
    POST /v1/enumerate       body: {points, valuation [, unit_scale]}
    POST /v1/trace           body: {frontier, n}
    POST /v1/sensitivity     body: {frontier, valuation, parameter [, relative_step]}
    POST /v1/infer           body: {frontier, observed}
    POST /v1/shift           body: {frontier, shift}
    GET  /v1/health

Every handler is a pure function of the request body; there is no shared
mutable state, so requests may be issued concurrently and in any order.
Domain violations return 422 and malformed or mis-shaped bodies 400, both
as ``{"error": {code, message, path}}``. Responses are serialized with the
same ``json.dumps`` as the CLI's ``--json`` mode, so the two surfaces emit
byte-identical numbers.

Set ``TRADEOPT_CORS_ORIGINS`` (comma-separated) to restrict the browser
origins allowed to call the API; the default allows any origin.
"""

from __future__ import annotations

import json
import os
from typing import Any, Callable

from fastapi import FastAPI, Request, Response
from fastapi.middleware.cors import CORSMiddleware

from . import __version__
from .errors import SchemaError, TradeoffError
from .oracle import DEFAULT_SWEEP_POINTS
from .reports import (
    chain_report,
    dynamic_report,
    enumeration_report,
    infer_report,
    sensitivity_report,
    shift_report,
    static_report,
    trace_report,
)
from .scenario_io import (
    SCENARIO_FORMAT_VERSION,
    parse_chain_payload,
    parse_discrete_payload,
    parse_dynamic_payload,
    parse_frontier,
    parse_infer_payload,
    parse_shift,
    parse_static_payload,
)

__all__ = ["create_app"]


def _json_response(document: Any, status_code: int = 200) -> Response:
    return Response(
        content=json.dumps(document),
        status_code=status_code,
        media_type="application/json",
    )


def _error_response(code: str, message: str, path: str | None, status_code: int) -> Response:
    return _json_response(
        {"error": {"code": code, "message": message, "path": path}}, status_code
    )


def _pop_options(body: dict, *names: str) -> dict:
    """Extract optional non-payload fields (verify, unit_scale, ...) so the
    strict payload parsers see only scenario fields."""
    options = {}
    for name in names:
        if name in body:
            options[name] = body.pop(name)
    return options


def _number_option(options: dict, name: str, default: float) -> float:
    if name not in options:
        return default
    value = options[name]
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise SchemaError(f"{name} must be a number", path=name)
    return float(value)


def _bool_option(options: dict, name: str) -> bool:
    value = options.get(name, False)
    if not isinstance(value, bool):
        raise SchemaError(f"{name} must be a boolean", path=name)
    return value


def _int_option(options: dict, name: str, default: int) -> int:
    if name not in options:
        return default
    value = options[name]
    if isinstance(value, bool) or not isinstance(value, int):
        raise SchemaError(f"{name} must be an integer", path=name)
    return value


def _require_dict(body: Any) -> dict:
    if not isinstance(body, dict):
        raise SchemaError("request body must be a JSON object", path=None)
    return dict(body)


def create_app() -> FastAPI:
    app = FastAPI(title="tradeopt", version=__version__, docs_url=None, redoc_url=None)

    origins = [
        origin.strip()
        for origin in os.environ.get("TRADEOPT_CORS_ORIGINS", "*").split(",")
        if origin.strip()
    ]
    app.add_middleware(
        CORSMiddleware,
        allow_origins=origins,
        allow_methods=["*"],
        allow_headers=["*"],
    )

    def endpoint(path: str):
        """Register a POST handler with uniform body parsing and error mapping."""

        def register(fn: Callable[[Any], dict]):
            async def handler(request: Request) -> Response:
                raw = await request.body()
                try:
                    body = json.loads(raw) if raw else None
                except json.JSONDecodeError as err:
                    return _error_response("MALFORMED_BODY", f"invalid JSON: {err}", None, 400)
                try:
                    return _json_response(fn(body))
                except SchemaError as err:
                    return _error_response(err.code, err.message, err.path, 400)
                except TradeoffError as err:
                    return _error_response(err.code, err.message, err.path, 422)

            app.add_api_route(path, handler, methods=["POST"])
            return fn

        return register

    @endpoint("/v1/solve/static")
    def solve_static_route(body: Any) -> dict:
        body = _require_dict(body)
        options = _pop_options(body, "unit_scale", "verify", "oracle_points")
        scenario = parse_static_payload(body)
        return static_report(
            scenario,
            unit_scale=_number_option(options, "unit_scale", 1.0),
            verify=_bool_option(options, "verify"),
            oracle_points=_int_option(options, "oracle_points", DEFAULT_SWEEP_POINTS),
        )

    @endpoint("/v1/solve/dynamic")
    def solve_dynamic_route(body: Any) -> dict:
        body = _require_dict(body)
        options = _pop_options(body, "unit_scale", "verify", "oracle_points")
        scenario = parse_dynamic_payload(body)
        return dynamic_report(
            scenario,
            unit_scale=_number_option(options, "unit_scale", 1.0),
            verify=_bool_option(options, "verify"),
            oracle_points=_int_option(options, "oracle_points", DEFAULT_SWEEP_POINTS),
        )

    @endpoint("/v1/solve/chain")
    def solve_chain_route(body: Any) -> dict:
        body = _require_dict(body)
        options = _pop_options(body, "unit_scale", "verify", "oracle_points")
        chain = parse_chain_payload(body)
        return chain_report(
            chain,
            unit_scale=_number_option(options, "unit_scale", 1.0),
            verify=_bool_option(options, "verify"),
            oracle_points=_int_option(options, "oracle_points", DEFAULT_SWEEP_POINTS),
        )

    @endpoint("/v1/enumerate")
    def enumerate_route(body: Any) -> dict:
        body = _require_dict(body)
        options = _pop_options(body, "unit_scale")
        problem = parse_discrete_payload(body)
        return enumeration_report(
            problem, unit_scale=_number_option(options, "unit_scale", 1.0)
        )

    @endpoint("/v1/trace")
    def trace_route(body: Any) -> dict:
        body = _require_dict(body)
        options = _pop_options(body, "n")
        frontier = parse_frontier(body.pop("frontier", None))
        if body:
            unknown = sorted(body)[0]
            raise SchemaError(f"unknown field {unknown}", path=str(unknown))
        n = _int_option(options, "n", 0)
        if "n" not in options:
            raise SchemaError("missing required field n", path="n")
        return trace_report(frontier, n)

    @endpoint("/v1/sensitivity")
    def sensitivity_route(body: Any) -> dict:
        body = _require_dict(body)
        options = _pop_options(body, "parameter", "relative_step")
        scenario = parse_static_payload(body)
        parameter = options.get("parameter")
        if not isinstance(parameter, str):
            raise SchemaError("parameter must be a string", path="parameter")
        return sensitivity_report(
            scenario, parameter, _number_option(options, "relative_step", 1e-6)
        )

    @endpoint("/v1/infer")
    def infer_route(body: Any) -> dict:
        return infer_report(parse_infer_payload(_require_dict(body)))

    @endpoint("/v1/shift")
    def shift_route(body: Any) -> dict:
        body = _require_dict(body)
        shift = parse_shift(body.pop("shift", None))
        frontier = parse_frontier(body.pop("frontier", None))
        if body:
            unknown = sorted(body)[0]
            raise SchemaError(f"unknown field {unknown}", path=str(unknown))
        return shift_report(frontier, shift)

    @app.get("/v1/health")
    async def health() -> Response:
        return _json_response(
            {
                "status": "ok",
                "service": "tradeopt",
                "version": __version__,
                "scenario_format_version": SCENARIO_FORMAT_VERSION,
            }
        )

    return app
