"""End-to-end acceptance suite.

One test per acceptance criterion, each printing a ``[criterion N] PASS/FAIL``
line (run with ``pytest tests/test_acceptance.py -v -s`` to see them). All
tolerances are pinned here; nothing is tuned at runtime.
"""

from __future__ import annotations

import functools
import json
import math
import time
from pathlib import Path

import numpy as np
import pytest
from fastapi.testclient import TestClient

from tradeopt import (
    Allocation,
    DynamicScenario,
    PossibilityFrontier,
    StaticScenario,
    Valuation,
    decouple_dynamic,
    dynamic_optimality_ratios,
    enumerate_discrete,
    infer_valuation_ratio,
    oracle_dynamic,
    oracle_static,
    solve_dynamic,
    solve_static,
    verify_kkt,
    verify_kkt_dynamic,
)
from tradeopt.cli import main as cli_main
from tradeopt.service import create_app

SCENARIO_DIR = Path(__file__).resolve().parent.parent / "scenarios"

SIX_POINTS = [(0.0, 10.0), (0.2, 9.8), (0.4, 9.2), (0.6, 8.0), (0.8, 6.0), (1.0, 0.0)]


def criterion(number: int, description: str):
    def decorate(fn):
        @functools.wraps(fn)
        def wrapper(*args, **kwargs):
            try:
                result = fn(*args, **kwargs)
            except BaseException:
                print(f"\n[criterion {number}] FAIL  {description}", flush=True)
                raise
            print(f"\n[criterion {number}] PASS  {description}", flush=True)
            return result

        return wrapper

    return decorate


def timed_under(limit_seconds: float, fn, *args, repeats: int = 5):
    """Best-of-N wall time; returns the result and asserts the time bound."""
    best = math.inf
    result = None
    for _ in range(repeats):
        start = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - start)
    assert best < limit_seconds, f"took {best * 1e3:.3f} ms"
    return result


def rel_err(value: float, reference: float) -> float:
    return abs(value - reference) / abs(reference)


def rel_or_zero(value: float, reference: float) -> float:
    if reference == 0:
        return abs(value)
    return rel_err(value, reference)


# ---------------------------------------------------------------------------
# randomized scenario pools (deterministic seeds), shared by criteria 4-6
# ---------------------------------------------------------------------------


def random_static_scenarios(count: int, seed: int) -> list[StaticScenario]:
    rng = np.random.default_rng(seed)
    scenarios = []
    for _ in range(count):
        a, b, c = (10.0 ** e for e in rng.uniform(-3, 3, 3))
        p_life, p_job = rng.uniform(0.0, 1e7, 2)
        corner = rng.random()
        if corner < 0.05:
            p_life = 0.0
        elif corner < 0.10:
            p_job = 0.0
        if p_life == 0.0 and p_job == 0.0:
            p_job = float(rng.uniform(1.0, 1e7))
        scenarios.append(
            StaticScenario(PossibilityFrontier(a, b, c), Valuation(p_life, p_job))
        )
    return scenarios


def random_dynamic_scenarios(count: int, seed: int) -> list[DynamicScenario]:
    rng = np.random.default_rng(seed)
    scenarios = []
    for _ in range(count):
        params = [10.0 ** e for e in rng.uniform(-3, 3, 6)]
        prices = list(rng.uniform(0.0, 1e7, 4))
        if rng.random() < 0.10:
            prices[int(rng.integers(0, 4))] = 0.0  # at most one zero: pairs stay valid
        rate = float(rng.uniform(-0.499, 0.499))
        scenarios.append(DynamicScenario.from_params(*params, *prices, rate))
    return scenarios


# ---------------------------------------------------------------------------
# criteria
# ---------------------------------------------------------------------------


@criterion(1, "six-point discrete enumeration is exact and picks (0.8, 6)")
def test_criterion_1_discrete_enumeration():
    points = [Allocation(l, j) for l, j in SIX_POINTS]
    valuation = Valuation(1e6, 6e4)
    result = timed_under(1e-3, enumerate_discrete, points, valuation)
    assert [row.z for row in result.rows] == [
        600_000.0, 788_000.0, 952_000.0, 1_080_000.0, 1_160_000.0, 1_000_000.0,
    ]
    # in currency units (allocation units are millions): billions, exactly
    assert [row.z * 1e6 for row in result.rows] == [
        600e9, 788e9, 952e9, 1080e9, 1160e9, 1000e9,
    ]
    best = result.best.allocation
    assert (best.lives_saved, best.jobs_saved) == (0.8, 6.0)
    assert not result.tied


@criterion(2, "one-period closed form reproduces both reference price sets")
def test_criterion_2_static_reproduction():
    frontier = PossibilityFrontier(10, 0.1, 10)

    first = timed_under(1e-3, solve_static, StaticScenario(frontier, Valuation(1e6, 6e4)))
    assert rel_err(first.allocation.lives_saved, 0.8575) <= 1e-3
    assert rel_err(first.allocation.jobs_saved, 5.1450) <= 1e-3
    assert rel_err(first.z_star * 1e6, 1.166e12) <= 1e-3

    second = solve_static(StaticScenario(frontier, Valuation(5e5, 1.2e5)))
    assert rel_err(second.allocation.lives_saved, 0.3846) <= 1e-3
    assert rel_err(second.allocation.jobs_saved, 9.2308) <= 1e-3
    assert rel_err(second.z_star * 1e6, 1.3e12) <= 1e-3


@criterion(3, "two-period closed form reproduces both reference price sets at i=0.02")
def test_criterion_3_dynamic_reproduction():
    first = timed_under(
        1e-3,
        solve_dynamic,
        DynamicScenario.from_params(0.2, 1, 1, 1, 0.1, 2, 1e6, 6e4, 1e6, 6e4, 0.02),
    )
    alloc = first.allocations
    assert rel_err(alloc.lives_1, 1.3903) <= 1e-3
    assert rel_err(alloc.lives_2, 2.2352) <= 1e-3
    # 0.0273 is a truncated 4-decimal figure (the exact value is 0.027359...),
    # so on top of the 2e-3 relative budget allow the display half-quantum.
    assert abs(alloc.jobs_1 - 0.0273) <= 2e-3 * 0.0273 + 0.5e-4
    assert rel_err(alloc.jobs_2, 0.8178) <= 1e-3
    assert rel_err(first.z_star * 1e6, 3.631e12) <= 1e-3

    ratios = dynamic_optimality_ratios(
        DynamicScenario.from_params(0.2, 1, 1, 1, 0.1, 2, 1e6, 6e4, 1e6, 6e4, 0.02)
    )
    assert rel_err(ratios[0], 1.7) <= 1e-2
    assert rel_err(ratios[1], 81.7) <= 1e-2

    second = solve_dynamic(
        DynamicScenario.from_params(0.2, 1, 1, 1, 0.1, 2, 5e5, 1.2e5, 5e5, 1.2e5, 0.02)
    )
    alloc = second.allocations
    assert rel_err(alloc.lives_1, 1.1345) <= 1e-3
    assert rel_err(alloc.lives_2, 2.2227) <= 1e-3
    assert rel_err(alloc.jobs_1, 0.1088) <= 1e-3
    assert rel_err(alloc.jobs_2, 2.6696) <= 1e-3
    assert rel_err(second.z_star * 1e6, 1.984e12) <= 1e-3


@criterion(4, "sweep oracle agrees with every closed form over 2000 random scenarios")
def test_criterion_4_oracle_equivalence():
    start = time.perf_counter()
    n_points = 100_000

    for scenario in random_static_scenarios(1000, seed=20_240_401):
        z_star = solve_static(scenario).z_star
        sweep = oracle_static(scenario.frontier, scenario.valuation, n_points)
        assert abs(sweep.best_z - z_star) <= 1e-6 * z_star
        assert sweep.best_z <= z_star * (1 + 1e-9)

    for scenario in random_dynamic_scenarios(1000, seed=20_240_402):
        z_star = solve_dynamic(scenario).z_star
        _, total = oracle_dynamic(scenario, n_points)
        assert abs(total - z_star) <= 1e-6 * z_star
        assert total <= z_star * (1 + 1e-9)

    elapsed = time.perf_counter() - start
    assert elapsed < 60.0, f"oracle pass took {elapsed:.1f} s"


@criterion(5, "all first-order conditions hold to 1e-9 across the randomized set")
def test_criterion_5_kkt_suite():
    for scenario in random_static_scenarios(1000, seed=20_240_403):
        solution = solve_static(scenario)
        report = verify_kkt(scenario, solution)
        assert report.max_residual <= 1e-9
        assert report.multiplier_nonnegative
        if scenario.valuation.p_life > 0 and scenario.valuation.p_job > 0:
            assert solution.multiplier > 0

    for scenario in random_dynamic_scenarios(1000, seed=20_240_404):
        solution = solve_dynamic(scenario)
        report = verify_kkt_dynamic(scenario, solution)
        assert report.max_residual <= 1e-9
        assert report.multipliers_nonnegative
        if min(scenario.p_life_1, scenario.p_job_1, scenario.p_life_2, scenario.p_job_2) > 0:
            assert solution.multipliers[0] > 0 and solution.multipliers[1] > 0


@criterion(6, "structural identities: decoupling, scaling, envelope, inversion, limits")
def test_criterion_6_structural_properties():
    # decoupling equivalence at 1e-12
    for scenario in random_dynamic_scenarios(200, seed=20_240_405):
        dyn = solve_dynamic(scenario)
        sub2, sub1 = decouple_dynamic(scenario)
        sol2, sol1 = solve_static(sub2), solve_static(sub1)
        assert rel_or_zero(sol2.allocation.lives_saved, dyn.allocations.lives_1) <= 1e-12
        assert rel_or_zero(sol2.allocation.jobs_saved, dyn.allocations.jobs_2) <= 1e-12
        assert rel_or_zero(sol1.allocation.lives_saved, dyn.allocations.lives_2) <= 1e-12
        assert rel_or_zero(sol1.allocation.jobs_saved, dyn.allocations.jobs_1) <= 1e-12
        assert rel_err(sol1.z_star + sol2.z_star, dyn.z_star) <= 1e-12

    rng = np.random.default_rng(20_240_406)
    for scenario in random_static_scenarios(200, seed=20_240_407):
        if scenario.valuation.p_life == 0 or scenario.valuation.p_job == 0:
            continue
        base = solve_static(scenario)

        # price-scale invariance of the argmax
        k = float(10.0 ** rng.uniform(-3, 3))
        scaled = solve_static(
            StaticScenario(
                scenario.frontier,
                Valuation(scenario.valuation.p_life * k, scenario.valuation.p_job * k),
            )
        )
        assert rel_err(scaled.allocation.lives_saved, base.allocation.lives_saved) <= 1e-12
        assert rel_err(scaled.allocation.jobs_saved, base.allocation.jobs_saved) <= 1e-12
        assert rel_err(scaled.z_star, base.z_star * k) <= 1e-12

        # sqrt(c) scaling law
        m = float(10.0 ** rng.uniform(-2, 2))
        raised = solve_static(
            StaticScenario(
                PossibilityFrontier(
                    scenario.frontier.a, scenario.frontier.b, scenario.frontier.c * m
                ),
                scenario.valuation,
            )
        )
        assert rel_err(raised.allocation.lives_saved, base.allocation.lives_saved * math.sqrt(m)) <= 1e-12
        assert rel_err(raised.z_star, base.z_star * math.sqrt(m)) <= 1e-12

        # inversion of the optimality condition round-trips the price ratio
        ratio = infer_valuation_ratio(scenario.frontier, base.allocation)
        assert rel_err(ratio, scenario.valuation.p_life / scenario.valuation.p_job) <= 1e-9

    # envelope: central-difference dz*/dc matches the multiplier at 1e-4
    for scenario in random_static_scenarios(100, seed=20_240_408):
        solution = solve_static(scenario)
        c = scenario.frontier.c
        h = 1e-6 * c
        up = solve_static(
            StaticScenario(
                PossibilityFrontier(scenario.frontier.a, scenario.frontier.b, c + h),
                scenario.valuation,
            )
        )
        down = solve_static(
            StaticScenario(
                PossibilityFrontier(scenario.frontier.a, scenario.frontier.b, c - h),
                scenario.valuation,
            )
        )
        assert rel_err((up.z_star - down.z_star) / (2 * h), solution.multiplier) <= 1e-4

    # extreme life-price limit approaches the lives intercept monotonically
    frontier = PossibilityFrontier(10, 0.1, 10)
    lives = [
        solve_static(StaticScenario(frontier, Valuation(10.0 ** k, 1.0))).allocation.lives_saved
        for k in range(3, 10)
    ]
    assert all(x <= y for x, y in zip(lives, lives[1:]))
    assert all(x < y for x, y in zip(lives[:5], lives[1:6]))  # strict while resolvable
    assert all(v <= frontier.lives_intercept for v in lives)
    assert rel_err(lives[-1], frontier.lives_intercept) <= 1e-12


@criterion(7, "CLI and service emit identical numerics; failures carry field paths")
def test_criterion_7_interface_conformance(capsys, tmp_path):
    client = TestClient(create_app())

    cases = [
        ("static_baseline.json", ["solve"], "/v1/solve/static"),
        ("two_period_baseline.json", ["solve"], "/v1/solve/dynamic"),
        ("six_point_enumeration.json", ["enumerate"], "/v1/enumerate"),
    ]
    for name, command, route in cases:
        path = SCENARIO_DIR / name
        assert cli_main([*command, str(path), "--json"]) == 0
        cli_output = capsys.readouterr().out.strip()
        document = json.loads(path.read_text())
        body = dict(document["payload"], unit_scale=document["unit_scale"])
        response = client.post(route, json=body)
        assert response.status_code == 200
        assert json.loads(cli_output) == response.json()
        assert cli_output.encode() == response.content  # byte-identical numerics

    # domain violation: named path, exit 2 / HTTP 422
    bad = json.loads((SCENARIO_DIR / "static_baseline.json").read_text())
    bad["payload"]["frontier"]["a"] = 0
    bad_path = tmp_path / "bad.json"
    bad_path.write_text(json.dumps(bad))
    assert cli_main(["solve", str(bad_path)]) == 2
    assert "frontier.a" in capsys.readouterr().err
    response = client.post("/v1/solve/static", json=bad["payload"])
    assert response.status_code == 422
    assert response.json()["error"]["code"] == "NON_POSITIVE_PARAMETER"
    assert response.json()["error"]["path"] == "frontier.a"

    # schema violation: unknown field, exit 2 / HTTP 400
    unknown = json.loads((SCENARIO_DIR / "static_baseline.json").read_text())
    unknown["payload"]["frontier"]["slope"] = 1
    unknown_path = tmp_path / "unknown.json"
    unknown_path.write_text(json.dumps(unknown))
    assert cli_main(["solve", str(unknown_path)]) == 2
    assert "frontier.slope" in capsys.readouterr().err
    response = client.post("/v1/solve/static", json=unknown["payload"])
    assert response.status_code == 400
    assert response.json()["error"]["path"] == "frontier.slope"

    # I/O failure: exit 3; malformed service body: HTTP 400
    assert cli_main(["solve", str(tmp_path / "missing.json")]) == 3
    capsys.readouterr()
    response = client.post(
        "/v1/solve/static", content=b"{", headers={"content-type": "application/json"}
    )
    assert response.status_code == 400
    assert response.json()["error"]["code"] == "MALFORMED_BODY"
