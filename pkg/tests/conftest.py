from __future__ import annotations

import pytest
from hypothesis import strategies as st

from tradeopt import (
    DynamicScenario,
    PossibilityFrontier,
    StaticScenario,
    Valuation,
)

# ---------------------------------------------------------------------------
# Reference instances used across the suite. Expected solution values are
# frozen from an independent high-precision evaluation of the first-order
# conditions (40-digit arithmetic), not from the solver under test.
# ---------------------------------------------------------------------------

STATIC_BASELINE = dict(a=10.0, b=0.1, c=10.0, p_life=1e6, p_job=6e4)
STATIC_BASELINE_LIVES = 0.8574929257125442
STATIC_BASELINE_JOBS = 5.1449575542752655
STATIC_BASELINE_MULTIPLIER = 58309.518948453006
STATIC_BASELINE_Z = 1166190.37896906

STATIC_ALT = dict(a=10.0, b=0.1, c=10.0, p_life=5e5, p_job=1.2e5)
STATIC_ALT_LIVES = 0.38461538461538464
STATIC_ALT_JOBS = 9.230769230769232
STATIC_ALT_Z = 1.3e6

DYNAMIC_BASELINE = dict(
    a1=0.2, b1=1.0, c1=1.0, a2=1.0, b2=0.1, c2=2.0,
    p_life_1=1e6, p_job_1=6e4, p_life_2=1e6, p_job_2=6e4,
    discount_rate=0.02,
)
DYNAMIC_BASELINE_LIVES_1 = 1.3903633941862021
DYNAMIC_BASELINE_LIVES_2 = 2.235230941885881
DYNAMIC_BASELINE_JOBS_1 = 0.027359226728683184
DYNAMIC_BASELINE_JOBS_2 = 0.8178608201095307
DYNAMIC_BASELINE_Z = 3631517.2919982104

DYNAMIC_ALT = dict(
    a1=0.2, b1=1.0, c1=1.0, a2=1.0, b2=0.1, c2=2.0,
    p_life_1=5e5, p_job_1=1.2e5, p_life_2=5e5, p_job_2=1.2e5,
    discount_rate=0.02,
)
DYNAMIC_ALT_LIVES_1 = 1.1345946952521997
DYNAMIC_ALT_JOBS_1 = 0.10882765874565843
DYNAMIC_ALT_LIVES_2 = 2.222787147582893
DYNAMIC_ALT_JOBS_2 = 2.6696345770639995
DYNAMIC_ALT_Z = 1984032.8657335457


@pytest.fixture
def static_baseline() -> StaticScenario:
    p = STATIC_BASELINE
    return StaticScenario(
        PossibilityFrontier(p["a"], p["b"], p["c"]),
        Valuation(p["p_life"], p["p_job"]),
        unit_scale=1e6,
    )


@pytest.fixture
def static_alt() -> StaticScenario:
    p = STATIC_ALT
    return StaticScenario(
        PossibilityFrontier(p["a"], p["b"], p["c"]),
        Valuation(p["p_life"], p["p_job"]),
        unit_scale=1e6,
    )


@pytest.fixture
def dynamic_baseline() -> DynamicScenario:
    return DynamicScenario.from_params(**DYNAMIC_BASELINE)


@pytest.fixture
def dynamic_alt() -> DynamicScenario:
    return DynamicScenario.from_params(**DYNAMIC_ALT)


# ---------------------------------------------------------------------------
# Hypothesis strategies. "Wide" ranges stress conditioning; "moderate" ranges
# are for strict-inequality properties that float resolution could blur at
# the extremes.
# ---------------------------------------------------------------------------


def log_uniform(lo_exp: float, hi_exp: float) -> st.SearchStrategy[float]:
    return st.floats(lo_exp, hi_exp).map(lambda e: 10.0 ** e)


frontiers_wide = st.builds(
    PossibilityFrontier, log_uniform(-3, 3), log_uniform(-3, 3), log_uniform(-3, 3)
)
frontiers_moderate = st.builds(
    PossibilityFrontier, log_uniform(-2, 2), log_uniform(-2, 2), log_uniform(-2, 2)
)
valuations_wide = st.builds(Valuation, log_uniform(-2, 7), log_uniform(-2, 7))
valuations_moderate = st.builds(Valuation, log_uniform(1, 5), log_uniform(1, 5))

static_scenarios_wide = st.builds(StaticScenario, frontiers_wide, valuations_wide)
static_scenarios_moderate = st.builds(
    StaticScenario, frontiers_moderate, valuations_moderate
)

discount_rates = st.floats(-0.49, 0.49)

dynamic_scenarios_wide = st.builds(
    DynamicScenario.from_params,
    log_uniform(-3, 3), log_uniform(-3, 3), log_uniform(-3, 3),
    log_uniform(-3, 3), log_uniform(-3, 3), log_uniform(-3, 3),
    log_uniform(-2, 7), log_uniform(-2, 7), log_uniform(-2, 7), log_uniform(-2, 7),
    discount_rates,
)
