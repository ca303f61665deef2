from __future__ import annotations

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tradeopt import (
    Allocation,
    DegenerateValuationError,
    InvalidPointCountError,
    NegativeParameterError,
    NonFiniteParameterError,
    NonPositiveFactorError,
    NonPositiveParameterError,
    PossibilityFrontier,
    ShiftSpec,
    Valuation,
    apply_shift,
    intercepts,
    trace_frontier,
    validate_frontier,
)

from conftest import frontiers_wide, log_uniform


class TestFrontierValidation:
    def test_accepts_valid_parameters(self):
        f = validate_frontier(10, 0.1, 10)
        assert (f.a, f.b, f.c) == (10.0, 0.1, 10.0)

    def test_rejects_zero_a(self):
        with pytest.raises(NonPositiveParameterError) as exc:
            validate_frontier(0, 1, 1)
        assert exc.value.path == "a"

    def test_rejects_negative_c(self):
        with pytest.raises(NonPositiveParameterError) as exc:
            validate_frontier(1, 1, -2)
        assert exc.value.path == "c"

    @pytest.mark.parametrize("bad", [math.nan, math.inf, -math.inf])
    def test_rejects_non_finite(self, bad):
        with pytest.raises(NonFiniteParameterError):
            validate_frontier(1, bad, 1)


class TestValuationAndAllocation:
    def test_valuation_rejects_negative_price(self):
        with pytest.raises(NegativeParameterError) as exc:
            Valuation(-1, 5)
        assert exc.value.path == "p_life"

    def test_valuation_rejects_both_zero(self):
        with pytest.raises(DegenerateValuationError):
            Valuation(0, 0)

    def test_valuation_allows_one_zero(self):
        assert Valuation(0, 6e4).p_job == 6e4

    def test_valuation_rejects_non_finite(self):
        with pytest.raises(NonFiniteParameterError):
            Valuation(math.inf, 1)

    def test_allocation_rejects_negative(self):
        with pytest.raises(NegativeParameterError):
            Allocation(-0.1, 1)


class TestIntercepts:
    def test_baseline_instance(self):
        assert intercepts(validate_frontier(10, 0.1, 10)) == (1.0, 10.0)

    def test_circle_radius(self):
        assert intercepts(validate_frontier(1, 1, 4)) == (2.0, 2.0)

    def test_direct_evaluation(self):
        lives_max, jobs_max = intercepts(validate_frontier(0.2, 1, 1))
        assert lives_max == pytest.approx(2.23606797749979, rel=1e-12)
        assert jobs_max == 1.0

    @given(frontiers_wide)
    def test_intercepts_satisfy_constraint_exactly_enough(self, f):
        lives_max, jobs_max = intercepts(f)
        assert f.contains(lives_max, 0.0)
        assert f.contains(0.0, jobs_max)


class TestTraceFrontier:
    def test_two_points_are_the_intercepts(self):
        pts = trace_frontier(validate_frontier(10, 0.1, 10), 2)
        assert [(p.lives_saved, p.jobs_saved) for p in pts] == [(1.0, 0.0), (0.0, 10.0)]

    def test_quarter_circle_midpoint(self):
        pts = trace_frontier(validate_frontier(1, 1, 1), 3)
        mid = pts[1]
        assert mid.lives_saved == pytest.approx(math.sqrt(0.5), rel=1e-12)
        assert mid.jobs_saved == pytest.approx(math.sqrt(0.5), rel=1e-12)

    def test_five_point_third_is_the_diagonal(self):
        pts = trace_frontier(validate_frontier(10, 0.1, 10), 5)
        assert pts[2].lives_saved == pytest.approx(0.7071067811865476, rel=1e-12)
        assert pts[2].jobs_saved == pytest.approx(7.0710678118654755, rel=1e-12)

    def test_rejects_single_point(self):
        with pytest.raises(InvalidPointCountError):
            trace_frontier(validate_frontier(1, 1, 1), 1)

    @given(frontiers_wide, st.integers(2, 300))
    def test_every_traced_point_is_on_the_frontier(self, f, n):
        pts = trace_frontier(f, n)
        assert len(pts) == n
        for p in pts:
            assert f.contains(p.lives_saved, p.jobs_saved)
        assert (pts[0].lives_saved, pts[0].jobs_saved) == (f.lives_intercept, 0.0)
        assert (pts[-1].lives_saved, pts[-1].jobs_saved) == (0.0, f.jobs_intercept)

    @given(frontiers_wide, st.integers(3, 300))
    def test_trace_moves_monotonically_between_intercepts(self, f, n):
        pts = trace_frontier(f, n)
        lives = [p.lives_saved for p in pts]
        jobs = [p.jobs_saved for p in pts]
        assert all(x >= y for x, y in zip(lives, lives[1:]))
        assert all(x <= y for x, y in zip(jobs, jobs[1:]))


class TestApplyShift:
    def test_level_shift_scales_c(self):
        shifted = apply_shift(validate_frontier(1, 1, 1), ShiftSpec.level(4))
        assert (shifted.a, shifted.b, shifted.c) == (1.0, 1.0, 4.0)
        assert intercepts(shifted) == (2.0, 2.0)

    def test_proportional_shift_scales_both_intercepts(self):
        shifted = apply_shift(validate_frontier(10, 0.1, 10), ShiftSpec.proportional(2))
        lives_max, jobs_max = intercepts(shifted)
        assert lives_max == pytest.approx(2.0, rel=1e-12)
        assert jobs_max == pytest.approx(20.0, rel=1e-12)

    def test_per_axis_shift_leaves_other_axis_alone(self):
        shifted = apply_shift(validate_frontier(1, 1, 1), ShiftSpec.per_axis(1, 2))
        lives_max, jobs_max = intercepts(shifted)
        assert lives_max == pytest.approx(1.0, rel=1e-12)
        assert jobs_max == pytest.approx(2.0, rel=1e-12)

    def test_rejects_non_positive_factor(self):
        with pytest.raises(NonPositiveFactorError):
            ShiftSpec.level(0)
        with pytest.raises(NonPositiveFactorError):
            ShiftSpec.per_axis(1, -2)

    def test_rejects_unknown_kind_and_wrong_arity(self):
        with pytest.raises(NonPositiveFactorError):
            ShiftSpec("sideways", (1.0,))
        with pytest.raises(NonPositiveFactorError):
            ShiftSpec("level", (1.0, 2.0))

    @given(frontiers_wide, st.sampled_from(["level", "proportional", "per_axis"]))
    def test_unit_factors_are_the_identity(self, f, kind):
        shift = ShiftSpec(kind, (1.0, 1.0) if kind == "per_axis" else (1.0,))
        assert apply_shift(f, shift) == f

    @given(frontiers_wide, log_uniform(-1, 1), log_uniform(-1, 1))
    def test_proportional_shifts_compose_multiplicatively(self, f, k1, k2):
        twice = apply_shift(apply_shift(f, ShiftSpec.proportional(k1)), ShiftSpec.proportional(k2))
        once = apply_shift(f, ShiftSpec.proportional(k1 * k2))
        for got, want in zip(intercepts(twice), intercepts(once)):
            assert got == pytest.approx(want, rel=1e-12)
