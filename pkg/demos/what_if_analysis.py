"""What-if tooling: frontier shifts, sensitivities, and implied valuations.

Three questions a decision review keeps asking: what happens if better
prevention pushes the frontier outward, which parameter is the answer most
sensitive to, and what valuation was a past decision implicitly using?

Run:  python demos/what_if_analysis.py
"""

from __future__ import annotations

from tradeopt import (
    Allocation,
    PossibilityFrontier,
    ShiftSpec,
    StaticScenario,
    Valuation,
    apply_shift,
    compare_scenarios,
    infer_valuation_ratio,
    sensitivity,
    solve_static,
)

UNIT_SCALE = 1e6

base = StaticScenario(
    PossibilityFrontier(a=10, b=0.1, c=10),
    Valuation(p_life=1_000_000, p_job=60_000),
    unit_scale=UNIT_SCALE,
)

print("--- frontier shifts: prevention technology moves the whole feasible set ---")
variants = [
    ("level x4 (broad improvement)", StaticScenario(
        apply_shift(base.frontier, ShiftSpec.level(4)), base.valuation, UNIT_SCALE)),
    ("proportional x1.5 (parallel shift)", StaticScenario(
        apply_shift(base.frontier, ShiftSpec.proportional(1.5)), base.valuation, UNIT_SCALE)),
    ("jobs-side x2 (lopsided shift)", StaticScenario(
        apply_shift(base.frontier, ShiftSpec.per_axis(1, 2)), base.valuation, UNIT_SCALE)),
    ("life price doubled", StaticScenario(
        base.frontier, Valuation(2_000_000, 60_000), UNIT_SCALE)),
]
comparison = compare_scenarios(base, variants)
print(f"  baseline: lives {comparison.base.allocation.lives_saved:.4f}M, "
      f"jobs {comparison.base.allocation.jobs_saved:.4f}M, "
      f"z ${comparison.base.z_star * UNIT_SCALE / 1e12:.3f}T")
for row in comparison.rows:
    print(f"  {row.label:36s} dlives {row.delta_lives:+8.4f}  djobs {row.delta_jobs:+8.4f}"
          f"  dz ${row.delta_z * UNIT_SCALE / 1e12:+.3f}T")

print("\n--- sensitivities: where a unit of effort buys the most ---")
for parameter in ("a", "b", "c", "p_life", "p_job"):
    estimate = sensitivity(base, parameter)
    print(f"  d/d{parameter:6s}  lives* {estimate.d_lives:+.4e}   "
          f"jobs* {estimate.d_jobs:+.4e}   z* {estimate.d_z:+.4e}")

solution = solve_static(base)
print(f"\n  (check: dz*/dc = {sensitivity(base, 'c').d_z:,.2f} "
      f"equals the shadow price {solution.multiplier:,.2f})")

print("\n--- implied valuation: reading prices off an observed decision ---")
observed = solution.allocation
ratio = infer_valuation_ratio(base.frontier, observed)
print(f"  a decision-maker who chose ({observed.lives_saved:.4f}M, {observed.jobs_saved:.4f}M)")
print(f"  on this frontier implicitly valued a life at {ratio:.2f} jobs-years")

other = Allocation(0.38461538461538464, 9.230769230769232)
print(f"  one who chose ({other.lives_saved:.4f}M, {other.jobs_saved:.4f}M) "
      f"implied only {infer_valuation_ratio(base.frontier, other):.2f}")
