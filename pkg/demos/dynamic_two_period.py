"""Two-period planning with cross-temporal constraints and discounting.

This year's jobs trade off against next year's lives (more activity now,
more spread later) and this year's lives trade off against next year's
jobs (lockdowns now, less demand later). Each constraint couples a
disjoint variable pair, so the problem splits into two one-period
problems once period-2 prices are discounted -- which this demo verifies,
along with the closed forms, before extending the idea to a four-period
chain.

Run:  python demos/dynamic_two_period.py
"""

from __future__ import annotations

from tradeopt import (
    ChainScenario,
    CrossConstraint,
    DynamicScenario,
    decouple_dynamic,
    dynamic_optimality_ratios,
    oracle_dynamic,
    solve_chain,
    solve_dynamic,
    solve_static,
    verify_kkt_dynamic,
)

UNIT_SCALE = 1e6

scenario = DynamicScenario.from_params(
    # constraint 1: next-year lives vs this-year jobs
    0.2, 1.0, 1.0,
    # constraint 2: this-year lives vs next-year jobs
    1.0, 0.1, 2.0,
    # prices: both periods value a life at $1M and a job-year at $60k
    1_000_000, 60_000, 1_000_000, 60_000,
    # social discount rate
    0.02,
)

solution = solve_dynamic(scenario)
alloc = solution.allocations
print("Optimal two-period plan (allocations in millions):")
print(f"  period 1: save {alloc.lives_1:.4f}M lives and {alloc.jobs_1:.4f}M jobs")
print(f"  period 2: save {alloc.lives_2:.4f}M lives and {alloc.jobs_2:.4f}M jobs")
print(f"  present-value benefit: ${solution.z_star * UNIT_SCALE / 1e12:.4f} trillion")

first, second = dynamic_optimality_ratios(scenario)
print(f"\nOptimality conditions: lives_1/jobs_2 = {first:.4f}, lives_2/jobs_1 = {second:.4f}")

report = verify_kkt_dynamic(scenario, solution)
print(f"All six first-order conditions hold to {report.max_residual:.2e}")

_, sweep_total = oracle_dynamic(scenario, 1_000_000)
print(f"Sweep oracle total matches to {abs(sweep_total - solution.z_star) / solution.z_star:.2e}")

print("\n--- the problem is secretly two independent one-period problems ---")
sub2, sub1 = decouple_dynamic(scenario)
sol2, sol1 = solve_static(sub2), solve_static(sub1)
print(f"  subproblem of constraint 2 (P1 lives vs P2 jobs): ({sol2.allocation.lives_saved:.4f}, {sol2.allocation.jobs_saved:.4f})")
print(f"  subproblem of constraint 1 (P2 lives vs P1 jobs): ({sol1.allocation.lives_saved:.4f}, {sol1.allocation.jobs_saved:.4f})")
print(f"  z1 + z2 = {(sol1.z_star + sol2.z_star) * UNIT_SCALE / 1e12:.4f} trillion (same as above)")

print("\n--- discounting the future makes the whole plan worth less ---")
for rate in (0.0, 0.02, 0.05, 0.10):
    z = solve_dynamic(
        DynamicScenario(
            constraint1=scenario.constraint1,
            constraint2=scenario.constraint2,
            p_life_1=scenario.p_life_1,
            p_job_1=scenario.p_job_1,
            p_life_2=scenario.p_life_2,
            p_job_2=scenario.p_job_2,
            discount_rate=rate,
        )
    ).z_star
    print(f"  i = {rate:4.0%}:  z* = ${z * UNIT_SCALE / 1e12:.4f} trillion")

print("\n--- and the same machinery runs a longer horizon ---")
chain = ChainScenario(
    constraints=(
        CrossConstraint(1.0, 0.1, 2.0, lives_period=1, jobs_period=2),
        CrossConstraint(1.0, 0.1, 2.0, lives_period=2, jobs_period=3),
        CrossConstraint(1.0, 0.1, 2.0, lives_period=3, jobs_period=4),
    ),
    lives_prices=(1_000_000,) * 4,
    jobs_prices=(60_000,) * 4,
    discount_rate=0.02,
    horizon=4,
)
chain_solution = solve_chain(chain)
print("  lives@t jobs@t   lives*    jobs*     present-value z")
for constraint, sol in zip(chain.constraints, chain_solution.per_constraint):
    print(
        f"   {constraint.lives_period:>5}  {constraint.jobs_period:>5}"
        f"   {sol.allocation.lives_saved:7.4f}  {sol.allocation.jobs_saved:7.4f}"
        f"   ${sol.z_star * UNIT_SCALE / 1e12:.4f} trillion"
    )
print(f"  four-period total: ${chain_solution.z_total * UNIT_SCALE / 1e12:.4f} trillion")
