"""Scoring a handful of candidate allocations instead of a whole frontier.

When the feasible set is just a short list of policy options, ranking them
by monetarized benefit is a table lookup. Same valuation logic as the
continuous solver, none of the calculus.

Run:  python demos/discrete_enumeration.py
"""

from __future__ import annotations

from tradeopt import Allocation, Valuation, enumerate_discrete

UNIT_SCALE = 1e6  # allocations in millions

candidates = [
    Allocation(0.0, 10.0),
    Allocation(0.2, 9.8),
    Allocation(0.4, 9.2),
    Allocation(0.6, 8.0),
    Allocation(0.8, 6.0),
    Allocation(1.0, 0.0),
]
valuation = Valuation(p_life=1_000_000, p_job=60_000)

result = enumerate_discrete(candidates, valuation)

print("   #   lives (M)   jobs (M)   benefit")
for i, row in enumerate(result.rows, start=1):
    marker = "  <- best" if i - 1 == result.best_index else ""
    print(
        f"  {i:>2}   {row.allocation.lives_saved:>8.1f}   {row.allocation.jobs_saved:>8.1f}"
        f"   ${row.z * UNIT_SCALE / 1e9:,.0f} billion{marker}"
    )

if result.tied:
    print("\n(best benefit is tied; the mix with more lives saved wins)")

best = result.best
print(
    f"\nBest of the six: save {best.allocation.lives_saved:.1f}M lives and "
    f"{best.allocation.jobs_saved:.1f}M jobs for ${best.z * UNIT_SCALE / 1e12:.2f} trillion."
)
