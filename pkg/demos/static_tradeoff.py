"""One-period lives-vs-jobs optimization, end to end.

Walks through the core workflow: build an elliptic possibility frontier,
price the two outcomes, solve for the best attainable mix in closed form,
and double-check the answer with the brute-force sweep oracle. Writes a
PNG of the frontier/tangent construction if matplotlib is available.

Run:  python demos/static_tradeoff.py
"""

from __future__ import annotations

from tradeopt import (
    PossibilityFrontier,
    StaticScenario,
    Valuation,
    optimality_ratio,
    oracle_static,
    solve_static,
    trace_frontier,
    verify_kkt,
)
from tradeopt.reports import tangent_segment

# Allocation units are millions (of lives / of jobs); prices are dollars per
# single life or job, so z comes out in dollar-millions.
UNIT_SCALE = 1e6

frontier = PossibilityFrontier(a=10, b=0.1, c=10)
valuation = Valuation(p_life=1_000_000, p_job=60_000)
scenario = StaticScenario(frontier, valuation, unit_scale=UNIT_SCALE)

print("The feasible set: a quarter-ellipse of (lives saved, jobs saved) mixes.")
print(f"  going all-in on lives saves at most {frontier.lives_intercept:.4f} million lives")
print(f"  going all-in on jobs  saves at most {frontier.jobs_intercept:.4f} million jobs")
print()

print("A few points along the frontier (each is attainable and efficient):")
for point in trace_frontier(frontier, 5):
    print(f"  lives {point.lives_saved:7.4f}   jobs {point.jobs_saved:7.4f}")
print()

solution = solve_static(scenario)
lives, jobs = solution.allocation.lives_saved, solution.allocation.jobs_saved
print(f"With a life valued at ${valuation.p_life:,.0f} and a job at ${valuation.p_job:,.0f},")
print("the closed-form optimum is the point where the benefit line is tangent")
print("to the frontier:")
print(f"  lives saved*  {lives:.4f} million")
print(f"  jobs saved*   {jobs:.4f} million")
print(f"  jobs/lives ratio at the optimum: {jobs / lives:.4f}"
      f" (= 1/{optimality_ratio(scenario):.4f} from the optimality condition)")
print(f"  maximized benefit z* = ${solution.z_star * UNIT_SCALE:,.0f}")
print(f"  shadow price of the frontier level: {solution.multiplier:,.2f}")
print("    (raising c by one unit is worth that many dollar-millions)")
print()

report = verify_kkt(scenario, solution)
print(f"First-order conditions at the optimum: max residual {report.max_residual:.2e}"
      f" -> {'PASS' if report.passed else 'FAIL'}")

sweep = oracle_static(frontier, valuation, n_points=1_000_000)
gap = (solution.z_star - sweep.best_z) / solution.z_star
print(f"Brute-force sweep over 1e6 frontier points agrees: relative gap {gap:.2e}")

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    print("\nmatplotlib not installed; skipping the plot")
else:
    points = trace_frontier(frontier, 200)
    tangent = tangent_segment(scenario, solution.z_star)
    fig, ax = plt.subplots(figsize=(6, 4.5))
    ax.plot([p.lives_saved for p in points], [p.jobs_saved for p in points],
            label="possibility frontier")
    ax.plot([p["lives_saved"] for p in tangent], [p["jobs_saved"] for p in tangent],
            "--", label="benefit level line at z*")
    ax.plot([lives], [jobs], "o", label="optimum")
    ax.set_xlabel("lives saved (millions)")
    ax.set_ylabel("jobs saved (millions)")
    ax.set_ylim(0, frontier.jobs_intercept * 1.15)
    ax.set_xlim(0, frontier.lives_intercept * 1.15)
    ax.legend()
    fig.tight_layout()
    fig.savefig("demos/static_tradeoff.png", dpi=120)
    print("\nwrote demos/static_tradeoff.png")
