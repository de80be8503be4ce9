"""Design-space sweep over the track material grid.

Evaluates all 75 (Ms, Ku, alpha) combinations at the fixed drive pair
(Jx = 9e10, Jy = 5e11 A/m^2), filters points that need more than two
repeaters or collide with the detector, and reports the best
energy-delay products.  Writes design_sweep.png and dse.csv next to
this script.
"""

from pathlib import Path

from skyrmion_logic import (Objective, SweepSpec, best_summary,
                            default_config, results_to_csv, run_sweep,
                            select_best)

HERE = Path(__file__).resolve().parent

cfg = default_config()
spec = SweepSpec()
results = run_sweep(spec, cfg, workers=4)

feasible = [r for r in results if r.feasible]
print(f"{len(feasible)} of {len(results)} design points are feasible\n")

print("feasible (Ku, alpha) slices (feasibility is Ms-independent):")
seen = sorted({(r.ku, r.alpha) for r in feasible})
for ku, alpha in seen:
    r = next(r for r in feasible if (r.ku, r.alpha) == (ku, alpha)
             and r.ms == 1e5)
    print(f"  Ku = {ku:.0e}, alpha = {alpha:4.2f}: p = {r.p}, "
          f"v_x(Ms=1e5) = {r.v_x:6.1f} m/s, "
          f"EDP_prop = {r.edp_prop:.3e} J s")

print()
print(best_summary(results, cfg))
best = select_best(results, Objective.EDP_PROP, cfg)
print(f"note: the winner is repeater-free (p = {best.p}); every repeater "
      f"adds a fixed transistor switching quantum that outweighs its "
      f"delay gain on this grid")

(HERE / "dse.csv").write_text(results_to_csv(results))
print(f"\nwrote {HERE / 'dse.csv'}")

try:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    print("matplotlib unavailable; skipping the figure")
else:
    fig, axes = plt.subplots(1, 3, figsize=(11, 3.2), sharey=True)
    kus = sorted({r.ku for r in results})
    alphas = sorted({r.alpha for r in results})
    mss = sorted({r.ms for r in results})
    for ax, ku in zip(axes, kus):
        for ms in mss:
            pts = [(r.alpha, r.v_x) for r in feasible
                   if r.ku == ku and r.ms == ms]
            if pts:
                pts.sort()
                ax.plot([p[0] for p in pts], [p[1] for p in pts],
                        "o-", label=f"Ms={ms:.0e}")
        bad = sorted({r.alpha for r in results
                      if r.ku == ku and not r.feasible})
        for alpha in bad:
            ax.plot(alpha, 0, "kv", ms=6)
        ax.set_title(f"Ku = {ku:.0e} J/m^3")
        ax.set_xlabel("alpha")
        ax.set_xticks(alphas)
    axes[0].set_ylabel("v_x (m/s)")
    axes[1].legend(fontsize=7)  # the first Ku column can be fully infeasible
    fig.suptitle("net velocity over the material grid "
                 "(triangles: infeasible columns)")
    fig.tight_layout()
    fig.savefig(HERE / "design_sweep.png", dpi=150)
    print(f"wrote {HERE / 'design_sweep.png'}")
