"""Skyrmion trajectory on the racetrack, with and without a repeater.

Drives the default design point (Ms = 1e5 A/m, Ku = 8e5 J/m^3,
alpha = 0.25) at Jx = 9e10 A/m^2.  On the bare track the gyrotropic
deflection carries the skyrmion into the edge margin; with the planned
repeater it is steered back and completes the 200 nm run.

Writes trajectory_demo.png and trajectory.csv next to this script.
"""

from pathlib import Path

import numpy as np

from skyrmion_logic import (RepeaterLayout, default_config, numeric_oracle,
                            plan, simulate, steady_state_deflection,
                            thiele_constants, trajectory_to_csv)

HERE = Path(__file__).resolve().parent

cfg = default_config()
tc = thiele_constants(cfg.material, cfg.geometry, cfg.drive, cfg.constants)

print(f"relaxation time tau      : {tc.tau * 1e12:8.2f} ps")
print(f"steady-state deflection  : {steady_state_deflection(tc) * 1e9:8.2f} nm")
print(f"track half-width - r_sk  : "
      f"{(0.5 * cfg.geometry.w_pmafm - cfg.geometry.r_sk) * 1e9:8.2f} nm")

# bare track: the deflection kills the run
bare = simulate(tc, cfg.geometry, RepeaterLayout(0, (), True))
print(f"\nbare track outcome       : {bare.outcome.value} "
      f"at x = {bare.final_state.x * 1e9:.1f} nm")

# planned track: one repeater placed where the trigger ordinate is crossed
layout = plan(tc, cfg.geometry)
print(f"planned repeaters        : p = {layout.p} at "
      + ", ".join(f"[{a * 1e9:.1f}, {b * 1e9:.1f}] nm"
                  for a, b in layout.intervals))
traj = simulate(tc, cfg.geometry, layout)
print(f"planned track outcome    : {traj.outcome.value} in "
      f"{traj.t_prop * 1e12:.1f} ps "
      f"({cfg.geometry.l_pmafm / traj.t_prop:.0f} m/s average)")

# the independent RK4 integration lands on the same path
oracle = numeric_oracle(tc, cfg.geometry, layout, dt=1e-14)
err = max(max(abs(np.array([s.x for s in oracle.samples])
               - np.array([traj.position_at(tc, s.t_global)[0]
                           for s in oracle.samples]))),
          max(abs(np.array([s.y for s in oracle.samples])
               - np.array([traj.position_at(tc, s.t_global)[1]
                           for s in oracle.samples]))))
print(f"closed form vs RK4       : max deviation {err:.2e} m")

(HERE / "trajectory.csv").write_text(trajectory_to_csv(traj))
print(f"\nwrote {HERE / 'trajectory.csv'}")

try:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    print("matplotlib unavailable; skipping the figure")
else:
    fig, ax = plt.subplots(figsize=(8, 3))
    for t, style, label in ((bare, "r--", "bare track"),
                            (traj, "b-", f"planned, p={layout.p}")):
        xs = np.array([s.x for s in t.samples]) * 1e9
        ys = np.array([s.y for s in t.samples]) * 1e9
        ax.plot(xs, ys, style, label=f"{label} ({t.outcome.value})")
    for a, b in layout.intervals:
        ax.axvspan(a * 1e9, b * 1e9, color="0.85", label=None)
    half = 0.5 * cfg.geometry.w_pmafm * 1e9
    for y in (half, -half):
        ax.axhline(y, color="k", lw=1)
    ax.axhline(half - cfg.geometry.r_sk * 1e9, color="k", ls=":", lw=0.8)
    ax.set_xlabel("x (nm)")
    ax.set_ylabel("y (nm)")
    ax.set_ylim(-half - 3, half + 3)
    ax.legend(loc="lower right", fontsize=8)
    fig.tight_layout()
    fig.savefig(HERE / "trajectory_demo.png", dpi=150)
    print(f"wrote {HERE / 'trajectory_demo.png'}")
