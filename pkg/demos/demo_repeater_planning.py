"""How the repeater count grows with the drive current density.

Higher Jx moves the skyrmion faster but deflects it toward the edge
sooner, so more corrective repeaters are needed; each repeater costs an
extra drive transistor.  The planner places repeaters just in time,
where the deflection crosses the trigger ordinate.
"""

from dataclasses import replace

from skyrmion_logic import (default_config, plan, plan_equal_spacing,
                            simulate, thiele_constants)

cfg = default_config()

print("Jx (A/m^2)   p  feasible  outcome      t_prop     v_avg   intervals (nm)")
for jx in (5e10, 6.5e10, 8e10, 9e10, 1.05e11, 1.2e11):
    drive = replace(cfg.drive, jx=jx)
    tc = thiele_constants(cfg.material, cfg.geometry, drive, cfg.constants)
    layout = plan(tc, cfg.geometry)
    if layout.feasible:
        traj = simulate(tc, cfg.geometry, layout)
        spans = " ".join(f"[{a * 1e9:.0f},{b * 1e9:.0f}]"
                         for a, b in layout.intervals) or "-"
        print(f"{jx:10.2e}  {layout.p:2d}  {'yes':8s}  {traj.outcome.value:11s} "
              f"{traj.t_prop * 1e12:7.1f} ps "
              f"{cfg.geometry.l_pmafm / traj.t_prop:7.1f}   {spans}")
    else:
        print(f"{jx:10.2e}  {layout.p:2d}  {'no':8s}  "
              f"{layout.infeasibility_reason.value}")

# trigger-based vs naive equally-spaced placement at the default drive
tc = thiele_constants(cfg.material, cfg.geometry, cfg.drive, cfg.constants)
planned = plan(tc, cfg.geometry)
even = plan_equal_spacing(cfg.geometry, planned.p)
print("\nplacement comparison at Jx = 9e10 A/m^2 (p = 1):")
for name, layout in (("trigger-based", planned), ("equally spaced", even)):
    traj = simulate(tc, cfg.geometry, layout)
    (a, b), = layout.intervals
    print(f"  {name:15s} repeater at [{a * 1e9:6.1f}, {b * 1e9:6.1f}] nm -> "
          f"{traj.outcome.value}, {traj.t_prop * 1e12:.1f} ps, "
          f"peak |y| = {max(abs(s.y) for s in traj.samples) * 1e9:.2f} nm")

print("\ninfeasible corners of the material grid at the default drive:")
for (ku, alpha) in ((8e5, 0.1), (10e5, 0.2), (5e5, 0.25)):
    material = replace(cfg.material, ku=ku, alpha=alpha)
    tc = thiele_constants(material, cfg.geometry, cfg.drive, cfg.constants)
    layout = plan(tc, cfg.geometry)
    state = "feasible" if layout.feasible else layout.infeasibility_reason.value
    print(f"  Ku = {ku:.0e} J/m^3, alpha = {alpha:4.2f} -> {state}")
