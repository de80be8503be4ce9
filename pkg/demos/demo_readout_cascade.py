"""MTJ readout, stage cascading and the resulting logic behaviour.

A skyrmion under the detector lowers the stack resistance, which lowers
the divider output voltage, which weakens the next stage's nucleation
pulse below the critical density: presence inverts into absence.  Two
chained stages therefore restore the input, and merging two tracks
before one detector gives a NOR.
"""

from skyrmion_logic import (GateKind, GateState, cascade, default_config,
                            evaluate_gate, mtj_resistance,
                            next_stage_current, nucleation_current_density,
                            nucleation_decision, output_voltage)

cfg = default_config()

print("stage readout chain:")
print("state    R_mtj (ohm)  V_out (V)  I_on (uA)  J_next (A/m^2)  nucleates")
for present in (False, True):
    r = mtj_resistance(cfg.mtj, present)
    v = output_voltage(cfg.read, r)
    i = next_stage_current(cfg.transistor, v)
    j = nucleation_current_density(i, cfg.geometry)
    nuc = nucleation_decision(i, cfg.geometry, cfg.drive.j_c_nuc)
    print(f"{'present' if present else 'absent':8s} {r:10.0f}  {v:9.3f}  "
          f"{i * 1e6:9.1f}  {j:14.3e}  {'yes' if nuc else 'no'}")

print(f"\ncritical nucleation density: {cfg.drive.j_c_nuc:.2e} A/m^2")

print("\ninverter (one detection stage):")
for present in (False, True):
    out = cascade(present, cfg.mtj, cfg.read, cfg.transistor, cfg.geometry,
                  cfg.drive.j_c_nuc)
    print(f"  in={int(present)} -> out={int(out)}")

print("\ntwo chained stages restore the input:")
for present in (False, True):
    once = cascade(present, cfg.mtj, cfg.read, cfg.transistor, cfg.geometry,
                   cfg.drive.j_c_nuc)
    twice = cascade(once, cfg.mtj, cfg.read, cfg.transistor, cfg.geometry,
                    cfg.drive.j_c_nuc)
    print(f"  in={int(present)} -> stage1={int(once)} -> stage2={int(twice)}")

print("\nNOR2 truth table (skyrmion present = logic 1):")
for a in (0, 1):
    for b in (0, 1):
        out = evaluate_gate(GateState((bool(a), bool(b)), GateKind.NOR2))
        print(f"  {a} {b} -> {int(out)}")
