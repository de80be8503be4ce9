"""MTJ readout divider, transistor fit, nucleation decision, gate logic."""

import pytest

from skyrmion_logic import (DeviceGeometry, ExtrapolationWarning, GateKind,
                            GateState, MaterialParams, MtjModel, ReadCircuit,
                            TransistorModel, cascade, default_transistor,
                            evaluate_gate, mtj_resistance, next_stage_current,
                            nucleation_current_density, nucleation_decision,
                            output_voltage, shm_resistance)


def test_mtj_resistance_levels():
    mtj = MtjModel(r_ap=4000.0, tmr_percent=300.0, eta=0.5)
    assert mtj.r_p == pytest.approx(1000.0, rel=1e-12, abs=0.0)
    assert mtj_resistance(mtj, skyrmion_present=False) == 4000.0
    assert mtj_resistance(mtj, skyrmion_present=True) == pytest.approx(2500.0, abs=0.0)


def test_mtj_full_coverage_limit():
    # eta -> 1 recovers r_ap regardless of presence
    mtj = MtjModel(eta=1 - 1e-12)
    assert mtj_resistance(mtj, True) == pytest.approx(mtj.r_ap, rel=1e-9, abs=0.0)


def test_mtj_present_below_absent():
    for tmr in (50.0, 300.0, 800.0):
        for eta in (0.1, 0.5, 0.9):
            mtj = MtjModel(tmr_percent=tmr, eta=eta)
            assert mtj_resistance(mtj, True) < mtj_resistance(mtj, False)


def test_mtj_validation():
    with pytest.raises(ValueError):
        MtjModel(eta=1.0)
    with pytest.raises(ValueError):
        MtjModel(r_ap=0.0)


def test_shm_resistance_values():
    m, g = MaterialParams(), DeviceGeometry()
    assert shm_resistance(m, g) == pytest.approx(424.0, rel=1e-12, abs=0.0)
    assert shm_resistance(m, g, repeater=True) == pytest.approx(53.0, rel=1e-12, abs=0.0)


def test_shm_resistance_linear_in_length():
    m = MaterialParams()
    g1, g2 = DeviceGeometry(), DeviceGeometry(l_shm=400e-9)
    assert shm_resistance(m, g2) == pytest.approx(2 * shm_resistance(m, g1), abs=0.0)


def test_divider_operating_points():
    read = ReadCircuit(r_tx=3620.0, r_shm=424.0, v_read=1.0)
    assert round(output_voltage(read, 4000.0), 3) == 0.550
    assert round(output_voltage(read, 2500.0), 3) == 0.447


def test_divider_limits_and_monotonicity():
    read = ReadCircuit(r_tx=1e-9, r_shm=424.0, v_read=1.0)
    assert output_voltage(read, 4000.0) == pytest.approx(1.0, rel=1e-9, abs=0.0)
    read = ReadCircuit()
    vals = [output_voltage(read, r) for r in (500, 1000, 2500, 4000, 8000)]
    assert all(b > a for a, b in zip(vals, vals[1:]))


def test_transistor_exact_at_calibration_points():
    tx = default_transistor()
    assert next_stage_current(tx, 0.550) == pytest.approx(300e-6, rel=1e-12, abs=0.0)
    assert next_stage_current(tx, 0.447) == pytest.approx(184e-6, rel=1e-12, abs=0.0)
    # halfway voltage lands exactly between the calibrated currents
    assert next_stage_current(tx, (0.550 + 0.447) / 2) == pytest.approx(
        242e-6, rel=1e-9, abs=0.0)


def test_transistor_reproduces_custom_points():
    tx = TransistorModel.from_calibration((0.3, 1e-4), (0.6, 4e-4))
    assert next_stage_current(tx, 0.3) == pytest.approx(1e-4, rel=1e-12, abs=0.0)
    assert next_stage_current(tx, 0.6) == pytest.approx(4e-4, rel=1e-12, abs=0.0)


def test_transistor_extrapolation_warning():
    tx = default_transistor()
    with pytest.warns(ExtrapolationWarning):
        next_stage_current(tx, 0.9)
    with pytest.warns(ExtrapolationWarning):
        next_stage_current(tx, 0.1)


def test_nucleation_decision_thresholds():
    g = DeviceGeometry()  # 20 nm spot
    j300 = nucleation_current_density(300e-6, g)
    j184 = nucleation_current_density(184e-6, g)
    assert j300 == pytest.approx(9.5493e11, rel=1e-4, abs=0.0)
    assert j184 == pytest.approx(5.8569e11, rel=1e-4, abs=0.0)
    assert nucleation_decision(300e-6, g, 9.5e11)
    assert not nucleation_decision(184e-6, g, 9.5e11)
    assert not nucleation_decision(0.0, g, 9.5e11)


def test_gate_truth_tables():
    inv = [evaluate_gate(GateState((bool(a),), GateKind.INVERTER))
           for a in (0, 1)]
    assert inv == [True, False]
    nor = [evaluate_gate(GateState((bool(a), bool(b)), GateKind.NOR2))
           for a in (0, 1) for b in (0, 1)]
    assert nor == [True, False, False, False]


def test_gate_arity_enforced():
    with pytest.raises(ValueError):
        GateState((True, False), GateKind.INVERTER)
    with pytest.raises(ValueError):
        GateState((True,), GateKind.NOR2)


def test_cascade_equals_inverter(cfg):
    for present in (False, True):
        chained = cascade(present, cfg.mtj, cfg.read, cfg.transistor,
                          cfg.geometry, cfg.drive.j_c_nuc)
        gate = evaluate_gate(GateState((present,), GateKind.INVERTER))
        assert chained == gate


def test_cascade_two_stages_restore_the_input(cfg):
    for present in (False, True):
        once = cascade(present, cfg.mtj, cfg.read, cfg.transistor,
                       cfg.geometry, cfg.drive.j_c_nuc)
        twice = cascade(once, cfg.mtj, cfg.read, cfg.transistor,
                        cfg.geometry, cfg.drive.j_c_nuc)
        assert twice == present
