"""Repeater placement, feasibility rules and planner/simulator consistency."""

from dataclasses import replace

import pytest

from skyrmion_logic import (DeviceGeometry, InfeasibilityReason, Outcome,
                            plan, plan_equal_spacing, simulate,
                            thiele_constants, trigger_ordinate)


def test_trigger_ordinate_arithmetic():
    g = DeviceGeometry()  # w = 50 nm, r_sk = 8 nm
    assert trigger_ordinate(g, 1e-9) == pytest.approx(16e-9, rel=1e-12, abs=0.0)
    assert trigger_ordinate(g, 0.0) == pytest.approx(17e-9, rel=1e-12, abs=0.0)


def test_trigger_ordinate_degenerate_width():
    g = DeviceGeometry(w_pmafm=18.0e-9, r_sk=8e-9)  # w = 2 (r_sk + buffer)
    with pytest.raises(ValueError):
        trigger_ordinate(g, 1e-9)


def _tc_at(cfg, jx, alpha=0.25, ku=8e5, ms=1e5, jy=5e11):
    material = replace(cfg.material, ms=ms, ku=ku, alpha=alpha)
    drive = replace(cfg.drive, jx=jx, jy=jy)
    return thiele_constants(material, cfg.geometry, drive, cfg.constants)


@pytest.mark.parametrize("jx,expected_p", [(6.5e10, 0), (9e10, 1), (1.2e11, 2)])
def test_repeater_counts_across_drive_levels(cfg, jx, expected_p):
    layout = plan(_tc_at(cfg, jx), cfg.geometry)
    assert layout.feasible
    assert layout.p == expected_p


def test_p_nondecreasing_in_drive(cfg):
    counts = [plan(_tc_at(cfg, jx), cfg.geometry).p
              for jx in (6.5e10, 9e10, 1.2e11)]
    assert counts == sorted(counts)


def test_layout_interval_invariants(cfg):
    layout = plan(_tc_at(cfg, 1.2e11), cfg.geometry)
    assert layout.feasible and layout.p == 2
    last_end = 0.0
    for x_start, x_end in layout.intervals:
        assert x_end - x_start == pytest.approx(cfg.geometry.l_rshm, rel=1e-12, abs=0.0)
        assert x_start >= last_end
        assert x_end <= cfg.geometry.l_pmafm - cfg.geometry.l_det + 1e-15
        last_end = x_end


def test_feasible_layouts_complete_the_run(cfg):
    # planner/simulator consistency over a spread of design points
    for (ms, ku, alpha, jx) in [(1e5, 8e5, 0.25, 6.5e10),
                                (1e5, 8e5, 0.25, 9e10),
                                (1e5, 8e5, 0.25, 1.2e11),
                                (1e5, 8e5, 0.20, 9e10),
                                (3e5, 10e5, 0.25, 9e10),
                                (8e5, 8e5, 0.20, 9e10)]:
        tc = _tc_at(cfg, jx, alpha=alpha, ku=ku, ms=ms)
        layout = plan(tc, cfg.geometry)
        if layout.feasible:
            traj = simulate(tc, cfg.geometry, layout)
            assert traj.outcome is Outcome.REACHED, (ms, ku, alpha, jx)


def test_low_damping_needs_too_many_repeaters(cfg):
    layout = plan(_tc_at(cfg, 9e10, alpha=0.1), cfg.geometry)
    assert not layout.feasible
    assert layout.infeasibility_reason is InfeasibilityReason.TOO_MANY_REPEATERS


def test_stiff_track_repeater_collides_with_detector(cfg):
    # alpha = 0.2 with ku = 10e5 forces a repeater into the detector zone
    layout = plan(_tc_at(cfg, 9e10, alpha=0.2, ku=10e5), cfg.geometry)
    assert not layout.feasible
    assert layout.infeasibility_reason is InfeasibilityReason.DETECTOR_OVERLAP


def test_no_transverse_drive_invalidates_r2(cfg):
    layout = plan(_tc_at(cfg, 9e10, jy=0.0), cfg.geometry)
    assert not layout.feasible
    assert layout.infeasibility_reason is InfeasibilityReason.R2_INVALID


def test_infeasible_layouts_always_carry_a_reason(cfg):
    for alpha in (0.05, 0.1, 0.15):
        for ku in (5e5, 8e5, 10e5):
            layout = plan(_tc_at(cfg, 9e10, alpha=alpha, ku=ku), cfg.geometry)
            assert not layout.feasible
            assert layout.infeasibility_reason is not InfeasibilityReason.NONE


def test_p_max_zero_blocks_placement(cfg):
    layout = plan(_tc_at(cfg, 9e10), cfg.geometry, p_max=0)
    assert not layout.feasible
    assert layout.infeasibility_reason is InfeasibilityReason.TOO_MANY_REPEATERS
    assert layout.p == 0


def test_equal_spacing_mode(cfg):
    layout = plan_equal_spacing(cfg.geometry, 1)
    assert layout.feasible and layout.p == 1
    (a, b), = layout.intervals
    assert (a + b) / 2 == pytest.approx(cfg.geometry.l_pmafm / 2, rel=1e-12, abs=0.0)
    # a centred single repeater also rescues the default high-drive run
    tc = _tc_at(cfg, 9e10)
    traj = simulate(tc, cfg.geometry, layout)
    assert traj.outcome is Outcome.REACHED


def test_equal_spacing_rejects_overcrowding(cfg):
    layout = plan_equal_spacing(cfg.geometry, 7)  # last one hits the detector
    assert not layout.feasible
