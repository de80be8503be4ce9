"""Device calibration constants.

Three knobs of the track model are not fixed by first principles and are
calibrated once against the reference inverter design (Ms = 1e5 A/m,
Ku = 8e5 J/m^3 on a 200 nm x 50 nm track, Jx = 9e10 A/m^2, Jy = 5e11 A/m^2):

* ``GAMMA0_EFFECTIVE`` sets the overall time scale of the rigid-texture
  dynamics.  It is chosen so the low-damping design point (alpha = 0.2)
  propagates end to end in 389 ps.  Rescaling it rescales every velocity
  and delay uniformly and leaves the trajectory geometry (deflection,
  repeater count, annihilation behaviour) untouched.

* ``TRIGGER_SAFETY_BUFFER`` positions the repeater trigger ordinate at
  w/2 - R_sk - buffer.  The calibrated trigger (18.45 nm on the 50 nm
  track) sits between the nominal one-radius contact line (17 nm) and the
  annihilation threshold, which is where the reference trajectories crest
  before each corrective kick.  This value reproduces the reference
  repeater counts p = 0 / 1 / 2 at Jx = 6.5e10 / 9e10 / 1.2e11 A/m^2.

* ``ANNIHILATION_MARGIN_SLACK`` extends the destruction threshold to
  w/2 - R_sk + slack (18.60 nm here).  The alpha = 0.25 point at
  Jx = 9e10 then annihilates without a repeater, while planned layouts
  crest just below the threshold (final ordinate ~18 nm at the output).

The admissible window is not knife-edge: any trigger in [18.35, 18.55] nm
paired with a threshold up to 18.70 nm reproduces the same counts.  The
values below are the window centre.
"""

# Effective gyromagnetic constant for the track dynamics, rad s^-1 T^-1.
GAMMA0_EFFECTIVE = 3.3571e11

# Subtracted from w/2 - R_sk to form the repeater trigger ordinate, m.
# Negative: the trigger sits beyond the one-radius contact line.
TRIGGER_SAFETY_BUFFER = -1.45e-9

# Added to w/2 - R_sk to form the annihilation threshold, m.
ANNIHILATION_MARGIN_SLACK = 1.6e-9
