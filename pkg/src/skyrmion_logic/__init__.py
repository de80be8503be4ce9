"""Device-level simulator and design-space explorer for skyrmion
racetrack logic gates: closed-form rigid-texture trajectories, repeater
planning against edge annihilation, MTJ readout and gate cascading, and
delay/energy/EDP evaluation over a material-parameter grid."""

from .calibration import (ANNIHILATION_MARGIN_SLACK, GAMMA0_EFFECTIVE,
                          TRIGGER_SAFETY_BUFFER)
from .circuit import (ExtrapolationWarning, GateKind, GateState, MtjModel,
                      ReadCircuit, TransistorModel, cascade,
                      default_transistor, evaluate_gate, mtj_resistance,
                      next_stage_current, nucleation_current_density,
                      nucleation_decision, output_voltage, shm_resistance)
from .config import (ConfigError, PlannerSettings, RunConfig, default_config,
                     load_config, parse_config)
from .device import (DeviceGeometry, DriveConfig, MaterialParams,
                     PhysicalConstants, ThieleConstants, domain_wall_width,
                     thiele_constants)
from .dse import (DesignPointResult, NoFeasiblePointError, Objective,
                  SweepSpec, best_summary, enumerate_grid, evaluate_point,
                  nucleation_current, results_to_csv, run_sweep, select_best)
from .oracle import numeric_oracle
from .performance import (EnergyConfig, PerformanceReport, detection_energy,
                          nucleation_energy, propagation_energy,
                          total_performance)
from .planner import (InfeasibilityReason, RepeaterLayout, plan,
                      plan_equal_spacing, trigger_ordinate)
from .trajectory import (Outcome, RegionKind, Segment, SkyrmionState,
                         StallError, Trajectory, annihilation_ordinate,
                         position_r1, position_r2, r2_validity, simulate,
                         steady_state_deflection, time_to_cross,
                         trajectory_to_csv)

__version__ = "0.1.0"
