"""Rigid-spacecraft attitude dynamics under delayed state feedback, with MRP
shadow-set switching and the hysteretic boundary-layer rule.

The heavy lifting lives in the compiled extension ``mrpsim._core``; this
package re-exports its surface.
"""

from ._core import (  # noqa: F401
    ChatterMetrics,
    InertiaModel,
    RunSummary,
    Scenario,
    SimError,
    Trajectory,
    __version__,
    bmat,
    bundled_scenario_documents,
    bundled_scenarios,
    chattering_metrics,
    compose_gain,
    control_torque,
    euler_rate,
    mrp_from_principal,
    mrp_rate,
    mrp_to_quaternion,
    paper_gain,
    parse_scenario,
    principal_from_mrp,
    quaternion_to_mrp,
    shadow_map,
    simulate,
    skew,
    state_derivative,
    summarize_run,
    write_trajectory_csv,
)

__all__ = [
    "ChatterMetrics",
    "InertiaModel",
    "RunSummary",
    "Scenario",
    "SimError",
    "Trajectory",
    "bmat",
    "bundled_scenario_documents",
    "bundled_scenarios",
    "chattering_metrics",
    "compose_gain",
    "control_torque",
    "euler_rate",
    "mrp_from_principal",
    "mrp_rate",
    "mrp_to_quaternion",
    "paper_gain",
    "parse_scenario",
    "principal_from_mrp",
    "quaternion_to_mrp",
    "shadow_map",
    "simulate",
    "skew",
    "state_derivative",
    "summarize_run",
    "write_trajectory_csv",
]
