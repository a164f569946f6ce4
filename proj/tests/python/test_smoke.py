"""Smoke tests for the python bindings: algebra values, scenario plumbing and
one end-to-end run per switching family."""

import math

import numpy as np
import pytest

import mrpsim


def test_shadow_map_value_and_involution():
    s = mrpsim.shadow_map([0.93, 0.0, 0.0])
    assert s[0] == pytest.approx(-1.0 / 0.93, abs=1e-15)
    back = mrpsim.shadow_map(mrpsim.shadow_map([0.3, -0.4, 0.5]))
    assert np.allclose(back, [0.3, -0.4, 0.5], atol=1e-14)


def test_shadow_map_rejects_zero():
    with pytest.raises(mrpsim.SimError):
        mrpsim.shadow_map([0.0, 0.0, 0.0])


def test_principal_round_trip():
    sigma = mrpsim.mrp_from_principal(math.radians(171.6913), [1.0, 0.0, 0.0])
    assert sigma[0] == pytest.approx(0.93, abs=5e-8)
    phi, axis = mrpsim.principal_from_mrp(sigma)
    assert math.degrees(phi) == pytest.approx(171.6913, abs=1e-9)
    assert np.allclose(axis, [1, 0, 0])


def test_quaternion_shadow_pair():
    b0, b = mrpsim.mrp_to_quaternion([0.93, 0, 0])
    b0s, bs = mrpsim.mrp_to_quaternion(mrpsim.shadow_map([0.93, 0, 0]))
    assert b0 == pytest.approx(-b0s, abs=1e-12)
    assert np.allclose(b, -np.asarray(bs), atol=1e-12)


def test_controller_values():
    gain = mrpsim.paper_gain()
    assert gain.shape == (3, 6)
    assert gain[0, 0] == -70.11
    assert gain[2, 5] == -163.08
    u = mrpsim.control_torque(gain, [0.93, 0, 0, 0.115, 0, 0])
    assert u[0] == pytest.approx(-83.9565, abs=1e-10)

    inertia = mrpsim.InertiaModel.diagonal(140, 100, 80)
    k1 = -(70.11 / 4.0) * np.asarray(inertia.inverse)
    k2 = -163.08 * np.asarray(inertia.inverse)
    assert np.allclose(mrpsim.compose_gain(k1, k2, inertia), gain, atol=1e-12)


def test_bundled_scenarios_and_no_delay_run():
    scenarios = {sc.name: sc for sc in mrpsim.bundled_scenarios()}
    assert len(scenarios) == 5
    sc = scenarios["fig2_no_delay"]
    assert sc.tau == 0.0
    assert sc.strategy == "point_current"

    traj = mrpsim.simulate(sc)
    assert len(traj) == 60001
    assert len(traj.switch_times) == 1
    assert traj.switch_times[0] == pytest.approx(0.438, abs=1e-12)
    nb, na = traj.switch_norms[0]
    assert nb * na == pytest.approx(1.0, abs=1e-12)

    metrics = mrpsim.chattering_metrics(traj, 1.0)
    summary = mrpsim.summarize_run(traj, metrics)
    assert summary.settling_time is not None
    assert not summary.chattering


def test_chatter_versus_boundary_layer():
    scenarios = {sc.name: sc for sc in mrpsim.bundled_scenarios()}

    chatter = mrpsim.simulate(scenarios["fig45_delay_point_delayed"])
    chatter_summary = mrpsim.summarize_run(chatter, mrpsim.chattering_metrics(chatter, 1.0))
    assert chatter_summary.chattering
    assert chatter_summary.settling_time is None

    calm = mrpsim.simulate(scenarios["fig7_delay_hysteretic"])
    calm_summary = mrpsim.summarize_run(calm, mrpsim.chattering_metrics(calm, 1.0))
    assert not calm_summary.chattering
    assert calm_summary.switch_count <= 3
    assert calm_summary.settling_time is not None


def test_parse_and_validation_errors():
    with pytest.raises(mrpsim.SimError):
        mrpsim.parse_scenario("name = x\n")  # missing everything else
    doc = mrpsim.bundled_scenario_documents()["fig2_no_delay"]
    sc = mrpsim.parse_scenario(doc)
    assert sc.name == "fig2_no_delay"


def test_csv_export():
    sc = mrpsim.parse_scenario(
        "name = tiny\ninertia.diag = 140 100 80\ninitial.sigma = 0 0 0\n"
        "initial.omega = 0 0 0\ngain.mode = paper\ntau = 0\nstrategy = none\n"
        "integrator.horizon = 0.002\n"
    )
    text = mrpsim.write_trajectory_csv(mrpsim.simulate(sc))
    lines = text.strip().split("\n")
    assert lines[0] == "t,s1,s2,s3,w1,w2,w3,sigma_norm,u1,u2,u3,active_set"
    assert len(lines) == 4
