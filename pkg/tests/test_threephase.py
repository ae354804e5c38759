"""Closed-form three-phase invariants against the generic jet route."""

import math

import numpy as np
import pytest

from geomfreq import frenet, signals, threephase
from geomfreq.errors import (
    DegenerateRotation,
    DegenerateSpeed,
    InvalidParameter,
)
from geomfreq.threephase import PhaseJet

from conftest import OMEGA_POS, W_O

TWO_THIRDS_PI = 2.0 * math.pi / 3.0


def _stationary_phases(V=(12.0, 12.0, 12.0), t=0.0):
    theta0 = (0.0, -TWO_THIRDS_PI, TWO_THIRDS_PI)
    return tuple(
        PhaseJet(V=V[i], dV=0.0, ddV=0.0, theta=W_O * t + theta0[i],
                 dtheta=W_O, ddtheta=0.0)
        for i in range(3)
    )


def test_phasejet_rejects_negative_magnitude():
    with pytest.raises(InvalidParameter):
        PhaseJet(V=-1.0, dV=0.0, ddV=0.0, theta=0.0, dtheta=0.0, ddtheta=0.0)


def test_auxiliaries_balanced_magnitude():
    aux = threephase.auxiliaries(_stationary_phases())
    assert aux.v == pytest.approx(14.6969, abs=1e-4)
    assert aux.v == pytest.approx(12.0 * math.sqrt(1.5), rel=1e-12)
    # matches the cartesian speed at the same instant
    j = signals.eval_jet(signals.make_scenario("E0"), 0.0)
    assert aux.v == pytest.approx(frenet.speed(j), rel=1e-12)


def test_auxiliaries_zero_magnitudes_degenerate():
    phases = tuple(
        PhaseJet(V=0.0, dV=0.0, ddV=0.0, theta=0.1 * i, dtheta=W_O,
                 ddtheta=0.0)
        for i in range(3)
    )
    with pytest.raises(DegenerateSpeed):
        threephase.auxiliaries(phases)


def test_auxiliaries_stationary_r_terms_vanish():
    aux = threephase.auxiliaries(_stationary_phases(V=(12.0, 8.0, 10.0)))
    assert aux.r == (0.0, 0.0, 0.0)


def test_closed_form_positive_sequence():
    cf = threephase.closed_form_invariants(_stationary_phases())
    assert abs(cf.rho) <= 1e-9
    assert abs(cf.xi) <= 1e-9
    np.testing.assert_allclose(cf.omega_vec, [OMEGA_POS] * 3, rtol=1e-9)


def test_closed_form_unbalanced_special_case():
    # with constant magnitudes and dtheta = w_o everywhere, rho reduces to
    # w_o * sum V_i^2 sin(2 theta_i) / (2 v^2)
    phases = _stationary_phases(V=(12.0, 8.0, 12.0), t=1.3e-3)
    cf = threephase.closed_form_invariants(phases)
    V = np.array([p.V for p in phases])
    th = np.array([p.theta for p in phases])
    v2 = threephase.auxiliaries(phases).v ** 2
    expected = W_O * float(np.sum(V**2 * np.sin(2.0 * th))) / (2.0 * v2)
    assert cf.rho == pytest.approx(expected, rel=1e-12)


@pytest.mark.parametrize(
    "sid,t",
    [("E2", 2.5e-3), ("E1", 0.0), ("E4", 0.013), ("E5", 0.007), ("E8", 1.1)],
)
def test_closed_form_matches_generic_route(sid, t):
    model = signals.make_scenario(sid)
    cf = threephase.closed_form_invariants(signals.phase_jets(model, t))
    g = frenet.invariants(signals.eval_jet(model, t))
    scale = max(abs(g.rho), g.omega_mag)
    assert abs(cf.rho - g.rho) <= 1e-6 * scale
    np.testing.assert_allclose(cf.omega_vec, g.omega_vec, atol=1e-6 * g.omega_mag)
    assert abs(cf.xi - g.xi) <= 1e-6 * max(abs(g.xi), 1.0)


def test_zero_sequence_rank_deficiency():
    phases = tuple(
        PhaseJet(V=12.0, dV=0.0, ddV=0.0, theta=W_O * 0.003, dtheta=W_O,
                 ddtheta=0.0)
        for _ in range(3)
    )
    with pytest.raises(DegenerateRotation):
        threephase.check_rank(phases)


def test_stationary_sequence_values():
    rho, omega, xi = threephase.stationary_sequence("positive", 12.0, W_O)
    assert rho == 0.0 and xi == 0.0
    np.testing.assert_allclose(omega, [181.3799364] * 3, rtol=1e-9)
    assert np.linalg.norm(omega) == pytest.approx(314.159265, abs=1e-6)
    rho, omega_neg, xi = threephase.stationary_sequence("negative", 12.0, W_O)
    np.testing.assert_array_equal(omega_neg, -omega)


def test_stationary_sequence_independent_of_magnitude():
    a = threephase.stationary_sequence("positive", 12.0, W_O)
    b = threephase.stationary_sequence("positive", 24.0, W_O)
    assert a[0] == b[0] and a[2] == b[2]
    np.testing.assert_array_equal(a[1], b[1])


def test_stationary_sequence_validation():
    with pytest.raises(InvalidParameter):
        threephase.stationary_sequence("positive", -1.0, W_O)
    with pytest.raises(InvalidParameter):
        threephase.stationary_sequence("positive", 12.0, 0.0)
    with pytest.raises(InvalidParameter):
        threephase.stationary_sequence("sideways", 12.0, W_O)
