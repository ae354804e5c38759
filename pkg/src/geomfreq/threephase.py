"""Closed-form rho, omega and xi for three-phase voltages described by
per-phase magnitude and angle functions.

These expressions are an independent route to the same invariants that
``frenet.invariants`` computes from a cartesian jet, and the test suite
uses them as mutual oracles.  Each phase i in {a, b, c} is
v_i = V_i(t) sin(theta_i(t)) and the inputs are the per-phase scalars
(V, V', V'', theta, theta', theta'').
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateRotation, DegenerateSpeed, InvalidParameter
from .frenet import EPS_V, EPS_W

__all__ = [
    "PhaseJet",
    "Auxiliaries",
    "ClosedFormInvariants",
    "auxiliaries",
    "closed_form_invariants",
    "stationary_sequence",
]

# (j, k) index pairs feeding components (a, b, c) of the cross product
_JK = ((1, 2), (2, 0), (0, 1))


@dataclass(frozen=True)
class PhaseJet:
    """Magnitude and angle of one phase with derivatives up to order 2."""

    V: float  # V, >= 0
    dV: float  # V/s
    ddV: float  # V/s^2
    theta: float  # rad
    dtheta: float  # rad/s
    ddtheta: float  # rad/s^2

    def __post_init__(self):
        if self.V < 0:
            raise InvalidParameter(f"negative phase magnitude {self.V}")


@dataclass(frozen=True)
class Auxiliaries:
    """Intermediate scalars of the closed forms.

    ``r`` holds (r_bc, r_ca, r_ab) built from magnitude derivatives,
    ``u`` the matching angle-derivative terms, ``p``/``q`` the per-phase
    second-derivative combinations, and ``v`` the voltage magnitude.
    """

    v: float
    r: tuple
    u: tuple
    p: tuple
    q: tuple


@dataclass(frozen=True)
class ClosedFormInvariants:
    """Closed-form invariants.

    ``xi`` comes from the self-consistent per-phase expansion of v''
    (it matches the generic jet route); ``xi_literal`` evaluates the
    published p/q combination verbatim for auditability.
    """

    rho: float
    omega_vec: np.ndarray
    xi: float
    xi_literal: float


def _arrays(phases):
    if len(phases) != 3:
        raise InvalidParameter("exactly three phase jets required")
    V = np.array([p.V for p in phases])
    dV = np.array([p.dV for p in phases])
    ddV = np.array([p.ddV for p in phases])
    th = np.array([p.theta for p in phases])
    dth = np.array([p.dtheta for p in phases])
    ddth = np.array([p.ddtheta for p in phases])
    return V, dV, ddV, th, dth, ddth


def auxiliaries(phases, eps_v=EPS_V):
    """Evaluate v, r_jk, u_jk, p_i, q_i for three phase jets.

    v is the instantaneous voltage-vector magnitude
    sqrt(sum_i V_i^2 (1 - cos 2 theta_i) / 2); the 1/2 keeps it equal
    to |v| of the cartesian route (1 - cos 2x = 2 sin^2 x).
    """
    V, dV, ddV, th, dth, ddth = _arrays(phases)
    v = math.sqrt(float(np.sum(V**2 * (1.0 - np.cos(2.0 * th)) / 2.0)))
    if v <= eps_v:
        raise DegenerateSpeed(f"closed-form |v| = {v} <= {eps_v}")
    s, c = np.sin(th), np.cos(th)
    r = tuple(
        float((V[j] * dV[k] - V[k] * dV[j]) * s[j] * s[k]) for j, k in _JK
    )
    u = tuple(
        float(V[j] * V[k] * (dth[k] * s[j] * c[k] - dth[j] * s[k] * c[j]))
        for j, k in _JK
    )
    p = tuple(float(x) for x in V * ddV + dV**2 - V * dth**2)
    q = tuple(float(x) for x in dV * dth - V * ddth)
    return Auxiliaries(v=v, r=r, u=u, p=p, q=q)


def closed_form_invariants(phases, eps_v=EPS_V):
    """Closed-form (rho, omega, xi) of a three-phase voltage.

    rho sums V_i^2 theta_i' sin(2 theta_i) + V_i V_i' (1 - cos 2 theta_i)
    over the phases, normalized by 2 v^2; omega component i is
    (r_jk + u_jk) / v^2 for ijk in {abc, bca, cab}.
    """
    aux = auxiliaries(phases, eps_v)
    V, dV, ddV, th, dth, ddth = _arrays(phases)
    v2 = aux.v * aux.v
    rho = float(
        np.sum(V**2 * dth * np.sin(2.0 * th) + V * dV * (1.0 - np.cos(2.0 * th)))
    ) / (2.0 * v2)
    ru = np.array(aux.r) + np.array(aux.u)
    omega_vec = ru / v2
    denom = float(np.sum(ru**2))

    s, c = np.sin(th), np.cos(th)
    p = np.array(aux.p)
    q = np.array(aux.q)
    xi_literal = (
        aux.v * float(np.sum((p * s + q * c) * omega_vec)) / denom
        if denom > 0.0
        else 0.0
    )
    # self-consistent route: project the per-phase v'' onto v x v'
    ddv_i = (ddV - V * dth**2) * s + (2.0 * dV * dth + V * ddth) * c
    xi = (
        aux.v**3 * float(np.sum(ddv_i * omega_vec)) / denom
        if denom > 0.0
        else 0.0
    )
    return ClosedFormInvariants(
        rho=rho, omega_vec=omega_vec, xi=xi, xi_literal=xi_literal
    )


def check_rank(phases, eps_w=EPS_W, eps_v=EPS_V):
    """Raise DegenerateRotation for rank-deficient (e.g. zero-sequence)
    voltages whose v and v' do not span a plane."""
    aux = auxiliaries(phases, eps_v)
    ru = np.array(aux.r) + np.array(aux.u)
    if float(np.linalg.norm(ru)) / (aux.v * aux.v) <= eps_w:
        raise DegenerateRotation(
            "three-phase voltage is rank deficient: |v x v'| ~ 0"
        )


def stationary_sequence(kind, V, w_o):
    """Closed-form result for stationary positive/negative sequences.

    Independent of V: (rho, omega, xi) = (0, +/-(w_o/sqrt(3))(1,1,1), 0).
    """
    if V <= 0:
        raise InvalidParameter(f"V must be positive, got {V}")
    if w_o == 0:
        raise InvalidParameter("w_o must be nonzero")
    if kind not in ("positive", "negative"):
        raise InvalidParameter(f"kind must be positive|negative, got {kind!r}")
    sign = 1.0 if kind == "positive" else -1.0
    omega_vec = sign * (w_o / math.sqrt(3.0)) * np.ones(3)
    return 0.0, omega_vec, 0.0
