"""Self-check suites: each module's invariants evaluated on generated
data, with the worst observed deviation reported per property.

The CLI ``validate`` subcommand runs these and exits nonzero on any
failure; the pytest suite asserts the same properties with finer
granularity.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import frenet, hilbert, numdiff, park, signals, threephase
from .geometry import cross, inner, norm, triple_scalar

THREE_PHASE_SCENARIOS = ("E0", "E1", "E2", "E3", "E4", "E5", "E6", "E7", "E8")


@dataclass(frozen=True)
class PropertyResult:
    module: str
    name: str
    worst: float
    tol: float

    @property
    def passed(self):
        return self.worst <= self.tol


def _sample_times(n=60, t_max=2.0, seed=7):
    rng = np.random.default_rng(seed)
    return rng.uniform(1e-3, t_max, size=n)


def check_geometry(seed=11):
    rng = np.random.default_rng(seed)
    worst_orth = worst_cyc = worst_lagr = 0.0
    for _ in range(500):
        a, b, c = rng.normal(scale=10.0, size=(3, 3))
        axb = cross(a, b)
        scale = max(norm(a) * norm(axb), 1e-300)
        worst_orth = max(worst_orth, abs(inner(a, axb)) / scale)
        t1 = triple_scalar(a, b, c)
        t2 = triple_scalar(c, a, b)
        t3 = triple_scalar(b, c, a)
        tscale = max(abs(t1), 1e-300)
        worst_cyc = max(worst_cyc, abs(t1 - t2) / tscale, abs(t1 - t3) / tscale)
        lhs = inner(axb, axb)
        rhs = inner(a, a) * inner(b, b) - inner(a, b) ** 2
        worst_lagr = max(worst_lagr, abs(lhs - rhs) / max(abs(rhs), 1e-300))
    return [
        PropertyResult("geometry", "cross orthogonal to factors", worst_orth, 1e-12),
        PropertyResult("geometry", "triple product cyclic", worst_cyc, 1e-12),
        PropertyResult("geometry", "Lagrange identity", worst_lagr, 1e-10),
    ]


def _tau_arclength(j):
    """Torsion from the arc-length derivatives of the underlying curve."""
    v = norm(j.v)
    dv_scalar = inner(j.v, j.dv) / v  # d|v|/dt
    ddv_scalar = (
        inner(j.dv, j.dv) + inner(j.v, j.ddv) - dv_scalar**2
    ) / v  # d2|v|/dt2 is not needed below; kept for x'''
    xd = j.v / v
    xdd = j.dv / v**2 - dv_scalar * j.v / v**3
    xddd = (
        j.ddv / v**3
        - 3.0 * dv_scalar * j.dv / v**4
        + 3.0 * dv_scalar**2 * j.v / v**5
        - ddv_scalar * j.v / v**4
    )
    kappa2 = inner(xdd, xdd)
    return triple_scalar(xd, xdd, xddd) / kappa2


def check_frenet():
    worst = {
        "orthogonality of {v, n, omega}": 0.0,
        "normal magnitude |n| = |omega||v|": 0.0,
        "v from n x omega": 0.0,
        "omega from v x n": 0.0,
        "torsion equals arc-length definition": 0.0,
        "reconstruction v' = rho v + omega x v": 0.0,
        "RoCoF decomposition residual": 0.0,
        "torsional frequency only with rotation": 0.0,
        "planarity of stationary balanced scenarios": 0.0,
    }
    for sid in THREE_PHASE_SCENARIOS:
        model = signals.make_scenario(sid)
        for t in _sample_times():
            j = signals.eval_jet(model, t)
            g = frenet.invariants(j)
            if not g.rotation_defined:
                if abs(g.xi) > 0.0:
                    worst["torsional frequency only with rotation"] = math.inf
                continue
            pn = norm(j.v) * g.n_mag
            po = norm(j.v) * g.omega_mag
            pno = g.n_mag * g.omega_mag
            worst["orthogonality of {v, n, omega}"] = max(
                worst["orthogonality of {v, n, omega}"],
                abs(inner(j.v, g.n_vec)) / pn,
                abs(inner(j.v, g.omega_vec)) / po,
                abs(inner(g.n_vec, g.omega_vec)) / pno,
            )
            worst["normal magnitude |n| = |omega||v|"] = max(
                worst["normal magnitude |n| = |omega||v|"],
                abs(g.n_mag - g.omega_mag * g.v_mag) / (g.omega_mag * g.v_mag),
            )
            v_rec = cross(g.n_vec, g.omega_vec) / g.omega_mag**2
            worst["v from n x omega"] = max(
                worst["v from n x omega"], norm(v_rec - j.v) / g.v_mag
            )
            o_rec = cross(j.v, g.n_vec) / g.v_mag**2
            worst["omega from v x n"] = max(
                worst["omega from v x n"], norm(o_rec - g.omega_vec) / g.omega_mag
            )
            # relative comparison is meaningful only when the torsion is
            # not itself a cancellation residue of a planar curve
            if abs(g.xi) >= 1e-3:
                tau_ii = _tau_arclength(j)
                worst["torsion equals arc-length definition"] = max(
                    worst["torsion equals arc-length definition"],
                    abs(g.tau - tau_ii) / abs(g.tau),
                )
            res = j.dv - (g.rho * j.v + cross(g.omega_vec, j.v))
            worst["reconstruction v' = rho v + omega x v"] = max(
                worst["reconstruction v' = rho v + omega x v"],
                norm(res) / max(norm(j.dv), 1e-300),
            )
            rc = frenet.rocof(j)
            scale = max(norm(rc.omega_dot), g.omega_mag)
            worst["RoCoF decomposition residual"] = max(
                worst["RoCoF decomposition residual"], norm(rc.residual) / scale
            )
        if sid in ("E0", "E1", "E2", "E3", "E6"):
            for t in _sample_times(40):
                g = frenet.invariants(signals.eval_jet(model, t))
                worst["planarity of stationary balanced scenarios"] = max(
                    worst["planarity of stationary balanced scenarios"],
                    abs(g.tau),
                )
    tols = {
        "orthogonality of {v, n, omega}": 1e-9,
        "normal magnitude |n| = |omega||v|": 1e-9,
        "v from n x omega": 1e-9,
        "omega from v x n": 1e-9,
        "torsion equals arc-length definition": 1e-10,
        "reconstruction v' = rho v + omega x v": 1e-9,
        "RoCoF decomposition residual": 1e-8,
        "torsional frequency only with rotation": 0.0,
        "planarity of stationary balanced scenarios": 1e-8,
    }
    return [
        PropertyResult("frenet_core", name, worst[name], tols[name])
        for name in worst
    ]


def check_threephase():
    worst_rho = worst_omega = worst_xi = 0.0
    for sid in THREE_PHASE_SCENARIOS:
        model = signals.make_scenario(sid)
        for t in _sample_times():
            j = signals.eval_jet(model, t)
            g = frenet.invariants(j)
            cf = threephase.closed_form_invariants(signals.phase_jets(model, t))
            worst_rho = max(
                worst_rho, abs(cf.rho - g.rho) / max(abs(g.rho), 1e-6)
            )
            worst_omega = max(
                worst_omega,
                norm(cf.omega_vec - g.omega_vec) / max(g.omega_mag, 1e-6),
            )
            worst_xi = max(
                worst_xi, abs(cf.xi - g.xi) / max(abs(g.xi), 1e-6)
            )
    return [
        PropertyResult("threephase_forms", "closed-form rho vs Frenet", worst_rho, 1e-6),
        PropertyResult("threephase_forms", "closed-form omega vs Frenet", worst_omega, 1e-6),
        PropertyResult("threephase_forms", "closed-form xi vs Frenet", worst_xi, 1e-6),
    ]


def check_signals():
    rng = np.random.default_rng(3)
    worst_d1 = worst_d2 = 0.0
    # power-of-two steps with snapped times keep t + k*h exactly
    # representable, so the stencil sees a perfectly uniform grid; the
    # second derivative divides by h^2 and needs the larger step to stay
    # above the sin(w_o t) argument-rounding noise floor
    h1 = 2.0**-23  # ~1.2e-7 s
    h2 = 2.0**-19  # ~1.9e-6 s
    for _ in range(100):
        sid = rng.choice(THREE_PHASE_SCENARIOS)
        model = signals.make_scenario(str(sid))
        t = round(float(rng.uniform(0.01, 2.0)) / h2) * h2
        j = signals.eval_jet(model, t)
        vs1 = np.array(
            [signals.eval_jet(model, t + k * h1).v for k in (-2, -1, 0, 1, 2)]
        )
        vs2 = np.array(
            [signals.eval_jet(model, t + k * h2).v for k in (-2, -1, 0, 1, 2)]
        )
        d1 = (vs1[0] - 8 * vs1[1] + 8 * vs1[3] - vs1[4]) / (12 * h1)
        d2 = (-vs2[0] + 16 * vs2[1] - 30 * vs2[2] + 16 * vs2[3] - vs2[4]) / (
            12 * h2**2
        )
        worst_d1 = max(worst_d1, norm(j.dv - d1) / max(norm(j.dv), 1e-300))
        worst_d2 = max(worst_d2, norm(j.ddv - d2) / max(norm(j.ddv), 1e-300))
    worst_e6 = 0.0
    model = signals.make_scenario("E6")
    for t in np.linspace(0.0, 5.0, 200):
        g = frenet.invariants(signals.eval_jet(model, float(t)))
        worst_e6 = max(worst_e6, abs(g.rho), abs(g.xi))
    worst_plane = 0.0
    for sid in ("E0", "E1", "E2"):
        model = signals.make_scenario(sid)
        for t in _sample_times(40):
            g = frenet.invariants(signals.eval_jet(model, t))
            worst_plane = max(worst_plane, abs(g.xi))
    return [
        PropertyResult("signals", "analytic first derivative vs FD", worst_d1, 1e-5),
        PropertyResult("signals", "analytic second derivative vs FD", worst_d2, 1e-5),
        PropertyResult("signals", "E6 null rho and xi", worst_e6, 1e-8),
        PropertyResult("signals", "E0-E2 null xi", worst_plane, 1e-8),
    ]


def check_numdiff():
    w_true = 100.0 * math.pi
    errs = {}
    model = signals.make_scenario("E0")
    for dt in (2e-4, 1e-4):
        series = signals.sample(model, 0.0, 0.1, dt)
        jets = numdiff.differentiate(series)
        errs[dt] = max(
            abs(frenet.invariants(j).omega_mag - w_true) for j in jets
        )
    gain = errs[2e-4] / errs[1e-4]
    worst_conv = 0.0 if gain >= 8.0 else 8.0 - gain

    series = signals.sample(signals.make_scenario("E6"), 0.0, 1.0, 1e-4)
    jets = numdiff.differentiate(series)
    worst_num = 0.0
    model6 = signals.make_scenario("E6")
    for j in jets[5:-5]:
        g_num = frenet.invariants(j)
        g_ana = frenet.invariants(signals.eval_jet(model6, j.t))
        worst_num = max(
            worst_num,
            abs(g_num.omega_mag - g_ana.omega_mag) / g_ana.omega_mag,
            abs(g_num.rho - g_ana.rho) / max(abs(g_ana.rho), 1.0),
            abs(g_num.xi - g_ana.xi) / max(abs(g_ana.xi), 1.0),
        )

    # causality: perturbing sample k must not change filtered samples < k
    base = signals.sample(model, 0.0, 0.01, 1e-4)
    filt = numdiff.lowpass_first_order(base, 5e-4)
    bumped_values = base.values.copy()
    k = 60
    bumped_values[k] += 3.0
    bumped = numdiff.lowpass_first_order(base.with_values(bumped_values), 5e-4)
    causal_leak = float(np.abs(filt.values[:k] - bumped.values[:k]).max())

    return [
        PropertyResult("numdiff", "E0 halved-dt error gain >= 8", worst_conv, 0.0),
        PropertyResult("numdiff", "E6 numeric vs analytic invariants", worst_num, 5e-3),
        PropertyResult("numdiff", "low-pass filter causality", causal_leak, 0.0),
    ]


def check_hilbert():
    dt = 1e-4
    t = dt * np.arange(4096)
    pair = hilbert.analytic_embed(np.cos(2.0 * math.pi * 50.0 * t), dt)
    report = hilbert.geometric_equivalence(pair)
    return [
        PropertyResult(
            "hilbert", "embedding omega equals classical phi'", report.max_rel_dev, 1e-9
        ),
        PropertyResult("hilbert", "embedding torsion is zero", report.max_abs_xi, 1e-12),
    ]


def check_park(seed=5):
    rng = np.random.default_rng(seed)
    worst_sum = worst_round = 0.0
    cfg = park.ParkConfig(w_dq=100.0 * math.pi, theta0=0.3)
    model = signals.make_scenario("E8")
    for t in _sample_times(40):
        j = signals.eval_jet(model, t)
        dq = park.to_dq0(j, cfg)
        back = park.from_dq0(dq, cfg)
        g0 = frenet.invariants(j)
        g1 = frenet.invariants(back)
        worst_round = max(
            worst_round,
            abs(g0.rho - g1.rho) / max(abs(g0.rho), 1.0),
            abs(g0.omega_mag - g1.omega_mag) / g0.omega_mag,
            abs(g0.xi - g1.xi) / max(abs(g0.xi), 1.0),
        )
    for _ in range(200):
        dq = park.DqoJet(
            t=0.0,
            vdq0=rng.normal(scale=10.0, size=3),
            dvdq0=rng.normal(scale=100.0, size=3),
        )
        if norm(dq.vdq0) < 1e-3:
            continue
        rep = park.derivative_frame_check(dq, park.ParkConfig(w_dq=rng.normal()))
        worst_sum = max(worst_sum, rep.sum_rel_err)

    # Remark 7: synchronous balanced frame reproduces the plane-curve result
    cfg_sync = park.ParkConfig(w_dq=100.0 * math.pi, theta0=-math.pi / 2)
    j = signals.eval_jet(signals.make_scenario("E0"), 0.0125)
    g = park.dq0_invariants(park.to_dq0(j, cfg_sync), cfg_sync)
    remark7 = max(
        float(np.abs(g.omega_vec[:2]).max()),
        abs(g.omega_vec[2] - 100.0 * math.pi) / (100.0 * math.pi),
    )
    return [
        PropertyResult("park", "invariants unchanged by dq0 round trip", worst_round, 1e-9),
        PropertyResult("park", "sum identity of derivative splits", worst_sum, 1e-9),
        PropertyResult("park", "Remark-7 reduction at synchronous speed", remark7, 1e-9),
    ]


_SUITES = {
    "geometry": check_geometry,
    "frenet_core": check_frenet,
    "threephase_forms": check_threephase,
    "signals": check_signals,
    "numdiff": check_numdiff,
    "hilbert": check_hilbert,
    "park": check_park,
}


def run(scope="all"):
    """Run one module's property suite, or all of them."""
    if scope == "all":
        results = []
        for suite in _SUITES.values():
            results.extend(suite())
        return results
    if scope not in _SUITES:
        raise KeyError(f"unknown validation scope {scope!r}")
    return _SUITES[scope]()
