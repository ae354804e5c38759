"""Geometric frequency of stationary waveforms.

A DC voltage traces a straight line (no rotation at all), a single-phase
analytic pair traces a circle in a plane, and a balanced three-phase set
traces a circle whose plane is orthogonal to (1,1,1).  The azimuthal
frequency vector makes all three cases directly comparable.

Run:  python3 demos/01_stationary_invariants.py
"""

import math

import numpy as np

from geomfreq import frenet, signals

np.set_printoptions(precision=4, suppress=True)


def show(title, model, t):
    j = signals.eval_jet(model, t)
    g = frenet.invariants(j)
    print(f"\n{title}  (t = {t} s)")
    print(f"  v        = {np.asarray(j.v)}")
    print(f"  |v|      = {g.v_mag:.4f} V")
    print(f"  rho      = {g.rho:+.3e} 1/s")
    print(f"  omega    = {g.omega_vec}  (|omega| = {g.omega_mag:.4f} rad/s)")
    print(f"  xi       = {g.xi:+.3e} 1/s")
    print(f"  rotating = {g.rotation_defined}")
    if g.rotation_defined:
        f = frenet.frame(j)
        print(f"  binormal = {f.B}")


show("DC level (straight line)", signals.make_scenario("DC"), 0.1)
show("single-phase analytic pair (plane circle)",
     signals.make_scenario("SINGLE_PHASE"), 0.0)
show("balanced three-phase set E0", signals.make_scenario("E0"), 0.0)
show("unbalanced magnitudes E1", signals.make_scenario("E1"), 0.0)
show("unbalanced angles E2", signals.make_scenario("E2"), 2.5e-3)

print("\nFor the balanced set, omega stays pinned at (w_o/sqrt(3))(1,1,1):")
model = signals.make_scenario("E0")
for t in (0.0, 0.005, 0.013):
    g = frenet.invariants(signals.eval_jet(model, t))
    print(f"  t = {t:6.3f}  omega = {g.omega_vec}"
          f"   expected component {100 * math.pi / math.sqrt(3):.4f}")
