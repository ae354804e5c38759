"""Harmonic distortion and the torsional frequency.

A balanced 11th harmonic (E3) keeps the voltage curve planar, so the
torsional frequency xi stays at zero.  Distorting the harmonic's phase
displacements (E4) or magnitudes (E5) bends the curve out of its plane
and xi becomes a large oscillating quantity, even though the waveforms
look almost identical to the eye.

Run:  python3 demos/02_harmonics_and_torsion.py
"""

import numpy as np

from geomfreq import frenet, signals

for sid in ("E3", "E4", "E5"):
    model = signals.make_scenario(sid)
    ts = np.arange(0.0, 0.04, 1e-4)
    xi = np.array(
        [frenet.invariants(signals.eval_jet(model, float(t))).xi for t in ts]
    )
    w = np.array(
        [
            frenet.invariants(signals.eval_jet(model, float(t))).omega_mag
            for t in ts
        ]
    )
    print(f"{sid}: over one 20 ms period x2")
    print(f"  max |xi|   = {np.max(np.abs(xi)):10.4f} 1/s")
    print(f"  |omega| in [{w.min():9.4f}, {w.max():9.4f}] rad/s")
    print()

print("The closed-form three-phase route gives the same numbers:")
from geomfreq import threephase

model = signals.make_scenario("E5")
for t in (0.001, 0.007, 0.013):
    g = frenet.invariants(signals.eval_jet(model, t))
    cf = threephase.closed_form_invariants(signals.phase_jets(model, t))
    print(f"  t = {t}: generic xi = {g.xi:+.6f}   closed form xi = {cf.xi:+.6f}")
