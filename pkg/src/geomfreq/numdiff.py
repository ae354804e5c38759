"""Numerical path: jets from sampled waveforms.

Derivatives use centered 5-point stencils (4th-order first derivative,
second derivative exact through quartics); the two outermost samples on
each side are dropped rather than extrapolated.  An optional causal
first-order IIR filter smooths noisy channels before differentiation,
and zero-sequence removal handles rank-deficient three-phase sets.
"""

import numpy as np

from .errors import TooFewSamples, WrongChannelCount
from .frenet import Jet2
from .series import TimeSeries

TRIM = 2  # samples dropped on each side by the 5-point stencils


def stencil_derivatives(values, dt):
    """First and second derivatives of sampled columns.

    Returns (d1, d2) for the interior samples values[TRIM:-TRIM].
    """
    values = np.asarray(values, dtype=np.float64)
    n = values.shape[0]
    if n < 5:
        raise TooFewSamples(f"need at least 5 samples, got {n}")
    f0 = values[:-4]
    f1 = values[1:-3]
    f2 = values[2:-2]
    f3 = values[3:-1]
    f4 = values[4:]
    d1 = (f0 - 8.0 * f1 + 8.0 * f3 - f4) / (12.0 * dt)
    d2 = (-f0 + 16.0 * f1 - 30.0 * f2 + 16.0 * f3 - f4) / (12.0 * dt**2)
    return d1, d2


def differentiate(series):
    """Estimate second-order jets from a 3-channel voltage series."""
    if len(series.channels) != 3:
        raise WrongChannelCount(
            f"expected 3 channels, got {len(series.channels)}"
        )
    d1, d2 = stencil_derivatives(series.values, series.dt)
    core = series.values[TRIM:-TRIM]
    times = series.times[TRIM:-TRIM]
    return [
        Jet2(t=float(times[k]), v=core[k], dv=d1[k], ddv=d2[k])
        for k in range(core.shape[0])
    ]


def lowpass_first_order(series, time_constant):
    """Causal first-order IIR smoothing per channel.

    y[k] = y[k-1] + dt/(tc + dt) * (x[k] - y[k-1]), y[0] = x[0].
    """
    if time_constant <= 0:
        raise ValueError(f"time_constant must be positive, got {time_constant}")
    alpha = series.dt / (time_constant + series.dt)
    x = series.values
    y = np.empty_like(x)
    y[0] = x[0]
    for k in range(1, x.shape[0]):
        y[k] = y[k - 1] + alpha * (x[k] - y[k - 1])
    return series.with_values(y)


def remove_zero_sequence(series):
    """Subtract the instantaneous mean (v_a + v_b + v_c)/3 per sample."""
    if len(series.channels) != 3:
        raise WrongChannelCount(
            f"expected 3 channels, got {len(series.channels)}"
        )
    mean = series.values.mean(axis=1, keepdims=True)
    return series.with_values(series.values - mean)
