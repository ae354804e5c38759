"""Shared helpers for the test suite."""

import math

import numpy as np
import pytest

from geomfreq import signals

W_O = 100.0 * math.pi
OMEGA_POS = W_O / math.sqrt(3.0)


def scenario_jets(scenario_id, t0, t1, dt):
    """Exact analytic jets of a preset scenario on a uniform grid."""
    model = signals.make_scenario(scenario_id)
    n = int(round((t1 - t0) / dt)) + 1
    return [signals.eval_jet(model, t0 + k * dt) for k in range(n)]


@pytest.fixture(scope="session")
def rng():
    return np.random.default_rng(20260823)
