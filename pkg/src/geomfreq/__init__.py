"""Geometric frequency analysis of polyphase waveforms.

Interprets a set of voltages as the time derivative of a space curve
and computes the Frenet frame, curvature and torsion together with the
radial, azimuthal and torsional frequency components and the
decomposed rate of change of frequency.
"""

from .errors import (
    DegenerateEnvelope,
    DegenerateInput,
    DegenerateRotation,
    DegenerateSpeed,
    GeomfreqError,
    InvalidParameter,
    InvalidRange,
    MalformedCsv,
    TooFewSamples,
    TooShort,
    UnknownScenario,
    WrongChannelCount,
)
from .frenet import (
    EPS_V,
    EPS_W,
    FrenetFrame,
    GeomInvariants,
    Jet2,
    RocofDecomposition,
    frame,
    invariants,
    omega_dot_direct,
    rho_prime,
    rocof,
    second_derivative_decomposition,
    speed,
    velocity_identity_residual,
)
from .geometry import cross, inner, norm, triple_scalar, vec3
from .hilbert import analytic_embed, geometric_equivalence, instantaneous_frequency_classical
from .numdiff import differentiate, lowpass_first_order, remove_zero_sequence
from .park import DqoJet, ParkConfig, dq0_invariants, derivative_frame_check, from_dq0, to_dq0
from .series import TimeSeries
from .signals import SignalModel, eval_jet, make_scenario, phase_jets, sample
from .threephase import (
    PhaseJet,
    auxiliaries,
    closed_form_invariants,
    stationary_sequence,
)

__version__ = "0.1.0"
