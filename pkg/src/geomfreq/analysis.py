"""Per-sample analysis rows shared by the CLI and the demos."""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import frenet
from .errors import DegenerateInput, DegenerateSpeed


@dataclass(frozen=True)
class AnalysisRow:
    """One analyzed sample.  Fields that are undefined at the sample
    (degenerate speed, or RoCoF without rotation) are None and are
    written as empty CSV cells."""

    t: float
    v: Optional[float] = None
    rho: Optional[float] = None
    w1: Optional[float] = None
    w2: Optional[float] = None
    w3: Optional[float] = None
    w: Optional[float] = None
    xi: Optional[float] = None
    kappa: Optional[float] = None
    tau: Optional[float] = None
    eta: Optional[float] = None
    rocof1: Optional[float] = None
    rocof2: Optional[float] = None
    rocof3: Optional[float] = None
    rotation_defined: Optional[int] = None


COLUMNS = (
    "t",
    "v",
    "rho",
    "w1",
    "w2",
    "w3",
    "w",
    "xi",
    "kappa",
    "tau",
    "eta",
    "rocof1",
    "rocof2",
    "rocof3",
    "rotation_defined",
)


def row_from_jet(jet, eps_v=frenet.EPS_V, eps_w=frenet.EPS_W):
    """Invariants and RoCoF decomposition of one jet, None on degeneracy."""
    try:
        g = frenet.invariants(jet, eps_v, eps_w)
    except DegenerateSpeed:
        return AnalysisRow(t=jet.t)
    if g.rotation_defined:
        rc = frenet.rocof(jet, eps_v, eps_w)
        eta = rc.eta
        rocof_vec = rc.omega_dot
    else:
        eta = None
        rocof_vec = (None, None, None)
    return AnalysisRow(
        t=jet.t,
        v=g.v_mag,
        rho=g.rho,
        w1=g.omega_vec[0],
        w2=g.omega_vec[1],
        w3=g.omega_vec[2],
        w=g.omega_mag,
        xi=g.xi,
        kappa=g.kappa,
        tau=g.tau,
        eta=eta,
        rocof1=rocof_vec[0],
        rocof2=rocof_vec[1],
        rocof3=rocof_vec[2],
        rotation_defined=int(g.rotation_defined),
    )


def analyze_jets(jets, eps_v=frenet.EPS_V, eps_w=frenet.EPS_W):
    """Analyze a jet sequence; returns (rows, degenerate_speed_count)."""
    rows = [row_from_jet(j, eps_v, eps_w) for j in jets]
    degenerate = sum(1 for r in rows if r.v is None)
    if rows and degenerate == len(rows):
        raise DegenerateInput("every sample is degenerate")
    return rows, degenerate
