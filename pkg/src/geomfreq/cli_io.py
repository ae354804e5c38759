"""CSV and config file formats used by the command line.

Waveform CSV: optional '#' comment lines, then the exact header
``t,va,vb,vc``, comma separated, LF line endings.  Floats are written
with Python's shortest round-trip repr so identical inputs yield
byte-identical files.
"""

import configparser

import numpy as np

from .analysis import COLUMNS
from .errors import MalformedCsv
from .series import TimeSeries

WAVEFORM_HEADER = ("t", "va", "vb", "vc")
DT_JITTER_REL = 1e-9


def _fmt(x):
    return repr(float(x))


def write_waveform_csv(path, series):
    """Write a three-channel waveform with header t,va,vb,vc."""
    times = series.times
    with open(path, "w", newline="\n") as fh:
        fh.write(",".join(WAVEFORM_HEADER) + "\n")
        for k in range(len(series)):
            row = [_fmt(times[k])] + [_fmt(x) for x in series.values[k]]
            fh.write(",".join(row) + "\n")


def read_waveform_csv(path):
    """Parse a waveform CSV back into a TimeSeries.

    Raises MalformedCsv on a wrong header, ragged rows, unparsable
    numbers, or a time column whose spacing jitters beyond 1e-9
    relative.
    """
    with open(path) as fh:
        lines = [ln.rstrip("\n") for ln in fh]
    lines = [ln for ln in lines if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise MalformedCsv(f"{path}: empty file")
    header = tuple(col.strip() for col in lines[0].split(","))
    if header != WAVEFORM_HEADER:
        raise MalformedCsv(
            f"{path}: header must be {','.join(WAVEFORM_HEADER)}, got {lines[0]!r}"
        )
    rows = []
    for ln in lines[1:]:
        parts = ln.split(",")
        if len(parts) != 4:
            raise MalformedCsv(f"{path}: expected 4 columns, got {ln!r}")
        try:
            rows.append([float(p) for p in parts])
        except ValueError as exc:
            raise MalformedCsv(f"{path}: bad number in {ln!r}") from exc
    if len(rows) < 2:
        raise MalformedCsv(f"{path}: need at least 2 samples")
    data = np.array(rows)
    t = data[:, 0]
    steps = np.diff(t)
    dt = float(np.median(steps))
    if dt <= 0 or np.any(np.abs(steps - dt) > DT_JITTER_REL * max(abs(dt), 1.0)):
        raise MalformedCsv(f"{path}: time column is not uniformly spaced")
    return TimeSeries(
        t0=float(t[0]),
        dt=dt,
        channels=("va", "vb", "vc"),
        values=data[:, 1:],
        explicit_times=t,
    )


def write_analysis_csv(path, rows, degenerate_count):
    """Write analysis rows; undefined cells are left empty, and a footer
    comment records how many samples were degenerate."""
    with open(path, "w", newline="\n") as fh:
        fh.write(",".join(COLUMNS) + "\n")
        for row in rows:
            cells = []
            for col in COLUMNS:
                val = getattr(row, col)
                if val is None:
                    cells.append("")
                elif col == "rotation_defined":
                    cells.append(str(int(val)))
                else:
                    cells.append(_fmt(val))
            fh.write(",".join(cells) + "\n")
        fh.write(f"# degenerate_samples={degenerate_count}\n")


def read_config(path):
    """Read an INI-style config into a flat {section.key: value} dict."""
    parser = configparser.ConfigParser()
    read = parser.read(path)
    if not read:
        raise FileNotFoundError(path)
    out = {}
    for section in parser.sections():
        for key, value in parser.items(section):
            out[f"{section}.{key}"] = value
    return out
