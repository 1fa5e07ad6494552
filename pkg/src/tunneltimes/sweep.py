"""Parameter sweeps and the CSV exchange format.

CSV layout: '#'-prefixed key=value metadata lines, one header row, then
data rows with 17 significant digits (full float64 round-trip).  Consumers
(including the plotting frontend) should treat unknown metadata keys as
opaque.
"""

from __future__ import annotations

import cmath
import datetime
import io
from dataclasses import dataclass, field

import numpy as np

from . import __version__, kernels
from .kinematics import BarrierSpec, Regime
from .times import times_grid

FLOAT_FMT = "%.17g"


@dataclass(frozen=True)
class SweepRequest:
    """One eps sweep at fixed barrier parameters."""

    regime: Regime = Regime.RELATIVISTIC
    u: float = 2.0 * np.pi
    mu_ratio: float = 0.98
    eps_start: float = 0.05
    eps_end: float = 0.95
    steps: int = 181
    wide: bool = False
    # None selects the balanced spin-down injection (equal channel weights)
    bprime: complex | None = 0j
    reproducible: bool = False

    def __post_init__(self):
        if self.steps < 2:
            raise ValueError(f"steps must be >= 2, got {self.steps}")
        if not (0.0 < self.eps_start < self.eps_end < 1.0):
            raise ValueError(
                f"need 0 < eps_start < eps_end < 1, got "
                f"{self.eps_start}..{self.eps_end}"
            )


@dataclass
class SweepResult:
    metadata: dict[str, str]
    columns: dict[str, np.ndarray] = field(default_factory=dict)


def run_sweep(req: SweepRequest) -> SweepResult:
    eps = np.linspace(req.eps_start, req.eps_end, req.steps)
    spec = BarrierSpec(u=req.u, mu_ratio=req.mu_ratio, eps=eps[0], regime=req.regime)
    cols = times_grid(spec, eps, wide=req.wide, bprime=req.bprime)
    meta = {
        "format": "tunneltimes-sweep-v1",
        "version": __version__,
        "regime": req.regime.value,
        "u": FLOAT_FMT % req.u,
        "mu_ratio": FLOAT_FMT % req.mu_ratio,
        "eps_start": FLOAT_FMT % req.eps_start,
        "eps_end": FLOAT_FMT % req.eps_end,
        "steps": str(req.steps),
        "wide": str(req.wide).lower(),
        "backend": "numba" if kernels.USE_NUMBA else "numpy",
    }
    if req.regime is Regime.SUPERRELATIVISTIC:
        if req.bprime is None:
            meta["spin_down"] = "balanced"
        else:
            meta["bprime_mag"] = FLOAT_FMT % abs(req.bprime)
            meta["bprime_phase"] = FLOAT_FMT % cmath.phase(req.bprime)
    if not req.reproducible:
        meta["created"] = datetime.datetime.now(datetime.timezone.utc).isoformat()
    return SweepResult(metadata=meta, columns=cols)


def write_csv(result: SweepResult, stream: io.TextIOBase) -> None:
    for k, v in result.metadata.items():
        stream.write(f"# {k}={v}\n")
    names = list(result.columns)
    stream.write(",".join(names) + "\n")
    cols = [result.columns[n] for n in names]
    for row in zip(*cols):
        stream.write(",".join(FLOAT_FMT % v for v in row) + "\n")


def dumps_csv(result: SweepResult) -> str:
    buf = io.StringIO()
    write_csv(result, buf)
    return buf.getvalue()


def read_csv(stream: io.TextIOBase) -> SweepResult:
    """Parse the sweep CSV format back into metadata and float columns."""
    meta: dict[str, str] = {}
    header: list[str] | None = None
    rows: list[list[float]] = []
    for raw in stream:
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if "=" in body:
                k, v = body.split("=", 1)
                meta[k.strip()] = v.strip()
            continue
        if header is None:
            header = [h.strip() for h in line.split(",")]
            continue
        rows.append([float(v) for v in line.split(",")])
    if header is None:
        raise ValueError("no header row found")
    data = np.array(rows, dtype=float).reshape(len(rows), len(header))
    return SweepResult(
        metadata=meta,
        columns={name: data[:, i] for i, name in enumerate(header)},
    )
