"""
Pseudo-Spectral Euler Solver

Integrates the projected form du/dt = -P(u . grad u) of the 2D incompressible
Euler equations with classical fixed-step RK4. The state is advanced in
spectral representation; the result of every step is re-projected with P.

Snapshot times are hit exactly by shortening the step that would overshoot
them. Negative horizons integrate backward in time.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence

import numpy as np
import pandas as pd

from src.construction.leray import leray_P
from src.construction.nonlinear import nonlinear_term
from src.construction.params import DEFAULT_DEALIAS
from src.foundation.errors import ConfigurationError, SolverDivergenceError
from src.spectral.fields import VectorField2, inverse_transform
from src.spectral.operators import lp_norm

logger = logging.getLogger(__name__)

DIVERGENCE_RATIO_TOL = 1e-10


@dataclass(frozen=True)
class SolverConfig:
    """Time-stepping parameters."""

    dt: float
    T: float
    dealias: Optional[float] = DEFAULT_DEALIAS
    diagnostics_every: int = 1
    cfl_safety: float = 0.5
    integrator: str = "rk4"

    def __post_init__(self) -> None:
        if not (self.dt > 0 and math.isfinite(self.dt)):
            raise ConfigurationError(f"dt must be positive (got {self.dt})", field="dt")
        if not math.isfinite(self.T):
            raise ConfigurationError(f"T must be finite (got {self.T})", field="T")
        if self.diagnostics_every < 1:
            raise ConfigurationError(
                f"diagnostics_every must be >= 1 (got {self.diagnostics_every})",
                field="diagnostics_every",
            )
        if self.integrator != "rk4":
            raise ConfigurationError(
                f"unsupported integrator {self.integrator!r}", field="integrator"
            )

    def to_dict(self) -> Dict[str, Any]:
        return {
            "dt": self.dt,
            "T": self.T,
            "dealias": self.dealias,
            "diagnostics_every": self.diagnostics_every,
            "cfl_safety": self.cfl_safety,
            "integrator": self.integrator,
        }


@dataclass
class Trajectory:
    """Snapshots (t, u) and per-step diagnostics of one solve."""

    times: List[float] = field(default_factory=list)
    snapshots: List[VectorField2] = field(default_factory=list)
    diagnostics: List[Dict[str, float]] = field(default_factory=list)

    def record(self, t: float, u: VectorField2) -> None:
        self.times.append(float(t))
        self.snapshots.append(u.as_physical())

    @property
    def final(self) -> VectorField2:
        return self.snapshots[-1]

    def max_divergence_ratio(self) -> float:
        if not self.diagnostics:
            return 0.0
        return max(d["divergence_ratio"] for d in self.diagnostics)

    def to_frame(self) -> pd.DataFrame:
        columns = ["step", "t", "energy", "enstrophy", "max_divergence", "divergence_ratio"]
        return pd.DataFrame(self.diagnostics, columns=columns)


def rhs(u: VectorField2, dealias: Optional[float] = DEFAULT_DEALIAS) -> VectorField2:
    """-P(u . grad u), in the representation of ``u``."""
    return -leray_P(nonlinear_term(u, dealias))


def diagnostics(u: VectorField2) -> Dict[str, float]:
    """Energy ||u||_2, enstrophy ||curl u||_2 and divergence measures, via Parseval."""
    grid = u.grid
    u_hat = u.as_spectral()
    v1, v2 = u_hat.u1.data, u_hat.u2.data
    xi1, xi2 = grid.xi1, grid.xi2
    div_hat = 1j * (xi1 * v1 + xi2 * v2)
    curl_hat = 1j * (xi1 * v2 - xi2 * v1)
    grad_sq = float(np.sum(grid.xi_squared * (np.abs(v1) ** 2 + np.abs(v2) ** 2)))
    div_l2 = grid.L * math.sqrt(float(np.sum(np.abs(div_hat) ** 2)))
    grad_l2 = grid.L * math.sqrt(grad_sq)
    div_phys = inverse_transform(div_hat)
    return {
        "energy": grid.L * math.sqrt(float(np.sum(np.abs(v1) ** 2 + np.abs(v2) ** 2))),
        "enstrophy": grid.L * math.sqrt(float(np.sum(np.abs(curl_hat) ** 2))),
        "max_divergence": float(np.max(np.abs(div_phys))),
        "divergence_ratio": div_l2 / grad_l2 if grad_l2 > 0 else 0.0,
    }


def cfl_bound(u0: VectorField2, cfl_safety: float = 0.5) -> float:
    """Largest admissible step cfl_safety * dx / ||u0||_inf (inf for u0 = 0)."""
    u_max = lp_norm(u0, math.inf)
    if u_max == 0.0:
        return math.inf
    return cfl_safety * u0.grid.dx / u_max


def choose_dt(u0: VectorField2, dt_cap: float = 1e-3, cfl_safety: float = 0.5) -> float:
    """min(dt_cap, CFL/4)."""
    return min(dt_cap, cfl_bound(u0, cfl_safety) / 4.0)


def _finite(u: VectorField2) -> bool:
    return bool(np.all(np.isfinite(u.u1.data)) and np.all(np.isfinite(u.u2.data)))


def step(
    u: VectorField2,
    dt: float,
    cfg: Optional[SolverConfig] = None,
    step_index: int = 0,
    t: float = 0.0,
) -> VectorField2:
    """One RK4 step followed by Leray re-projection.

    Raises:
        SolverDivergenceError: non-finite values after the step.
    """
    dealias = cfg.dealias if cfg is not None else DEFAULT_DEALIAS
    k1 = rhs(u, dealias)
    k2 = rhs(u + k1 * (0.5 * dt), dealias)
    k3 = rhs(u + k2 * (0.5 * dt), dealias)
    k4 = rhs(u + k3 * dt, dealias)
    out = leray_P(u + (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (dt / 6.0))
    if not _finite(out):
        raise SolverDivergenceError(step_index, t + dt)
    return out


def _step_sizes(span: float, dt: float) -> List[float]:
    """Signed step sizes covering ``span``; only the last may be shorter than dt."""
    if span == 0.0:
        return []
    sign = 1.0 if span > 0 else -1.0
    length = abs(span)
    full = int(math.floor(length / dt * (1.0 + 1e-12)))
    sizes = [sign * dt] * full
    rest = length - full * dt
    if rest > 1e-12 * max(length, dt):
        sizes.append(sign * rest)
    return sizes


def solve(
    u0: VectorField2,
    cfg: SolverConfig,
    times: Optional[Sequence[float]] = None,
) -> Trajectory:
    """Integrate from t = 0 and record snapshots.

    Args:
        u0: initial velocity, divergence-free.
        cfg: time-stepping configuration; cfg.T is always a snapshot.
        times: extra snapshot times, all sharing the sign of cfg.T.

    Returns:
        Trajectory with snapshots at 0, every requested time, and cfg.T.

    Raises:
        ConfigurationError: dt violates the CFL bound, or mixed-sign times.
        SolverDivergenceError: non-finite values during the run.
    """
    bound = cfl_bound(u0, cfg.cfl_safety)
    if cfg.dt > bound:
        raise ConfigurationError(
            f"dt={cfg.dt:.3g} exceeds CFL bound {bound:.3g}; reduce dt or eps, or raise grid_N",
            field="dt",
        )
    targets = sorted({float(cfg.T), *(float(t) for t in (times or []))}, key=abs)
    if any(t * cfg.T < 0 for t in targets):
        raise ConfigurationError("snapshot times must share the sign of T", field="T")

    traj = Trajectory()
    u = u0.as_spectral()
    traj.record(0.0, u0)
    traj.diagnostics.append({"step": 0, "t": 0.0, **diagnostics(u)})

    t = 0.0
    n_steps = 0
    for target in targets:
        if target == 0.0:
            continue
        start = t
        elapsed = 0.0
        for h in _step_sizes(target - start, cfg.dt):
            u = step(u, h, cfg, step_index=n_steps + 1, t=t)
            n_steps += 1
            elapsed += h
            t = start + elapsed
            if n_steps % cfg.diagnostics_every == 0:
                _record_diagnostics(traj, n_steps, t, u)
        t = target
        traj.record(t, u)
        if n_steps % cfg.diagnostics_every != 0:
            _record_diagnostics(traj, n_steps, t, u)

    logger.debug(f"solve: {n_steps} steps to T={cfg.T:.4g} (dt={cfg.dt:.3g})")
    return traj


def _record_diagnostics(traj: Trajectory, n_steps: int, t: float, u: VectorField2) -> None:
    record = {"step": n_steps, "t": t, **diagnostics(u)}
    traj.diagnostics.append(record)
    logger.debug(
        "step %d t=%.4g energy=%.6e enstrophy=%.6e div_ratio=%.2e",
        n_steps, t, record["energy"], record["enstrophy"], record["divergence_ratio"],
    )
    if record["divergence_ratio"] > DIVERGENCE_RATIO_TOL:
        logger.warning(
            "divergence ratio %.2e exceeds %.0e at step %d (t=%.4g)",
            record["divergence_ratio"], DIVERGENCE_RATIO_TOL, n_steps, t,
        )
