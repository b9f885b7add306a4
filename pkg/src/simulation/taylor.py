"""
Short-time expansion of the Euler flow S_t around u0.

    departure  S_t(u0) - u0                      ~ t
    remainder  w(t, u0) = S_t(u0) - u0 - t P(u0) ~ t^2

with P(u) = -P(u . grad u) the projected right-hand side.
"""

from __future__ import annotations

from dataclasses import replace
from typing import Optional

from src.besov.littlewood_paley import LPFamily
from src.besov.norms import BesovParams, besov_norm
from src.construction.leray import leray_P
from src.construction.nonlinear import advection
from src.simulation.euler_solver import SolverConfig, rhs, solve
from src.spectral.fields import VectorField2


def flow(u0: VectorField2, t: float, cfg: SolverConfig) -> VectorField2:
    """S_t(u0), physical; t may be negative."""
    if t == 0:
        return u0.as_physical()
    return solve(u0, replace(cfg, T=float(t))).final


def departure(
    u0: VectorField2, t: float, cfg: SolverConfig, u_t: Optional[VectorField2] = None
) -> VectorField2:
    """S_t(u0) - u0. ``u_t`` is S_t(u0) when the caller already has it."""
    if u_t is None:
        u_t = flow(u0, t, cfg)
    return u_t.as_physical() - u0.as_physical()


def linear_departure(
    u0: VectorField2,
    t: float,
    cfg: SolverConfig,
    *,
    sigma: float,
    p: float,
    family: LPFamily,
    u_t: Optional[VectorField2] = None,
) -> float:
    """||S_t(u0) - u0|| in B^{sigma-1}_{p,inf}."""
    if t == 0:
        return 0.0
    return besov_norm(departure(u0, t, cfg, u_t), BesovParams(s=sigma - 1.0, p=p), family)


def remainder(
    u0: VectorField2, t: float, cfg: SolverConfig, u_t: Optional[VectorField2] = None
) -> VectorField2:
    """w(t, u0) = S_t(u0) - u0 - t P(u0), physical."""
    if t == 0:
        return VectorField2.zeros(u0.grid)
    return departure(u0, t, cfg, u_t) - rhs(u0.as_physical(), cfg.dealias) * t


def remainder_norm(
    w: VectorField2, *, sigma: float, p: float, family: LPFamily, j_min: Optional[int] = None
) -> float:
    """||w|| in the homogeneous space B^{sigma-2}_{p,inf}."""
    params = BesovParams(s=sigma - 2.0, p=p, homogeneous=True, j_min=j_min)
    return besov_norm(w, params, family)


def taylor_coefficient(u0: VectorField2, cfg: SolverConfig, h: float) -> VectorField2:
    """(1/2) d/dt P(u(t)) at t = 0 by a centered difference of step h along the flow."""
    forward = rhs(flow(u0, h, cfg), cfg.dealias)
    backward = rhs(flow(u0, -h, cfg), cfg.dealias)
    return (forward - backward) * (1.0 / (4.0 * h))


def second_variation(u0: VectorField2, dealias: float = 2.0 / 3.0) -> VectorField2:
    """(1/2) d/dt P(u(t)) at t = 0 in closed form: -(1/2) P(a . grad u0 + u0 . grad a), a = P(u0)."""
    u = u0.as_physical()
    a = rhs(u, dealias)
    return leray_P(advection(a, u, dealias) + advection(u, a, dealias)) * -0.5
