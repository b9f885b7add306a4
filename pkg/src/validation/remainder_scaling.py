"""
Remainder scaling: how S_t(u0) - u0 and w(t, u0) shrink with t.
"""

from __future__ import annotations

import logging
from dataclasses import replace
from typing import Any, Dict, List, Optional, Sequence

import scipy.fft as sfft

from src.besov.littlewood_paley import LPFamily, build_lp_family
from src.besov.norms import BesovParams, besov_norm
from src.construction.packets import make_u0
from src.construction.params import ConstructionParams
from src.contracts.schemas import ExperimentReport
from src.foundation.errors import SolverDivergenceError
from src.foundation.model_config import get_thread_count
from src.simulation.euler_solver import SolverConfig, solve
from src.simulation.taylor import linear_departure, remainder, remainder_norm, taylor_coefficient
from src.spectral.fields import VectorField2
from src.validation.common import (
    RunTimer,
    build_metadata,
    clean_row,
    construction_echo,
    fit_loglog_slope,
    param_echo,
    relative_change,
    run_rows,
)

logger = logging.getLogger(__name__)


def _max_drift(values: List[float]) -> float:
    ref = values[0]
    if ref == 0:
        return 0.0
    return max(abs(v - ref) for v in values) / abs(ref)


def remainder_scaling(
    params: ConstructionParams,
    t_list: Sequence[float],
    cfg: SolverConfig,
    *,
    j_min_homog: int = -8,
    threads: Optional[int] = None,
    taylor_check: bool = True,
    seed: int = 0,
) -> ExperimentReport:
    """Per t: ||w(t)|| in homogeneous B^{sigma-2}, ||u(t) - u0|| in B^{sigma-1}, and fitted slopes.

    Raises:
        SolverDivergenceError: a solve blew up; the error names the offending t.
    """
    timer = RunTimer()
    threads = get_thread_count() if threads is None else threads
    grid, sigma, p = params.grid, params.sigma, params.p
    family = build_lp_family(grid, j_min_homog)
    times = [float(t) for t in t_list]

    with sfft.set_workers(threads):
        u0 = make_u0(params)
        u0_besov = besov_norm(u0, BesovParams(s=sigma, p=p), family)
    remainders: Dict[float, VectorField2] = {}

    def _row(t: float) -> Dict[str, Any]:
        try:
            traj = solve(u0, replace(cfg, T=t))
        except SolverDivergenceError as exc:
            raise SolverDivergenceError(exc.step, exc.t, offending_t=t) from exc
        u_t = traj.final
        w = remainder(u0, t, cfg, u_t=u_t)
        remainders[t] = w
        frame = traj.to_frame()
        row = {
            "t": t,
            "remainder_norm": remainder_norm(w, sigma=sigma, p=p, family=family) if t else 0.0,
            "departure_norm": linear_departure(u0, t, cfg, sigma=sigma, p=p, family=family, u_t=u_t),
            "apriori_ratio": (
                besov_norm(u_t, BesovParams(s=sigma, p=p), family) / u0_besov if u0_besov else None
            ),
            "energy_drift": _max_drift(frame["energy"].tolist()),
            "enstrophy_drift": _max_drift(frame["enstrophy"].tolist()),
            "divergence_ratio": traj.max_divergence_ratio(),
            "dt": cfg.dt,
            **param_echo(params),
        }
        logger.info(
            f"remainder-scaling t={t:.4g}: |w|={row['remainder_norm']:.6e} "
            f"|u-u0|={row['departure_norm']:.6e}"
        )
        return clean_row(row)

    rows = run_rows(_row, times, threads)

    summary: Dict[str, Any] = {
        "remainder_slope": fit_loglog_slope([r["t"] for r in rows], [r["remainder_norm"] for r in rows]),
        "departure_slope": fit_loglog_slope([r["t"] for r in rows], [r["departure_norm"] for r in rows]),
        "energy_drift_max": max((r["energy_drift"] for r in rows), default=None),
        "enstrophy_drift_max": max((r["enstrophy_drift"] for r in rows), default=None),
        "apriori_ratio_max": max(
            (r["apriori_ratio"] for r in rows if r["apriori_ratio"] is not None), default=None
        ),
        "u0_besov_norm": u0_besov,
    }
    positive = sorted(t for t in times if t > 0)
    if positive:
        with sfft.set_workers(threads):
            if taylor_check:
                summary.update(
                    _taylor_oracle(u0, remainders[positive[0]], positive[0], cfg, sigma, p, family)
                )
            summary["j_min_sensitivity"] = _j_min_sensitivity(
                remainders[positive[-1]], sigma, p, j_min_homog
            )

    return ExperimentReport(
        experiment="remainder-scaling",
        construction=construction_echo(params),
        rows=rows,
        summary=clean_row(summary),
        metadata=build_metadata(params, family, timer, cfg, seed=seed, threads=threads),
    )


def _taylor_oracle(
    u0: VectorField2,
    w: VectorField2,
    t: float,
    cfg: SolverConfig,
    sigma: float,
    p: float,
    family: LPFamily,
) -> Dict[str, Any]:
    """Compare w(t)/t^2 with (1/2) d/dt P(u(t)) at 0 in homogeneous B^{sigma-2}."""
    scaled = w * (1.0 / t ** 2)
    coeff = taylor_coefficient(u0, cfg, t)
    coeff_norm = remainder_norm(coeff, sigma=sigma, p=p, family=family)
    if coeff_norm == 0:
        return {"taylor_oracle_ratio": None, "taylor_oracle_rel_error": None}
    return {
        "taylor_oracle_ratio": remainder_norm(scaled, sigma=sigma, p=p, family=family) / coeff_norm,
        "taylor_oracle_rel_error": (
            remainder_norm(scaled - coeff, sigma=sigma, p=p, family=family) / coeff_norm
        ),
    }


def _j_min_sensitivity(w: VectorField2, sigma: float, p: float, j_min_homog: int) -> Optional[float]:
    """Relative change of ||w|| when the homogeneous sum starts two blocks higher."""
    shifted = j_min_homog + 2
    if shifted > -1:
        return None
    family = build_lp_family(w.grid, j_min_homog)
    base = remainder_norm(w, sigma=sigma, p=p, family=family)
    moved = remainder_norm(w, sigma=sigma, p=p, family=family, j_min=shifted)
    return relative_change(moved, base)
