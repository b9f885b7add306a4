"""
Norm inflation: ||S_t(u0) - u0|| in B^sigma stays bounded below along
t_n = eps 2^{-kn}, while the same difference in B^{sigma-1} decays like t_n.

Each row also records the terms of the lower-bound chain

    B_n = 2^{kn sigma} ||Delta_kn (S_t u0 - u0)||
        >= t 2^{kn sigma} ||Delta_kn (u0 . grad u0)||      (main)
           - t ||Q(u0 . grad u0)||_{B^sigma}               (Q-term bound)
           - 2^{2kn} ||w(t, u0)||_{homogeneous B^{sigma-2}} (w-term bound)

computed with the same discrete nonlinear term the solver uses, so the
inequality holds up to roundoff.
"""

from __future__ import annotations

import logging
from dataclasses import replace
from typing import Any, Dict, List, Optional, Sequence

import scipy.fft as sfft

from src.besov.littlewood_paley import build_lp_family, dyadic_block
from src.besov.norms import BesovParams, besov_norm, dominant_block
from src.construction.leray import leray_Q
from src.construction.nonlinear import nonlinear_term
from src.construction.packets import make_u0
from src.construction.params import ConstructionParams
from src.contracts.schemas import ExperimentReport
from src.foundation.errors import ConfigurationError, SolverDivergenceError
from src.foundation.model_config import get_thread_count
from src.simulation.euler_solver import SolverConfig, cfl_bound, solve
from src.simulation.taylor import remainder, remainder_norm
from src.spectral.operators import lp_norm
from src.validation.common import (
    RunTimer,
    build_metadata,
    clean_row,
    construction_echo,
    fit_loglog_slope,
    param_echo,
    run_rows,
)

logger = logging.getLogger(__name__)


def inflation_times(params: ConstructionParams, eps: float, n_list: Sequence[int]) -> List[float]:
    """t_n = eps 2^{-kn}."""
    return [eps * 2.0 ** (-params.k * n) for n in n_list]


def inflation(
    params: ConstructionParams,
    eps: float,
    n_list: Sequence[int],
    cfg: SolverConfig,
    *,
    j_min_homog: int = -8,
    threads: Optional[int] = None,
    seed: int = 0,
) -> ExperimentReport:
    """Per n: t_n, D_n, contrast norm, dominant block and the chain terms.

    Raises:
        ConfigurationError: eps < 0, n outside 0..J, or dt above the CFL bound.
        SolverDivergenceError: a solve blew up; the error names t_n.
    """
    timer = RunTimer()
    if eps < 0:
        raise ConfigurationError(f"eps must be >= 0 (got {eps})", field="eps")
    for n in n_list:
        if int(n) != n or n < 0 or n > params.J:
            raise ConfigurationError(f"every n must be an integer in 0..J={params.J} (got {n})", field="n")
    threads = get_thread_count() if threads is None else threads
    grid, sigma, p, k = params.grid, params.sigma, params.p, params.k
    family = build_lp_family(grid, j_min_homog)
    besov = BesovParams(s=sigma, p=p)
    contrast = BesovParams(s=sigma - 1.0, p=p)

    with sfft.set_workers(threads):
        u0 = make_u0(params)
        bound = cfl_bound(u0, cfg.cfl_safety)
        if cfg.dt > bound:
            raise ConfigurationError(
                f"dt={cfg.dt:.3g} exceeds CFL bound {bound:.3g} for the largest n; "
                "use a smaller eps or dt, or a larger grid_N",
                field="eps",
            )
        product = nonlinear_term(u0, cfg.dealias)
        q_besov = besov_norm(leray_Q(product), besov, family)

    def _row(n: int) -> Dict[str, Any]:
        kn = k * n
        t_n = eps * 2.0 ** (-kn)
        if t_n > 0:
            try:
                u_t = solve(u0, replace(cfg, T=t_n)).final
            except SolverDivergenceError as exc:
                raise SolverDivergenceError(exc.step, exc.t, offending_t=t_n) from exc
        else:
            u_t = u0
        dep = u_t - u0
        w = remainder(u0, t_n, cfg, u_t=u_t)
        weight = 2.0 ** (kn * sigma)
        j_dom, d_n = dominant_block(dep, besov, family)
        block_bound = weight * lp_norm(dyadic_block(dep, kn, family), p)
        main = t_n * weight * lp_norm(dyadic_block(product, kn, family), p)
        q_bound = t_n * q_besov
        w_bound = 2.0 ** (2 * kn) * remainder_norm(w, sigma=sigma, p=p, family=family)
        row = {
            "n": n,
            "t_n": t_n,
            "D_n": d_n,
            "contrast_norm": besov_norm(dep, contrast, family),
            "dominant_block": j_dom,
            "block_bound": block_bound,
            "main_term": main,
            "q_term": t_n * weight * lp_norm(dyadic_block(leray_Q(product), kn, family), p),
            "w_term": weight * lp_norm(dyadic_block(w, kn, family), p),
            "q_term_bound": q_bound,
            "w_term_bound": w_bound,
            "chain_residual": block_bound - (main - q_bound - w_bound),
            "eps": eps,
            "dt": cfg.dt,
            **param_echo(params),
        }
        logger.info(
            f"inflation n={n}: t_n={t_n:.4g} D_n={d_n:.6e} B_n={block_bound:.6e} "
            f"contrast={row['contrast_norm']:.6e} dominant_block={j_dom}"
        )
        return clean_row(row)

    rows = run_rows(_row, [int(n) for n in n_list], threads)
    return ExperimentReport(
        experiment="inflation",
        construction=construction_echo(params),
        rows=rows,
        summary=clean_row(_summarize(rows, q_besov)),
        metadata=build_metadata(params, family, timer, cfg, seed=seed, threads=threads),
    )


def _summarize(rows: List[Dict[str, Any]], q_besov: float) -> Dict[str, Any]:
    summary: Dict[str, Any] = {"q_term_besov": q_besov}
    if not rows:
        return summary
    ordered = sorted(rows, key=lambda r: r["n"])
    first, last = ordered[0], ordered[-1]

    def _ratio(key: str) -> Optional[float]:
        ref = first[key]
        if not ref:
            return None
        return min(r[key] for r in ordered) / ref

    summary.update(
        {
            "block_plateau_ratio": _ratio("block_bound"),
            "D_plateau_ratio": _ratio("D_n"),
            "contrast_decay": (
                first["contrast_norm"] / last["contrast_norm"] if last["contrast_norm"] else None
            ),
            "contrast_slope": fit_loglog_slope(
                [r["t_n"] for r in ordered], [r["contrast_norm"] for r in ordered]
            ),
            "empirical_eps0": min(r["block_bound"] for r in ordered),
            "chain_residual_min": min(r["chain_residual"] for r in ordered),
        }
    )
    return summary
