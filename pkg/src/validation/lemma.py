"""
Lemma verification: properties of the initial data and of its self-advection
in the block kn.

All products here are alias-free (3/2 padding), so every block of
u0 . grad u0 is the block of the exact product.
"""

from __future__ import annotations

import logging
from typing import Any, Dict, List, Optional, Sequence

import scipy.fft as sfft

from src.besov.littlewood_paley import LPFamily, build_lp_family, dyadic_block
from src.besov.norms import BesovParams, besov_norm
from src.construction.leray import leray_Q
from src.construction.nonlinear import resolved_advection
from src.construction.packets import packet_spectral
from src.construction.params import CARRIER_RATIO, ConstructionParams
from src.construction.witnesses import i3_from_witnesses, lemma_terms, make_h
from src.contracts.schemas import ExperimentReport
from src.foundation.errors import ConfigurationError
from src.foundation.model_config import get_thread_count
from src.spectral.fields import VectorField2
from src.spectral.operators import divergence, gradient, lp_norm, spectral_l2_norm
from src.validation.common import (
    RunTimer,
    build_metadata,
    clean_row,
    construction_echo,
    param_echo,
    relative_change,
    run_rows,
)

logger = logging.getLogger(__name__)

SELECTION_MIN_BLOCK = 4


def _sum_fields(fields: Sequence[VectorField2], like: VectorField2) -> VectorField2:
    total = VectorField2.zeros(like.grid).with_representation(like.representation)
    for f in fields:
        total = total + f
    return total


def divergence_residual(u: VectorField2) -> float:
    """||div u||_2 / ||grad u||_2."""
    grad_sq = spectral_l2_norm(gradient(u.u1)) ** 2 + spectral_l2_norm(gradient(u.u2)) ** 2
    if grad_sq == 0:
        return 0.0
    return spectral_l2_norm(divergence(u)) / grad_sq ** 0.5


def block_selection_residual(
    u0: VectorField2, packets: Dict[int, VectorField2], family: LPFamily
) -> Optional[float]:
    """Largest relative L2 error of Delta_m u0 = f_m (packet blocks) and Delta_i u0 = 0 (others), i >= 4."""
    u0_norm = spectral_l2_norm(u0)
    residuals: List[float] = []
    for j in range(SELECTION_MIN_BLOCK, family.j_max + 1):
        block = dyadic_block(u0, j, family)
        if j in packets:
            residuals.append(spectral_l2_norm(block - packets[j]) / spectral_l2_norm(packets[j]))
        elif u0_norm > 0:
            residuals.append(spectral_l2_norm(block) / u0_norm)
    return max(residuals) if residuals else None


def _validate_n_list(params: ConstructionParams, n_list: Sequence[int]) -> List[int]:
    out = []
    for n in n_list:
        if int(n) != n or n < 1 or n > params.J:
            raise ConfigurationError(
                f"every n must be an integer in 1..J={params.J} (got {n})", field="n"
            )
        out.append(int(n))
    return out


def verify_lemma(
    params: ConstructionParams,
    n_list: Sequence[int],
    *,
    j_min_homog: int = -8,
    threads: Optional[int] = None,
    seed: int = 0,
) -> ExperimentReport:
    """Measure divergence, Besov plateau, block identities and the lower bound per n.

    Args:
        params: initial-data parameters.
        n_list: block indices n (block kn), each in 1..J.
        j_min_homog: lowest homogeneous block of the family.
        threads: worker threads (defaults to BESOV_LAB_THREADS).
        seed: echoed into the metadata.

    Returns:
        ExperimentReport with one row per n.
    """
    timer = RunTimer()
    n_values = _validate_n_list(params, n_list)
    threads = get_thread_count() if threads is None else threads
    grid, sigma, p, k = params.grid, params.sigma, params.p, params.k
    family = build_lp_family(grid, j_min_homog)
    besov = BesovParams(s=sigma, p=p)

    with sfft.set_workers(threads):
        packets = {m: packet_spectral(grid, m, sigma) for m in params.packet_indices()}
        ordered = [packets[m] for m in params.packet_indices()]
        u0 = _sum_fields(ordered, ordered[0])
        besov_J = besov_norm(u0, besov, family)
        besov_prev = (
            besov_norm(_sum_fields(ordered[:-1], ordered[0]), besov, family)
            if params.J >= 1 else None
        )
        plateau_change = relative_change(besov_J, besov_prev)
        div_res = divergence_residual(u0)
        selection = block_selection_residual(u0, packets, family)

        product = resolved_advection(u0, u0)
        diagonal = _sum_fields([resolved_advection(f, f) for f in ordered], product)
        product_norm = lp_norm(product, p)
        q_term = besov_norm(leray_Q(product), besov, family)
        partition = family.partition_residual()
        sq_lo, sq_hi = family.square_sum_range()

    def _row(n: int) -> Dict[str, Any]:
        kn = k * n
        block = dyadic_block(product, kn, family)
        block_norm = lp_norm(block, p)
        r_n = 2.0 ** (kn * (sigma - 1.0)) * block_norm

        terms = lemma_terms(params, n)
        i3_parts = i3_from_witnesses(grid, k, n, sigma)
        i3_assembled = i3_parts["I31"] + i3_parts["I32"] + i3_parts["I33"]
        i3_norm = lp_norm(terms.I3, p)
        h4_norm = lp_norm(make_h(grid, k, n, sigma).h4, p)

        row = {
            "n": n,
            "r_n": r_n,
            "h4_norm": h4_norm,
            "div_residual": div_res,
            "lower_bound_ratio": r_n / (CARRIER_RATIO ** 2 * h4_norm) if h4_norm > 0 else None,
            "besov_norm_J": besov_J,
            "besov_norm_J_minus_1": besov_prev,
            "besov_plateau_change": plateau_change,
            "diagonal_residual": (
                lp_norm(dyadic_block(diagonal, kn, family), p) / product_norm
                if product_norm > 0 else 0.0
            ),
            "cross_term_residual": (
                lp_norm(block - terms.total, p) / block_norm if block_norm > 0 else 0.0
            ),
            "i3_identity_residual": (
                lp_norm(terms.I3 - i3_assembled, p) / i3_norm if i3_norm > 0 else 0.0
            ),
            "I1_norm": lp_norm(terms.I1, p),
            "I2_norm": lp_norm(terms.I2, p),
            "I3_norm": i3_norm,
            "I31_I32_norm": lp_norm(i3_parts["I31"], p) + lp_norm(i3_parts["I32"], p),
            "I33_norm": lp_norm(i3_parts["I33"], p),
            "q_term_besov": q_term,
            **param_echo(params),
        }
        logger.info(
            f"verify-lemma n={n}: r_n={r_n:.6e} h4={h4_norm:.6e} "
            f"diag={row['diagonal_residual']:.2e} cross={row['cross_term_residual']:.2e}"
        )
        return clean_row(row)

    rows = run_rows(_row, n_values, threads)
    summary = _summarize(rows)
    summary.update(
        {
            "partition_residual": partition,
            "square_sum_min": sq_lo,
            "square_sum_max": sq_hi,
            "block_selection_residual": selection,
            "div_residual": div_res,
            "besov_norm_J": besov_J,
            "besov_plateau_change": plateau_change,
            "q_term_besov": q_term,
        }
    )
    return ExperimentReport(
        experiment="verify-lemma",
        construction=construction_echo(params),
        rows=rows,
        summary={key: value for key, value in clean_row(summary).items()},
        metadata=build_metadata(params, family, timer, seed=seed, threads=threads),
    )


def _summarize(rows: List[Dict[str, Any]]) -> Dict[str, Any]:
    if not rows:
        return {}
    r_values = [r["r_n"] for r in rows if r["r_n"]]
    h4_values = [r["h4_norm"] for r in rows if r["h4_norm"]]
    top = max(rows, key=lambda r: r["n"])
    return {
        "r_n_spread": max(r_values) / min(r_values) if r_values else None,
        "h4_spread": (max(h4_values) - min(h4_values)) / max(h4_values) if h4_values else None,
        "lower_bound_ratio_top_n": top["lower_bound_ratio"],
        "diagonal_residual_max": max(r["diagonal_residual"] for r in rows),
        "cross_term_residual_max": max(r["cross_term_residual"] for r in rows),
        "i3_identity_residual_max": max(r["i3_identity_residual"] for r in rows),
    }
