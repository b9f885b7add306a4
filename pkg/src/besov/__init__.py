"""Littlewood-Paley blocks and Besov norms."""

from src.besov.littlewood_paley import (
    LPFamily,
    smooth_step,
    chi_profile,
    phi_profile,
    build_lp_family,
    dyadic_block,
    homogeneous_block,
    low_frequency_residue,
)
from src.besov.norms import (
    BesovParams,
    block_norms,
    besov_norm,
    dominant_block,
)

__all__ = [
    'LPFamily',
    'smooth_step',
    'chi_profile',
    'phi_profile',
    'build_lp_family',
    'dyadic_block',
    'homogeneous_block',
    'low_frequency_residue',
    'BesovParams',
    'block_norms',
    'besov_norm',
    'dominant_block'
]
