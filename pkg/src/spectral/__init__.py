"""Spectral core: grids, dual-representation fields and Fourier operators."""

from src.spectral.grid import Grid2D, make_grid
from src.spectral.fields import (
    Representation,
    ScalarField,
    VectorField2,
    to_spectral,
    to_physical,
)
from src.spectral.operators import (
    apply_multiplier,
    gradient,
    perp_gradient,
    divergence,
    curl,
    laplacian,
    dealias,
    lp_norm,
    spectral_l2_norm,
)

__all__ = [
    'Grid2D',
    'make_grid',
    'Representation',
    'ScalarField',
    'VectorField2',
    'to_spectral',
    'to_physical',
    'apply_multiplier',
    'gradient',
    'perp_gradient',
    'divergence',
    'curl',
    'laplacian',
    'dealias',
    'lp_norm',
    'spectral_l2_norm'
]
