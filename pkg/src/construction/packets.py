"""
Oscillating profiles g_m, divergence-free packets f_m and the initial data u0.

    g_m(x) = phi(x1) cos((17/12) 2^m x1) phi(x2)
    f_m    = 2^{-m(sigma+1)} (-d2, d1) g_m
    u0     = sum_{j=0}^{J} f_{kj}

Coordinates are measured from the torus center.
"""

from __future__ import annotations

import logging

import numpy as np

from src.construction.bump import bump_profile
from src.construction.params import (
    DEFAULT_DEALIAS,
    ConstructionParams,
    carrier_frequency,
    check_packet_fits,
    packet_amplitude,
)
from src.spectral.fields import ScalarField, VectorField2
from src.spectral.grid import Grid2D
from src.spectral.operators import perp_gradient

logger = logging.getLogger(__name__)


def carrier_wave(grid: Grid2D, m: int, kind: str = "cos") -> np.ndarray:
    """cos or sin of (17/12) 2^m (x1 - center), sampled along x1."""
    phase = carrier_frequency(m) * (grid.coordinates - grid.center)
    return np.cos(phase) if kind == "cos" else np.sin(phase)


def make_g(grid: Grid2D, m: int, dealias: float = DEFAULT_DEALIAS) -> ScalarField:
    """Oscillating profile g_m, physical.

    Raises:
        ConfigurationError: carrier off-lattice or above the dealias cutoff.
    """
    check_packet_fits(grid, m, dealias)
    bump = bump_profile(grid)
    return ScalarField.physical(grid, np.outer(bump.phi * carrier_wave(grid, m), bump.phi))


def packet_spectral(grid: Grid2D, m: int, sigma: float, dealias: float = DEFAULT_DEALIAS) -> VectorField2:
    """f_m in spectral representation."""
    g = make_g(grid, m, dealias).to_spectral()
    return perp_gradient(g) * packet_amplitude(m, sigma)


def make_f(grid: Grid2D, m: int, sigma: float, dealias: float = DEFAULT_DEALIAS) -> VectorField2:
    """Divergence-free packet f_m, physical."""
    return packet_spectral(grid, m, sigma, dealias).to_physical()


def make_u0(params: ConstructionParams) -> VectorField2:
    """Truncated lacunary sum of packets, physical."""
    grid = params.grid
    total_1 = np.zeros((grid.N, grid.N), dtype=complex)
    total_2 = np.zeros((grid.N, grid.N), dtype=complex)
    for m in params.packet_indices():
        packet = packet_spectral(grid, m, params.sigma)
        total_1 += packet.u1.data
        total_2 += packet.u2.data
    logger.debug(
        "Built u0: sigma=%.3g k=%d J=%d N=%d", params.sigma, params.k, params.J, grid.N
    )
    return VectorField2(
        ScalarField.spectral(grid, total_1), ScalarField.spectral(grid, total_2)
    ).to_physical()
