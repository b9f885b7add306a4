"""
The bump phi and its derivatives on the torus.

phi_hat is 1 on |xi| <= 1/16 and 0 on |xi| >= 1/4, built from the same smooth
step as the Littlewood-Paley cutoffs. The periodized, centered profile has
one-dimensional Fourier coefficients phi_hat(xi_k) (-1)^k / L.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np
import scipy.fft as sfft

from src.besov.littlewood_paley import smooth_step
from src.construction.params import BUMP_PLATEAU, BUMP_RADIUS
from src.spectral.fields import ScalarField
from src.spectral.grid import Grid2D


def bump_hat(xi) -> np.ndarray:
    xi = np.abs(np.asarray(xi, dtype=float))
    return 1.0 - smooth_step((xi - BUMP_PLATEAU) / (BUMP_RADIUS - BUMP_PLATEAU))


@dataclass(frozen=True, eq=False)
class BumpProfile:
    """1D samples of phi, phi', phi'' and the sampled phi_hat."""

    grid: Grid2D
    hat: np.ndarray
    phi: np.ndarray
    d1: np.ndarray
    d2: np.ndarray


def _from_coeffs(coeffs: np.ndarray) -> np.ndarray:
    values = sfft.ifft(coeffs, norm="forward").real
    values.flags.writeable = False
    return values


@lru_cache(maxsize=8)
def bump_profile(grid: Grid2D) -> BumpProfile:
    xi = grid.wavenumbers
    hat = bump_hat(xi)
    signs = np.where(grid.frequency_indices % 2 == 0, 1.0, -1.0)
    coeffs = hat * signs / grid.L
    hat.flags.writeable = False
    return BumpProfile(
        grid=grid,
        hat=hat,
        phi=_from_coeffs(coeffs),
        d1=_from_coeffs(1j * xi * coeffs),
        d2=_from_coeffs(-(xi ** 2) * coeffs),
    )


def build_bump(grid: Grid2D) -> ScalarField:
    """phi(x1) phi(x2) centered at (L/2, L/2), physical."""
    phi = bump_profile(grid).phi
    return ScalarField.physical(grid, np.outer(phi, phi))
