"""
Vorticity-streamfunction form of 2D Euler, kept as a cross-check oracle.

With u = (-d2 psi, d1 psi) and omega = curl u = Laplacian psi,
    d omega / dt = -J(psi, omega),   J(a, b) = d1 a d2 b - d2 a d1 b.
"""

from __future__ import annotations

from typing import Optional

import numpy as np

from src.construction.params import DEFAULT_DEALIAS
from src.spectral.fields import ScalarField, VectorField2, forward_transform, inverse_transform
from src.spectral.operators import curl


def streamfunction(u: VectorField2) -> ScalarField:
    """psi with Laplacian psi = curl u and zero mean."""
    grid = u.grid
    omega_hat = curl(u.as_spectral()).data
    inv = np.zeros_like(grid.xi_squared)
    np.divide(1.0, grid.xi_squared, out=inv, where=grid.xi_squared > 0)
    return ScalarField.spectral(grid, -omega_hat * inv)


def jacobian(a: ScalarField, b: ScalarField, dealias: Optional[float] = DEFAULT_DEALIAS) -> ScalarField:
    """Dealiased Poisson bracket J(a, b), spectral."""
    grid = a.grid
    mask = grid.dealias_mask(dealias) if dealias is not None else 1.0
    a_hat = a.as_spectral().data * mask
    b_hat = b.as_spectral().data * mask
    a1 = inverse_transform(1j * grid.xi1 * a_hat)
    a2 = inverse_transform(1j * grid.xi2 * a_hat)
    b1 = inverse_transform(1j * grid.xi1 * b_hat)
    b2 = inverse_transform(1j * grid.xi2 * b_hat)
    return ScalarField.spectral(grid, forward_transform(a1 * b2 - a2 * b1) * mask)


def vorticity_rhs(u: VectorField2, dealias: Optional[float] = DEFAULT_DEALIAS) -> ScalarField:
    """-J(psi, omega) = -(u . grad) omega, spectral."""
    psi = streamfunction(u)
    omega = curl(u.as_spectral())
    return -jacobian(psi, omega, dealias)
