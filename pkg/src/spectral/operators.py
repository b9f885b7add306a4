"""
Fourier multipliers, spectral derivatives and L^p quadrature.

Every operator returns a new field in the representation of its input.
"""

from __future__ import annotations

import math
from typing import Callable, Optional, Union

import numpy as np

from src.foundation.errors import ConfigurationError
from src.spectral.fields import (
    Field,
    ScalarField,
    VectorField2,
    field_components,
    map_field,
)
from src.spectral.grid import Grid2D

Multiplier = Union[np.ndarray, Callable[[np.ndarray, np.ndarray], np.ndarray]]


def evaluate_multiplier(grid: Grid2D, m: Multiplier) -> np.ndarray:
    """Sample a multiplier on the lattice (callables receive xi1, xi2)."""
    if callable(m):
        values = m(grid.xi1, grid.xi2)
    else:
        values = m
    values = np.asarray(values)
    if values.ndim == 0:
        values = np.full((grid.N, grid.N), values.item())
    if values.shape != (grid.N, grid.N):
        raise ConfigurationError(
            f"multiplier has shape {values.shape}, lattice is {(grid.N, grid.N)}",
            field="multiplier",
        )
    return values


def _apply_scalar(f: ScalarField, values: np.ndarray) -> ScalarField:
    coeffs = f.as_spectral().data * values
    out = ScalarField.spectral(f.grid, coeffs)
    return out if f.is_spectral else out.to_physical()


def apply_multiplier(f: Field, m: Multiplier) -> Field:
    """Multiply spectral coefficients by m(xi); vector fields componentwise."""
    values = evaluate_multiplier(f.grid, m)
    return map_field(f, lambda c: _apply_scalar(c, values))


def partial(f: ScalarField, axis: int) -> ScalarField:
    if axis == 0:
        return apply_multiplier(f, 1j * f.grid.xi1)
    if axis == 1:
        return apply_multiplier(f, 1j * f.grid.xi2)
    raise ConfigurationError(f"axis must be 0 or 1 (got {axis})", field="axis")


def gradient(f: ScalarField) -> VectorField2:
    return VectorField2(partial(f, 0), partial(f, 1))


def perp_gradient(f: ScalarField) -> VectorField2:
    """(-d2 f, d1 f)."""
    return VectorField2(-partial(f, 1), partial(f, 0))


def divergence(v: VectorField2) -> ScalarField:
    return partial(v.u1, 0) + partial(v.u2, 1)


def curl(v: VectorField2) -> ScalarField:
    """Scalar vorticity d1 u2 - d2 u1."""
    return partial(v.u2, 0) - partial(v.u1, 1)


def laplacian(f: Field) -> Field:
    return apply_multiplier(f, -f.grid.xi_squared)


def inverse_laplacian(f: ScalarField) -> ScalarField:
    """(-Delta)^{-1} with the mean mode set to zero."""
    xi2 = f.grid.xi_squared
    inv = np.zeros_like(xi2)
    np.divide(1.0, xi2, out=inv, where=xi2 > 0)
    return apply_multiplier(f, inv)


def dealias(f: Field, fraction: Optional[float] = 2.0 / 3.0) -> Field:
    """Truncate modes beyond fraction*Nyquist on either axis; None is a no-op."""
    if fraction is None:
        return f
    return apply_multiplier(f, f.grid.dealias_mask(fraction).astype(float))


def magnitude(f: Field) -> np.ndarray:
    """Pointwise |f| (Euclidean for vectors) as a physical array."""
    comps = [c.as_physical().data for c in field_components(f)]
    if len(comps) == 1:
        return np.abs(comps[0])
    return np.sqrt(sum(c * c for c in comps))


def lp_norm(f: Field, p: float) -> float:
    """Rectangle-rule L^p norm over one period; p = inf is the grid max.

    Raises:
        ConfigurationError: p < 1.
    """
    if not (p >= 1):
        raise ConfigurationError(f"p must be >= 1 (got {p})", field="p")
    mag = magnitude(f)
    if math.isinf(p):
        return float(mag.max()) if mag.size else 0.0
    cell = f.grid.dx ** 2
    if p == 2:
        return float(math.sqrt(cell * np.sum(mag * mag)))
    scale = float(mag.max())
    if scale == 0.0:
        return 0.0
    # rescale before powering to avoid underflow on tiny packets
    return float(scale * (cell * np.sum((mag / scale) ** p)) ** (1.0 / p))


def spectral_l2_norm(f: Field) -> float:
    """L^2 norm via Parseval: ||f||^2 = L^2 * sum |f_hat|^2."""
    total = 0.0
    for c in field_components(f):
        coeffs = c.as_spectral().data
        total += float(np.sum(np.abs(coeffs) ** 2))
    return f.grid.L * math.sqrt(total)


def mean_value(f: ScalarField) -> float:
    return float(f.as_spectral().data[0, 0].real)
