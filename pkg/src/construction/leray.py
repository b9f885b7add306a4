"""
Leray projectors P = I - xi xi^T / |xi|^2 and Q = I - P, applied per mode.

The mean mode passes through P and is removed by Q.
"""

from __future__ import annotations

from typing import Tuple

import numpy as np

from src.spectral.fields import ScalarField, VectorField2


def _gradient_part(v: VectorField2) -> Tuple[np.ndarray, np.ndarray]:
    grid = v.grid
    v1 = v.u1.as_spectral().data
    v2 = v.u2.as_spectral().data
    xi1, xi2, xi_sq = grid.xi1, grid.xi2, grid.xi_squared
    inv = np.zeros_like(xi_sq)
    np.divide(1.0, xi_sq, out=inv, where=xi_sq > 0)
    dot = (xi1 * v1 + xi2 * v2) * inv
    return xi1 * dot, xi2 * dot


def _wrap(v: VectorField2, c1: np.ndarray, c2: np.ndarray) -> VectorField2:
    out = VectorField2(ScalarField.spectral(v.grid, c1), ScalarField.spectral(v.grid, c2))
    return out if v.is_spectral else out.to_physical()


def leray_Q(v: VectorField2) -> VectorField2:
    """Gradient part xi (xi . v_hat) / |xi|^2."""
    q1, q2 = _gradient_part(v)
    return _wrap(v, q1, q2)


def leray_P(v: VectorField2) -> VectorField2:
    """Divergence-free part v - Q v."""
    q1, q2 = _gradient_part(v)
    return _wrap(v, v.u1.as_spectral().data - q1, v.u2.as_spectral().data - q2)


def leray_split(v: VectorField2) -> Tuple[VectorField2, VectorField2]:
    """(P v, Q v) sharing one pass over the spectrum."""
    q1, q2 = _gradient_part(v)
    p = _wrap(v, v.u1.as_spectral().data - q1, v.u2.as_spectral().data - q2)
    return p, _wrap(v, q1, q2)
