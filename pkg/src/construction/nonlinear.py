"""
Pseudo-spectral advection (a . grad) b.

Derivatives are spectral, products are formed in physical space and the
result is truncated by the 2/3 rule. Passing dealias=None skips truncation
and gives the exact pointwise product of band-limited inputs.
"""

from __future__ import annotations

from typing import Optional

import numpy as np

from src.construction.params import DEFAULT_DEALIAS
from src.foundation.errors import RepresentationError
from src.spectral.fields import (
    ScalarField,
    VectorField2,
    forward_transform,
    inverse_transform,
)


def advection(
    a: VectorField2, b: VectorField2, dealias: Optional[float] = DEFAULT_DEALIAS
) -> VectorField2:
    """(a . grad) b, returned in the representation of ``a``."""
    if a.grid != b.grid:
        raise RepresentationError("advection operands live on different grids")
    grid = a.grid
    mask = grid.dealias_mask(dealias) if dealias is not None else None

    def _spectrum(c: ScalarField) -> np.ndarray:
        coeffs = c.as_spectral().data
        return coeffs * mask if mask is not None else coeffs

    a_phys = [inverse_transform(_spectrum(c)) for c in a]
    out = []
    for comp in b:
        coeffs = _spectrum(comp)
        d1 = inverse_transform(1j * grid.xi1 * coeffs)
        d2 = inverse_transform(1j * grid.xi2 * coeffs)
        product = forward_transform(a_phys[0] * d1 + a_phys[1] * d2)
        if mask is not None:
            product = product * mask
        out.append(ScalarField.spectral(grid, product))
    result = VectorField2(*out)
    return result if a.is_spectral else result.to_physical()


def nonlinear_term(u: VectorField2, dealias: Optional[float] = DEFAULT_DEALIAS) -> VectorField2:
    """(u . grad) u with the 2/3-rule truncation."""
    return advection(u, u, dealias)


def _pad_spectrum(coeffs: np.ndarray, size: int) -> np.ndarray:
    n = coeffs.shape[0]
    lo = size // 2 - n // 2
    out = np.zeros((size, size), dtype=complex)
    out[lo:lo + n, lo:lo + n] = np.fft.fftshift(coeffs)
    return np.fft.ifftshift(out)


def _crop_spectrum(coeffs: np.ndarray, n: int) -> np.ndarray:
    size = coeffs.shape[0]
    lo = size // 2 - n // 2
    return np.fft.ifftshift(np.fft.fftshift(coeffs)[lo:lo + n, lo:lo + n])


def resolved_advection(a: VectorField2, b: VectorField2) -> VectorField2:
    """(a . grad) b without aliasing, restricted to the lattice window.

    Products are formed on a 3/2 zero-padded grid, so every lattice mode of
    the result equals the corresponding Fourier coefficient of the exact
    product. Returned in the representation of ``a``.
    """
    if a.grid != b.grid:
        raise RepresentationError("advection operands live on different grids")
    grid = a.grid
    size = 3 * grid.N // 2
    xi = grid.spacing * np.fft.fftfreq(size, d=1.0 / size)
    xi1, xi2 = xi[:, None], xi[None, :]

    a_phys = [inverse_transform(_pad_spectrum(c.as_spectral().data, size)) for c in a]
    out = []
    for comp in b:
        coeffs = _pad_spectrum(comp.as_spectral().data, size)
        d1 = inverse_transform(1j * xi1 * coeffs)
        d2 = inverse_transform(1j * xi2 * coeffs)
        product = forward_transform(a_phys[0] * d1 + a_phys[1] * d2)
        out.append(ScalarField.spectral(grid, _crop_spectrum(product, grid.N)))
    result = VectorField2(*out)
    return result if a.is_spectral else result.to_physical()
