"""
Witness fields h1..h4 and the decomposition of Delta_{kn}(u0 . grad u0).

With a = (17/12) 2^{kn} and every profile centered at the torus center:

    h1 = phi(x1) cos(a x1) phi''(x2)
    h2 = [phi'(x1) cos(a x1) - a phi(x1) sin(a x1)] phi'(x2)
    h3 = [phi''(x1) cos(a x1) - 2a phi'(x1) sin(a x1)] phi(x2)
    h4 = phi(x1)^2 cos((17/12) x1) cos(a x1) phi(x2) phi'(x2)

so that f0 . grad f_{kn} splits as
    first component   I31 = 2^{-kn(sigma+1)} (d2 g0 h2 - d1 g0 h1)
    second component  I32 = 2^{-kn(sigma+1)} (d1 g0 h2 - d2 g0 h3)
                      I33 = (17/12)^2 2^{-kn(sigma-1)} h4
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict

import numpy as np

from src.construction.bump import bump_profile
from src.construction.nonlinear import resolved_advection
from src.construction.packets import carrier_wave, make_g, packet_spectral
from src.construction.params import (
    CARRIER_RATIO,
    ConstructionParams,
    check_packet_fits,
    packet_amplitude,
)
from src.foundation.errors import ConfigurationError
from src.spectral.fields import ScalarField, VectorField2
from src.spectral.grid import Grid2D
from src.spectral.operators import gradient


@dataclass(frozen=True, eq=False)
class WitnessFields:
    h1: ScalarField
    h2: ScalarField
    h3: ScalarField
    h4: ScalarField
    kn: int
    sigma: float

    @property
    def i33_scale(self) -> float:
        """(17/12)^2 2^{-kn(sigma-1)}, the factor in front of h4."""
        return CARRIER_RATIO ** 2 * 2.0 ** (-self.kn * (self.sigma - 1.0))


def make_h(grid: Grid2D, k: int, n: int, sigma: float) -> WitnessFields:
    """Assemble h1..h4 for the block kn from the bump and its derivatives.

    Raises:
        ConfigurationError: carrier (17/12) 2^{kn} off-lattice or above cutoff.
    """
    kn = k * n
    check_packet_fits(grid, kn)
    bump = bump_profile(grid)
    phi, dphi, ddphi = bump.phi, bump.d1, bump.d2
    a = CARRIER_RATIO * 2.0 ** kn
    cos_a = carrier_wave(grid, kn, "cos")
    sin_a = carrier_wave(grid, kn, "sin")
    cos_0 = carrier_wave(grid, 0, "cos")

    h1 = np.outer(phi * cos_a, ddphi)
    h2 = np.outer(dphi * cos_a - a * phi * sin_a, dphi)
    h3 = np.outer(ddphi * cos_a - 2.0 * a * dphi * sin_a, phi)
    h4 = np.outer(phi * phi * cos_0 * cos_a, phi * dphi)
    return WitnessFields(
        h1=ScalarField.physical(grid, h1),
        h2=ScalarField.physical(grid, h2),
        h3=ScalarField.physical(grid, h3),
        h4=ScalarField.physical(grid, h4),
        kn=kn,
        sigma=float(sigma),
    )


def i3_from_witnesses(grid: Grid2D, k: int, n: int, sigma: float) -> Dict[str, VectorField2]:
    """I31, I32, I33 assembled from h1..h4 and grad g0 (no advection involved)."""
    w = make_h(grid, k, n, sigma)
    dg = gradient(make_g(grid, 0).to_spectral()).to_physical()
    d1g0, d2g0 = dg.u1.data, dg.u2.data
    scale = packet_amplitude(w.kn, sigma)
    zero = np.zeros((grid.N, grid.N))
    i31 = scale * (d2g0 * w.h2.data - d1g0 * w.h1.data)
    i32 = scale * (d1g0 * w.h2.data - d2g0 * w.h3.data)
    i33 = w.i33_scale * w.h4.data
    return {
        "I31": VectorField2.from_arrays(grid, i31, zero),
        "I32": VectorField2.from_arrays(grid, zero, i32),
        "I33": VectorField2.from_arrays(grid, zero, i33),
    }


@dataclass(frozen=True, eq=False)
class LemmaTerms:
    """I1 = sum_{i<n} f_kn . grad f_ki, I2 = sum_{0<i<n} f_ki . grad f_kn, I3 = f0 . grad f_kn."""

    I1: VectorField2
    I2: VectorField2
    I3: VectorField2

    @property
    def total(self) -> VectorField2:
        return self.I1 + self.I2 + self.I3


def lemma_terms(params: ConstructionParams, n: int) -> LemmaTerms:
    """Cross terms between the block-kn packet and the lower packets, alias-free.

    Raises:
        ConfigurationError: n outside 1..J.
    """
    if n < 1 or n > params.J:
        raise ConfigurationError(f"n must lie in 1..J={params.J} (got {n})", field="n")
    grid, k, sigma = params.grid, params.k, params.sigma
    top = packet_spectral(grid, k * n, sigma)
    lower = [packet_spectral(grid, k * i, sigma) for i in range(n)]
    zero = VectorField2.zeros(grid).to_spectral()

    i1 = zero
    for f_i in lower:
        i1 = i1 + resolved_advection(top, f_i)
    i2 = zero
    for f_i in lower[1:]:
        i2 = i2 + resolved_advection(f_i, top)
    i3 = resolved_advection(lower[0], top)
    return LemmaTerms(I1=i1.to_physical(), I2=i2.to_physical(), I3=i3.to_physical())
