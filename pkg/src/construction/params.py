"""
Parameters of the lacunary initial data.

u0 = sum_{j=0}^{J} f_{kj}, each packet carried at frequency (17/12) 2^{kj}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Any, Dict

from src.foundation.errors import ConfigurationError
from src.spectral.grid import Grid2D

CARRIER_RATIO = 17.0 / 12.0
BUMP_PLATEAU = 1.0 / 16.0
BUMP_RADIUS = 1.0 / 4.0
DEFAULT_DEALIAS = 2.0 / 3.0


def carrier_frequency(m: int) -> float:
    """(17/12) 2^m."""
    return CARRIER_RATIO * (2.0 ** m)


def packet_amplitude(m: int, sigma: float) -> float:
    """2^{-m(sigma+1)}."""
    return 2.0 ** (-m * (sigma + 1.0))


def check_packet_fits(grid: Grid2D, m: int, dealias: float = DEFAULT_DEALIAS) -> None:
    """Raise unless the carrier of packet m lies on the lattice and under the cutoff.

    Raises:
        ConfigurationError: carrier off-lattice, or carrier + bump radius at or
            beyond the dealias cutoff.
    """
    if m < 0:
        raise ConfigurationError(f"packet index must be >= 0 (got {m})", field="m")
    a = carrier_frequency(m)
    if not grid.is_lattice_frequency(a):
        raise ConfigurationError(
            f"carrier (17/12)*2^{m} = {a:.6g} is not a lattice frequency for L={grid.L:.6g}"
            " (use L a multiple of 24*pi)",
            field="domain_L",
            m=m,
        )
    cutoff = grid.dealias_cutoff(dealias)
    if a + BUMP_RADIUS >= cutoff:
        raise ConfigurationError(
            f"carrier (17/12)*2^{m} = {a:.6g} plus bump radius exceeds dealias cutoff "
            f"{cutoff:.6g}; increase grid_N or lower k*J",
            field="grid_N",
            m=m,
        )


@dataclass(frozen=True)
class ConstructionParams:
    """(sigma, p, k, J, grid) defining the truncated initial data."""

    sigma: float
    p: float
    k: int
    J: int
    grid: Grid2D

    def __post_init__(self) -> None:
        if not (self.p >= 1):
            raise ConfigurationError(f"p must be >= 1 (got {self.p})", field="p")
        threshold = 1.0 + (0.0 if math.isinf(self.p) else 2.0 / self.p)
        if not (self.sigma > threshold):
            raise ConfigurationError(
                f"sigma must exceed 1 + 2/p = {threshold:.6g} (got {self.sigma})",
                field="sigma",
            )
        if int(self.k) != self.k or self.k < 1:
            raise ConfigurationError(f"k must be a positive integer (got {self.k})", field="k")
        if int(self.J) != self.J or self.J < 0:
            raise ConfigurationError(f"J must be a non-negative integer (got {self.J})", field="J")
        for j in range(self.J + 1):
            check_packet_fits(self.grid, self.k * j)

    def packet_indices(self) -> list:
        """Block indices k*j carrying a packet."""
        return [self.k * j for j in range(self.J + 1)]

    def with_grid(self, grid: Grid2D) -> "ConstructionParams":
        return replace(self, grid=grid)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "sigma": self.sigma,
            "p": self.p,
            "k": self.k,
            "J": self.J,
            "grid_N": self.grid.N,
            "domain_L": self.grid.L,
        }
