"""
Doubly periodic computational grid.

The torus [0, L)^2 with N points per axis stands in for R^2. Frequencies on
the lattice are xi_k = 2*pi*k/L for integer k in [-N/2, N/2), stored in FFT
order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from src.foundation.errors import ConfigurationError


def _is_power_of_two(n: int) -> bool:
    return n > 0 and (n & (n - 1)) == 0


@dataclass(frozen=True)
class Grid2D:
    """Resolution, period and frequency lattice of the torus."""

    N: int
    L: float

    @property
    def dx(self) -> float:
        return self.L / self.N

    @property
    def center(self) -> float:
        return self.L / 2.0

    @property
    def nyquist(self) -> float:
        """Largest resolved frequency pi*N/L."""
        return math.pi * self.N / self.L

    @property
    def spacing(self) -> float:
        """Smallest positive lattice frequency 2*pi/L."""
        return 2.0 * math.pi / self.L

    @cached_property
    def frequency_indices(self) -> np.ndarray:
        """Integer lattice indices per axis in FFT order, covering [-N/2, N/2)."""
        return np.rint(np.fft.fftfreq(self.N) * self.N).astype(np.int64)

    @cached_property
    def wavenumbers(self) -> np.ndarray:
        """One-dimensional frequencies xi_k = 2*pi*k/L in FFT order."""
        return self.spacing * self.frequency_indices.astype(float)

    @cached_property
    def coordinates(self) -> np.ndarray:
        """One-dimensional sample positions j*dx."""
        return np.arange(self.N) * self.dx

    @cached_property
    def xi1(self) -> np.ndarray:
        return np.broadcast_to(self.wavenumbers[:, None], (self.N, self.N))

    @cached_property
    def xi2(self) -> np.ndarray:
        return np.broadcast_to(self.wavenumbers[None, :], (self.N, self.N))

    @cached_property
    def xi_squared(self) -> np.ndarray:
        return self.xi1 ** 2 + self.xi2 ** 2

    @cached_property
    def xi_abs(self) -> np.ndarray:
        return np.sqrt(self.xi_squared)

    @property
    def max_lattice_radius(self) -> float:
        """|xi| at the lattice corner (-N/2, -N/2)."""
        return math.sqrt(2.0) * self.spacing * (self.N // 2)

    def dealias_cutoff(self, fraction: float = 2.0 / 3.0) -> float:
        return fraction * self.nyquist

    def dealias_mask(self, fraction: float = 2.0 / 3.0) -> np.ndarray:
        """Boolean mask of modes kept by the truncation rule (square, per axis)."""
        cutoff = self.dealias_cutoff(fraction)
        keep_1d = np.abs(self.wavenumbers) <= cutoff
        return keep_1d[:, None] & keep_1d[None, :]

    def is_lattice_frequency(self, xi: float, tol: float = 1e-9) -> bool:
        index = xi / self.spacing
        return abs(index - round(index)) <= tol * max(1.0, abs(index))

    def to_dict(self) -> dict:
        return {"N": self.N, "L": self.L, "dx": self.dx, "nyquist": self.nyquist}


def make_grid(N: int, L: float) -> Grid2D:
    """Validate and build a grid.

    Raises:
        ConfigurationError: N not a power of two, N < 8, or L <= 0.
    """
    if not isinstance(N, (int, np.integer)) or not _is_power_of_two(int(N)):
        raise ConfigurationError(f"N must be a power of two (got {N})", field="N")
    if N < 8:
        raise ConfigurationError(f"N must be at least 8 (got {N})", field="N")
    if not (L > 0 and math.isfinite(L)):
        raise ConfigurationError(f"L must be positive (got {L})", field="L")
    return Grid2D(N=int(N), L=float(L))
