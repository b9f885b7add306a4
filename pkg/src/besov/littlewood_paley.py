"""
Littlewood-Paley dyadic partition on a grid's frequency lattice.

chi is a smooth radial ball cutoff (1 on r <= 3/4, 0 on r >= 4/3) and
phi(r) = chi(r/2) - chi(r) is the annulus profile, so
chi(r) + sum_{j>=0} phi(2^-j r) telescopes to 1.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Dict, Optional, Tuple

import numpy as np

from src.foundation.errors import BlockRangeError, ConfigurationError
from src.spectral.fields import Field
from src.spectral.grid import Grid2D
from src.spectral.operators import apply_multiplier

logger = logging.getLogger(__name__)

CHI_INNER = 3.0 / 4.0
CHI_OUTER = 4.0 / 3.0


def _psi(t: np.ndarray) -> np.ndarray:
    out = np.zeros_like(t, dtype=float)
    pos = t > 0
    out[pos] = np.exp(-1.0 / t[pos])
    return out


def smooth_step(t) -> np.ndarray:
    """C-infinity step: 0 for t <= 0, 1 for t >= 1."""
    t = np.asarray(t, dtype=float)
    a = _psi(t)
    b = _psi(1.0 - t)
    return a / (a + b)


def chi_profile(r) -> np.ndarray:
    r = np.asarray(r, dtype=float)
    return 1.0 - smooth_step((r - CHI_INNER) / (CHI_OUTER - CHI_INNER))


def phi_profile(r) -> np.ndarray:
    r = np.asarray(r, dtype=float)
    return chi_profile(r / 2.0) - chi_profile(r)


def block_upper_index(grid: Grid2D) -> int:
    """Largest j whose annulus starts inside the lattice: (3/4) 2^j < max |xi|."""
    r_max = grid.max_lattice_radius
    return int(math.ceil(math.log2(r_max / CHI_INNER))) - 1


@dataclass(frozen=True, eq=False)
class LPFamily:
    """Radial cutoffs realized on one grid; multipliers are cached per block."""

    grid: Grid2D
    j_max: int
    j_min_homog: int
    chi: Callable = field(default=chi_profile, repr=False)
    phi: Callable = field(default=phi_profile, repr=False)
    cache_size: int = 12

    def __post_init__(self) -> None:
        object.__setattr__(self, "_sampled", lru_cache(maxsize=self.cache_size)(self._sample))

    def _sample(self, kind: str, j: int) -> np.ndarray:
        r = self.grid.xi_abs * (2.0 ** (-j))
        values = self.chi(r) if kind == "chi" else self.phi(r)
        values = np.asarray(values, dtype=float)
        values.flags.writeable = False
        return values

    def multiplier(self, j: int) -> np.ndarray:
        """Symbol of the inhomogeneous block Delta_j sampled at lattice |xi|."""
        self.check_block(j)
        if j == -1:
            return self._sampled("chi", 0)
        return self._sampled("phi", j)

    def homogeneous_multiplier(self, j: int) -> np.ndarray:
        self.check_homogeneous_block(j)
        return self._sampled("phi", j)

    def ball_multiplier(self, j: int) -> np.ndarray:
        """chi(2^-j |xi|), the low-pass below homogeneous block j."""
        return self._sampled("chi", j)

    def check_block(self, j: int) -> None:
        if j < -1 or j > self.j_max:
            raise BlockRangeError(j, -1, self.j_max)

    def check_homogeneous_block(self, j: int) -> None:
        if j < self.j_min_homog or j > self.j_max:
            raise BlockRangeError(j, self.j_min_homog, self.j_max)

    def block_indices(self) -> range:
        return range(-1, self.j_max + 1)

    def homogeneous_indices(self, j_min: Optional[int] = None) -> range:
        lo = self.j_min_homog if j_min is None else j_min
        return range(lo, self.j_max + 1)

    def partition_residual(self) -> float:
        """max over the lattice of |chi + sum_j phi_j - 1|."""
        total = np.array(self.multiplier(-1), copy=True)
        for j in range(0, self.j_max + 1):
            total += self.multiplier(j)
        return float(np.max(np.abs(total - 1.0)))

    def square_sum_range(self) -> Tuple[float, float]:
        """(min, max) of chi^2 + sum_j phi_j^2 over the lattice; lies in [1/2, 1]."""
        total = np.array(self.multiplier(-1), copy=True) ** 2
        for j in range(0, self.j_max + 1):
            total += self.multiplier(j) ** 2
        return float(total.min()), float(total.max())

    def to_dict(self) -> Dict[str, int]:
        return {"j_max": self.j_max, "j_min_homog": self.j_min_homog}


def build_lp_family(grid: Grid2D, j_min_homog: int = -8) -> LPFamily:
    """Build the dyadic family for a grid.

    Raises:
        ConfigurationError: j_min_homog > -1.
    """
    if j_min_homog > -1:
        raise ConfigurationError(
            f"j_min_homog must be <= -1 (got {j_min_homog})", field="j_min_homog"
        )
    j_max = block_upper_index(grid)
    logger.debug("LP family on N=%d L=%.6g: j_max=%d", grid.N, grid.L, j_max)
    return LPFamily(grid=grid, j_max=j_max, j_min_homog=int(j_min_homog))


def dyadic_block(f: Field, j: int, fam: LPFamily) -> Field:
    """Delta_j f; j = -1 is the low-frequency ball."""
    return apply_multiplier(f, fam.multiplier(j))


def homogeneous_block(f: Field, j: int, fam: LPFamily) -> Field:
    """Homogeneous block phi(2^-j |D|) f for j_min_homog <= j <= j_max."""
    return apply_multiplier(f, fam.homogeneous_multiplier(j))


def low_frequency_residue(f: Field, j_min: int, fam: LPFamily) -> Field:
    """chi(2^-j_min |D|) f, the part the truncated homogeneous sum misses."""
    return apply_multiplier(f, fam.ball_multiplier(j_min))
