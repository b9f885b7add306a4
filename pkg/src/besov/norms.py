"""
Besov norms over the dyadic blocks of an LPFamily.

For p = 2 block norms are computed from spectral coefficients by Parseval;
other exponents go through the physical representation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, Optional, Tuple

import numpy as np

from src.besov.littlewood_paley import LPFamily
from src.foundation.errors import ConfigurationError
from src.spectral.fields import Field, field_components
from src.spectral.operators import apply_multiplier, lp_norm


@dataclass(frozen=True)
class BesovParams:
    """Exponents (s, p, r) and the homogeneous switch."""

    s: float
    p: float = 2.0
    r: float = math.inf
    homogeneous: bool = False
    j_min: Optional[int] = None

    def __post_init__(self) -> None:
        if not (self.p >= 1):
            raise ConfigurationError(f"p must be >= 1 (got {self.p})", field="p")
        if not (self.r >= 1):
            raise ConfigurationError(f"r must be >= 1 (got {self.r})", field="r")

    def to_dict(self) -> dict:
        return {
            "s": self.s,
            "p": self.p,
            "r": self.r,
            "homogeneous": self.homogeneous,
            "j_min": self.j_min,
        }


def _block_l2_from_spectrum(f: Field, symbol: np.ndarray) -> float:
    total = 0.0
    for c in field_components(f):
        coeffs = c.as_spectral().data
        total += float(np.sum(np.abs(coeffs * symbol) ** 2))
    return f.grid.L * math.sqrt(total)


def block_lp_norm(f: Field, symbol: np.ndarray, p: float) -> float:
    """||symbol(D) f||_{L^p}."""
    if p == 2:
        return _block_l2_from_spectrum(f, symbol)
    return lp_norm(apply_multiplier(f, symbol), p)


def _block_range(params: BesovParams, fam: LPFamily) -> range:
    if not params.homogeneous:
        return fam.block_indices()
    j_min = fam.j_min_homog if params.j_min is None else params.j_min
    if j_min < fam.j_min_homog:
        raise ConfigurationError(
            f"j_min={j_min} below the family's j_min_homog={fam.j_min_homog}",
            field="j_min",
        )
    return fam.homogeneous_indices(j_min)


def block_norms(f: Field, params: BesovParams, fam: LPFamily) -> Dict[int, float]:
    """Unweighted block norms ||Delta_j f||_{L^p} over the params' block range."""
    out: Dict[int, float] = {}
    for j in _block_range(params, fam):
        symbol = fam.homogeneous_multiplier(j) if params.homogeneous else fam.multiplier(j)
        out[j] = block_lp_norm(f, symbol, params.p)
    return out


def weighted_block_norms(f: Field, params: BesovParams, fam: LPFamily) -> Dict[int, float]:
    """2^{sj} ||Delta_j f||_{L^p} per block."""
    return {j: (2.0 ** (params.s * j)) * v for j, v in block_norms(f, params, fam).items()}


def besov_norm(f: Field, params: BesovParams, fam: LPFamily) -> float:
    """sup (r = inf) or l^r sum of the weighted block norms."""
    weighted = np.array(list(weighted_block_norms(f, params, fam).values()), dtype=float)
    if weighted.size == 0:
        return 0.0
    if math.isinf(params.r):
        return float(weighted.max())
    return float(np.sum(weighted ** params.r) ** (1.0 / params.r))


def dominant_block(f: Field, params: BesovParams, fam: LPFamily) -> Tuple[int, float]:
    """(j, 2^{sj}||Delta_j f||) of the block achieving the sup; ties go to the lowest j."""
    weighted = weighted_block_norms(f, params, fam)
    best_j = max(weighted, key=lambda j: (weighted[j], -j))
    return best_j, weighted[best_j]
