"""
Resolution and domain sensitivity: re-run an experiment at N/2 (same L) and
at (2N, 2L) (same dx) and record the relative change of its headline column.
"""

from __future__ import annotations

import logging
from typing import Any, Callable, Dict, Optional

from src.construction.params import ConstructionParams
from src.contracts.schemas import ExperimentReport
from src.foundation.errors import ConfigurationError
from src.spectral.grid import make_grid
from src.validation.common import relative_change

logger = logging.getLogger(__name__)

HEADLINE_COLUMNS: Dict[str, str] = {
    "verify-lemma": "r_n",
    "remainder-scaling": "remainder_norm",
    "inflation": "block_bound",
}


def _variant_grids(params: ConstructionParams) -> Dict[str, tuple]:
    grid = params.grid
    return {
        "half_N": (grid.N // 2, grid.L),
        "double_L": (grid.N * 2, grid.L * 2.0),
    }


def compare_reports(base: ExperimentReport, other: ExperimentReport, column: str) -> Dict[str, Any]:
    """Relative change of ``column`` per shared index value."""
    index = base.index_column
    other_rows = {row[index]: row for row in other.rows}
    changes: Dict[str, Optional[float]] = {}
    for row in base.rows:
        match = other_rows.get(row[index])
        changes[str(row[index])] = (
            relative_change(match.get(column), row.get(column)) if match else None
        )
    measured = [v for v in changes.values() if v is not None]
    return {
        "relative_change": changes,
        "max_relative_change": max(measured) if measured else None,
    }


def sensitivity_sweep(
    run: Callable[[ConstructionParams], ExperimentReport],
    params: ConstructionParams,
    base: ExperimentReport,
) -> Dict[str, Any]:
    """Re-run ``run`` on the coarse and the enlarged grid.

    Variants the construction cannot fit (off-lattice carriers, no dealias
    headroom) are recorded as None.
    """
    column = HEADLINE_COLUMNS.get(base.experiment, "")
    out: Dict[str, Any] = {"headline": column}
    for name, (N, L) in _variant_grids(params).items():
        try:
            variant = params.with_grid(make_grid(N, L))
        except ConfigurationError as exc:
            logger.warning(f"Sensitivity variant {name} skipped: {exc.message}")
            out[name] = None
            continue
        logger.info(f"Sensitivity variant {name}: N={N} L={L:.6g}")
        other = run(variant)
        out[name] = {"grid_N": N, "domain_L": L, **compare_reports(base, other, column)}
    return out
