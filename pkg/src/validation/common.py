"""
Shared plumbing for the experiment drivers: row execution, slope fits and
report metadata.
"""

from __future__ import annotations

import logging
import math
import time
from concurrent.futures import ThreadPoolExecutor
from datetime import datetime, timezone
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, TypeVar

import numpy as np
import scipy.fft as sfft

from src.besov.littlewood_paley import LPFamily
from src.construction.params import ConstructionParams
from src.contracts.schemas import ConstructionEcho, ReportMetadata, SolverEcho
from src.foundation.model_config import get_thread_count
from src.simulation.euler_solver import SolverConfig

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def run_rows(fn: Callable[[T], R], items: Sequence[T], threads: Optional[int] = None) -> List[R]:
    """Apply fn to every item, in order.

    With more than one thread the rows run on a thread pool and every FFT
    inside a row uses one worker; otherwise rows run sequentially and the
    FFTs get all the threads.
    """
    threads = get_thread_count() if threads is None else max(1, int(threads))
    items = list(items)
    if threads == 1 or len(items) <= 1:
        with sfft.set_workers(threads):
            return [fn(item) for item in items]

    def _single_worker(item: T) -> R:
        with sfft.set_workers(1):
            return fn(item)

    with ThreadPoolExecutor(max_workers=min(threads, len(items))) as pool:
        return list(pool.map(_single_worker, items))


def finite_or_none(value: Any) -> Optional[float]:
    """JSON-safe float: NaN and inf become None."""
    if value is None:
        return None
    value = float(value)
    return value if math.isfinite(value) else None


def clean_row(row: Dict[str, Any]) -> Dict[str, Any]:
    out: Dict[str, Any] = {}
    for key, value in row.items():
        if isinstance(value, bool):
            out[key] = value
        elif isinstance(value, (int, np.integer)):
            out[key] = int(value)
        elif isinstance(value, (float, np.floating)):
            out[key] = finite_or_none(value)
        else:
            out[key] = value
    return out


def fit_loglog_slope(x: Iterable[float], y: Iterable[float]) -> Optional[float]:
    """Least-squares slope of log y against log x over strictly positive pairs."""
    pairs = [(a, b) for a, b in zip(x, y) if a is not None and b is not None and a > 0 and b > 0]
    if len(pairs) < 2:
        return None
    lx = np.log([a for a, _ in pairs])
    ly = np.log([b for _, b in pairs])
    if np.ptp(lx) == 0:
        return None
    slope, _ = np.polyfit(lx, ly, 1)
    return float(slope)


def relative_change(new: Optional[float], old: Optional[float]) -> Optional[float]:
    if new is None or old is None:
        return None
    if old == 0:
        return 0.0 if new == 0 else None
    return abs(new - old) / abs(old)


def param_echo(params: ConstructionParams) -> Dict[str, Any]:
    """Row columns that pin down the initial data."""
    return {
        "k": params.k,
        "sigma": params.sigma,
        "p": params.p,
        "J": params.J,
        "grid_N": params.grid.N,
        "domain_L": params.grid.L,
    }


def construction_echo(params: ConstructionParams) -> ConstructionEcho:
    return ConstructionEcho(**params.to_dict())


def solver_echo(cfg: Optional[SolverConfig]) -> Optional[SolverEcho]:
    return SolverEcho(**cfg.to_dict()) if cfg is not None else None


class RunTimer:
    """Wall-clock timing for report metadata."""

    def __init__(self) -> None:
        self.started = time.perf_counter()
        self.created_at = datetime.now(timezone.utc).isoformat()

    def timing(self) -> Dict[str, Any]:
        return {
            "wall_time_s": round(time.perf_counter() - self.started, 3),
            "created_at": self.created_at,
        }


def build_metadata(
    params: ConstructionParams,
    family: LPFamily,
    timer: RunTimer,
    cfg: Optional[SolverConfig] = None,
    seed: int = 0,
    threads: Optional[int] = None,
) -> ReportMetadata:
    return ReportMetadata(
        grid=params.grid.to_dict(),
        lp_family=family.to_dict(),
        solver=solver_echo(cfg),
        seed=seed,
        threads=get_thread_count() if threads is None else threads,
        timing=timer.timing(),
    )
