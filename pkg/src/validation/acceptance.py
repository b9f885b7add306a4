"""
Pass/fail thresholds for --check.

Thresholds come from the ``thresholds`` section of config/settings.yaml; a
measurement that is missing from the report fails its check.
"""

from __future__ import annotations

import logging
from typing import Any, Callable, Dict, List, Optional, Sequence

from src.contracts.schemas import CheckOutcome, ExperimentReport

logger = logging.getLogger(__name__)

CHAIN_ROUNDOFF = 1e-12


def _at_most(name: str, measured: Optional[float], bound: float) -> CheckOutcome:
    if measured is None:
        return CheckOutcome(name=name, passed=False, threshold=bound, detail="not measured")
    return CheckOutcome(name=name, passed=measured <= bound, measured=measured, threshold=bound)


def _at_least(name: str, measured: Optional[float], bound: float) -> CheckOutcome:
    if measured is None:
        return CheckOutcome(name=name, passed=False, threshold=bound, detail="not measured")
    return CheckOutcome(name=name, passed=measured >= bound, measured=measured, threshold=bound)


def _within(name: str, measured: Optional[float], bounds: Sequence[float]) -> CheckOutcome:
    lo, hi = float(bounds[0]), float(bounds[1])
    if measured is None:
        return CheckOutcome(name=name, passed=False, threshold=[lo, hi], detail="not measured")
    return CheckOutcome(name=name, passed=lo <= measured <= hi, measured=measured, threshold=[lo, hi])


def _lemma_checks(report: ExperimentReport, th: Dict[str, Any]) -> List[CheckOutcome]:
    s = report.summary
    checks = [
        _at_most("partition_of_unity", s.get("partition_residual"), th["partition_residual_max"]),
        _at_most("divergence_free", s.get("div_residual"), th["divergence_rel_max"]),
        _at_most("besov_plateau", s.get("besov_plateau_change"), th["besov_plateau_change_max"]),
    ]
    if s.get("block_selection_residual") is not None:
        checks.append(
            _at_most("block_selection", s["block_selection_residual"], th["block_selection_rel_max"])
        )
    if report.rows:
        checks.extend(
            [
                _at_most("diagonal_cancellation", s.get("diagonal_residual_max"), th["diagonal_residual_max"]),
                _at_least("lower_bound", s.get("lower_bound_ratio_top_n"), th["lower_bound_factor"]),
                _at_most("r_n_spread", s.get("r_n_spread"), th["r_n_spread_max"]),
                _at_most("h4_stability", s.get("h4_spread"), th["h4_spread_max"]),
            ]
        )
    return checks


def _remainder_checks(report: ExperimentReport, th: Dict[str, Any]) -> List[CheckOutcome]:
    s = report.summary
    return [
        _within("remainder_slope", s.get("remainder_slope"), th["remainder_slope"]),
        _within("departure_slope", s.get("departure_slope"), th["departure_slope"]),
        _at_most("energy_conservation", s.get("energy_drift_max"), th["conservation_rel_max"]),
        _at_most("enstrophy_conservation", s.get("enstrophy_drift_max"), th["conservation_rel_max"]),
    ]


def _inflation_checks(report: ExperimentReport, th: Dict[str, Any]) -> List[CheckOutcome]:
    s = report.summary
    if not report.rows:
        return []
    scale = max((abs(r["block_bound"]) for r in report.rows if r["block_bound"] is not None), default=0.0)
    return [
        _at_least("inflation_plateau", s.get("block_plateau_ratio"), th["inflation_plateau_min"]),
        _at_least("contrast_decay", s.get("contrast_decay"), th["contrast_decay_min"]),
        _at_least("lower_bound_chain", s.get("chain_residual_min"), -CHAIN_ROUNDOFF * max(scale, 1.0)),
    ]


_CHECKS: Dict[str, Callable[[ExperimentReport, Dict[str, Any]], List[CheckOutcome]]] = {
    "verify-lemma": _lemma_checks,
    "remainder-scaling": _remainder_checks,
    "inflation": _inflation_checks,
}


def evaluate_checks(report: ExperimentReport, thresholds: Dict[str, Any]) -> List[CheckOutcome]:
    """Checks applicable to the report's experiment."""
    checks = _CHECKS.get(report.experiment, lambda r, t: [])(report, thresholds)
    for check in checks:
        if not check.passed:
            logger.warning(
                f"{report.experiment}: check {check.name} failed "
                f"(measured={check.measured}, threshold={check.threshold})"
            )
    return checks


def apply_checks(report: ExperimentReport, thresholds: Dict[str, Any]) -> ExperimentReport:
    """Copy of the report with its checks filled in."""
    return report.model_copy(update={"checks": evaluate_checks(report, thresholds)})
