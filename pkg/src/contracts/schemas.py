"""
Pydantic schemas for experiment reports.

A report is the only artifact an experiment produces. It round-trips through
JSON losslessly; row keys are the stable column names listed below, in the
order CSV output uses.
"""

from __future__ import annotations

from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field

from src import __version__


# -- Column order per experiment ----------------------------------------------

LEMMA_COLUMNS = [
    "n",
    "r_n",
    "h4_norm",
    "div_residual",
    "lower_bound_ratio",
    "besov_norm_J",
    "besov_norm_J_minus_1",
    "besov_plateau_change",
    "diagonal_residual",
    "cross_term_residual",
    "i3_identity_residual",
    "I1_norm",
    "I2_norm",
    "I3_norm",
    "I31_I32_norm",
    "I33_norm",
    "q_term_besov",
    "k",
    "sigma",
    "p",
    "J",
    "grid_N",
    "domain_L",
]

REMAINDER_COLUMNS = [
    "t",
    "remainder_norm",
    "departure_norm",
    "apriori_ratio",
    "energy_drift",
    "enstrophy_drift",
    "divergence_ratio",
    "dt",
    "k",
    "sigma",
    "p",
    "J",
    "grid_N",
    "domain_L",
]

INFLATION_COLUMNS = [
    "n",
    "t_n",
    "D_n",
    "contrast_norm",
    "dominant_block",
    "block_bound",
    "main_term",
    "q_term",
    "w_term",
    "q_term_bound",
    "w_term_bound",
    "chain_residual",
    "eps",
    "dt",
    "k",
    "sigma",
    "p",
    "J",
    "grid_N",
    "domain_L",
]

EXPERIMENT_COLUMNS: Dict[str, List[str]] = {
    "verify-lemma": LEMMA_COLUMNS,
    "remainder-scaling": REMAINDER_COLUMNS,
    "inflation": INFLATION_COLUMNS,
}

# x-axis column for plots
EXPERIMENT_INDEX: Dict[str, str] = {
    "verify-lemma": "n",
    "remainder-scaling": "t",
    "inflation": "n",
}


# -- Echo Models --------------------------------------------------------------


class ConstructionEcho(BaseModel):
    """Parameters of the initial data, enough to rebuild it."""

    sigma: float
    p: float
    k: int
    J: int
    grid_N: int = Field(description="Points per axis")
    domain_L: float = Field(description="Period per axis")


class SolverEcho(BaseModel):
    """Time-stepping parameters used by the experiment."""

    dt: float
    T: float
    dealias: Optional[float] = Field(default=2.0 / 3.0, description="Fraction of Nyquist kept; null disables")
    diagnostics_every: int = 1
    cfl_safety: float = 0.5
    integrator: str = "rk4"


class CheckOutcome(BaseModel):
    """One pass/fail threshold evaluated by --check."""

    name: str
    passed: bool
    measured: Optional[float] = None
    threshold: Optional[Any] = Field(default=None, description="Scalar bound or [lo, hi] range")
    detail: Optional[str] = None


class ReportMetadata(BaseModel):
    """How the report was produced."""

    code_version: str = __version__
    grid: Dict[str, Any] = Field(default_factory=dict)
    lp_family: Dict[str, Any] = Field(default_factory=dict)
    solver: Optional[SolverEcho] = None
    seed: int = 0
    threads: int = 1
    timing: Dict[str, Any] = Field(
        default_factory=dict,
        description="wall_time_s and created_at; the only non-deterministic fields",
    )


# -- Top-Level Report ---------------------------------------------------------


class ExperimentReport(BaseModel):
    """Structured results of one experiment, one row per n or t."""

    experiment: str = Field(description="verify-lemma, remainder-scaling or inflation")
    construction: ConstructionEcho
    rows: List[Dict[str, Any]] = Field(default_factory=list)
    summary: Dict[str, Any] = Field(default_factory=dict)
    checks: List[CheckOutcome] = Field(default_factory=list)
    sensitivity: Optional[Dict[str, Any]] = None
    metadata: ReportMetadata = Field(default_factory=ReportMetadata)

    @property
    def columns(self) -> List[str]:
        """Documented column order, followed by any undocumented row keys."""
        documented = list(EXPERIMENT_COLUMNS.get(self.experiment, []))
        extra = sorted({key for row in self.rows for key in row} - set(documented))
        return documented + extra

    @property
    def index_column(self) -> str:
        return EXPERIMENT_INDEX.get(self.experiment, "n")

    @property
    def all_checks_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self, include_timing: bool = True) -> str:
        exclude = None if include_timing else {"metadata": {"timing"}}
        return self.model_dump_json(indent=2, exclude=exclude)

    @classmethod
    def from_json(cls, text: str) -> "ExperimentReport":
        return cls.model_validate_json(text)


class ErrorResponse(BaseModel):
    """Structured error printed by the CLI."""

    error_code: str = Field(description="CONFIG_INVALID, REPRESENTATION_MISMATCH, BLOCK_OUT_OF_RANGE, SOLVER_DIVERGED, REPORT_WRITE_FAILED")
    message: str = Field(description="Human-readable error description")
    context: Optional[Dict[str, Any]] = None
