"""
Error types shared by every layer of the lab.

Each error carries a machine-readable ``error_code`` so the CLI and the
report layer can surface failures without parsing messages.
"""

from __future__ import annotations

from typing import Any, Dict, Optional


class LabError(Exception):
    """Base class for all lab errors."""

    error_code = "LAB_ERROR"

    def __init__(self, message: str, context: Optional[Dict[str, Any]] = None) -> None:
        super().__init__(message)
        self.message = message
        self.context = context or {}

    def to_dict(self) -> Dict[str, Any]:
        return {
            "error_code": self.error_code,
            "message": self.message,
            "context": self.context,
        }


class ConfigurationError(LabError, ValueError):
    """Invalid grid, construction, Besov or solver parameters."""

    error_code = "CONFIG_INVALID"

    def __init__(self, message: str, field: Optional[str] = None, **context: Any) -> None:
        if field:
            context["field"] = field
        super().__init__(message, context)
        self.field = field


class RepresentationError(LabError, ValueError):
    """A field was given in the wrong (physical/spectral) representation."""

    error_code = "REPRESENTATION_MISMATCH"


class BlockRangeError(LabError, IndexError):
    """A dyadic block index lies outside the family's range."""

    error_code = "BLOCK_OUT_OF_RANGE"

    def __init__(self, j: int, lo: int, hi: int) -> None:
        super().__init__(
            f"block index j={j} outside [{lo}, {hi}]",
            {"j": j, "j_lo": lo, "j_hi": hi},
        )
        self.j = j


class SolverDivergenceError(LabError, RuntimeError):
    """Non-finite values appeared during time stepping."""

    error_code = "SOLVER_DIVERGED"

    def __init__(self, step: int, t: float, offending_t: Optional[float] = None) -> None:
        message = f"non-finite velocity at step {step} (t={t:.6g})"
        if offending_t is not None:
            message += f" while computing t={offending_t:.6g}"
        super().__init__(message, {"step": step, "t": t, "offending_t": offending_t})
        self.step = step
        self.t = t
        self.offending_t = offending_t


class ReportError(LabError, OSError):
    """A report could not be written."""

    error_code = "REPORT_WRITE_FAILED"
