"""Foundation: configuration and error types shared by all modules."""

from src.foundation.errors import (
    BlockRangeError,
    ConfigurationError,
    LabError,
    ReportError,
    RepresentationError,
    SolverDivergenceError,
)
from src.foundation.model_config import (
    get_check_thresholds,
    get_experiment_defaults,
    get_solver_params,
    get_thread_count,
    load_settings,
)

__all__ = [
    "BlockRangeError",
    "ConfigurationError",
    "LabError",
    "ReportError",
    "RepresentationError",
    "SolverDivergenceError",
    "get_check_thresholds",
    "get_experiment_defaults",
    "get_solver_params",
    "get_thread_count",
    "load_settings",
]
