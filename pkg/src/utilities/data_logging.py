"""
Experiment run logging.

Writes one JSONL entry per CLI run to a date-stamped file for audit trails.
Logs go to outputs/logs/runs/ unless the settings name another directory.
"""

from __future__ import annotations

import json
import os
from datetime import datetime
from typing import Any, Dict, Optional

from src.contracts.schemas import ExperimentReport

_PROJECT_ROOT = os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
_DEFAULT_LOG_DIR = os.path.join(_PROJECT_ROOT, "outputs", "logs", "runs")


def get_log_directory(configured: Optional[str] = None) -> str:
    """Return the run-log directory, creating it if needed."""
    log_dir = configured or _DEFAULT_LOG_DIR
    if not os.path.isabs(log_dir):
        log_dir = os.path.join(_PROJECT_ROOT, log_dir)
    os.makedirs(log_dir, exist_ok=True)
    return log_dir


def log_experiment_run(
    report: ExperimentReport,
    output_path: Optional[str] = None,
    directory: Optional[str] = None,
) -> str:
    """Append a run entry to the day's log file.

    Args:
        report: Finished experiment report.
        output_path: Where the report was written, if anywhere.
        directory: Override log directory. Defaults to outputs/logs/runs/.

    Returns:
        Path of the log file.
    """
    log_dir = get_log_directory(directory)
    filename = f"runs_{datetime.now().strftime('%Y-%m-%d')}.jsonl"
    filepath = os.path.join(log_dir, filename)

    entry: Dict[str, Any] = {
        "logged_at": datetime.now().isoformat(),
        "experiment": report.experiment,
        "construction": report.construction.model_dump(),
        "summary": report.summary,
        "checks_passed": report.all_checks_passed if report.checks else None,
        "output_path": output_path,
        "wall_time_s": report.metadata.timing.get("wall_time_s"),
    }
    with open(filepath, "a", encoding="utf-8") as f:
        f.write(json.dumps(entry, default=str) + "\n")
    return filepath
