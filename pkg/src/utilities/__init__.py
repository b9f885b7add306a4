"""Report output (JSON/CSV/SVG, console summary) and run logging."""

from src.utilities.output_formatter import emit, format_summary, report_frame
from src.utilities.data_logging import get_log_directory, log_experiment_run

__all__ = [
    'emit',
    'format_summary',
    'report_frame',
    'get_log_directory',
    'log_experiment_run'
]
