"""
Output formatting for experiment reports.

emit() writes a report as JSON (full report), CSV (rows table in the
documented column order) or SVG (log-log plot of one column with
reference-slope guide lines). format_summary() renders the console view.
"""

from __future__ import annotations

import logging
import math
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple, Union

import matplotlib
import pandas as pd
from matplotlib.figure import Figure

from src.contracts.schemas import ExperimentReport
from src.foundation.errors import ConfigurationError, ReportError

logger = logging.getLogger(__name__)

FORMATS = ("json", "csv", "svg")

# Column plotted when --column is not given.
DEFAULT_PLOT_COLUMN: Dict[str, str] = {
    "verify-lemma": "r_n",
    "remainder-scaling": "remainder_norm",
    "inflation": "block_bound",
}

# Reference slopes drawn through the first plotted point.
GUIDE_SLOPES: Dict[str, Tuple[float, ...]] = {
    "verify-lemma": (0.0,),
    "remainder-scaling": (1.0, 2.0),
    "inflation": (0.0,),
}

_SVG_RC = {
    "svg.fonttype": "none",
    "svg.hashsalt": "besov-lab",
}


def report_frame(report: ExperimentReport) -> pd.DataFrame:
    """Rows as a DataFrame with the documented column order."""
    return pd.DataFrame(report.rows, columns=report.columns)


def _write_text(path: Path, text: str) -> None:
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
    except OSError as exc:
        raise ReportError(f"cannot write report to {path}: {exc}", {"path": str(path)}) from exc


def _plot_points(report: ExperimentReport, column: str) -> List[Tuple[float, float]]:
    index = report.index_column
    points = []
    for row in report.rows:
        x, y = row.get(index), row.get(column)
        if x is None or y is None or x <= 0 or y <= 0:
            continue
        points.append((float(x), float(y)))
    return sorted(points)


def render_svg(report: ExperimentReport, path: Path, column: Optional[str] = None) -> None:
    """Log-log line plot of ``column`` against n or t.

    Raises:
        ConfigurationError: ``column`` is not a column of the report.
    """
    column = column or DEFAULT_PLOT_COLUMN.get(report.experiment)
    if column not in report.columns:
        raise ConfigurationError(
            f"unknown column {column!r} for {report.experiment}; choose one of {report.columns}",
            field="column",
        )
    index = report.index_column
    points = _plot_points(report, column)

    with matplotlib.rc_context(_SVG_RC):
        fig = Figure(figsize=(6.0, 4.5))
        ax = fig.add_subplot(1, 1, 1)
        if points:
            xs, ys = zip(*points)
            ax.loglog(xs, ys, marker="o", label=column, gid=f"series-{column}")
            x0, y0 = xs[0], ys[0]
            for slope in GUIDE_SLOPES.get(report.experiment, ()):
                guide = [y0 * (x / x0) ** slope for x in xs]
                ax.loglog(
                    xs, guide, linestyle="--", linewidth=0.8,
                    label=f"slope {slope:g}", gid=f"guide-slope-{slope:g}",
                )
        else:
            ax.set_xscale("log")
            ax.set_yscale("log")
        ax.set_xlabel(index)
        ax.set_ylabel(column)
        ax.set_title(f"{report.experiment}: {column}")
        if points:
            ax.legend(loc="best")
        fig.tight_layout()
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            fig.savefig(str(path), format="svg", metadata={"Date": None})
        except OSError as exc:
            raise ReportError(f"cannot write report to {path}: {exc}", {"path": str(path)}) from exc


def emit(
    report: ExperimentReport,
    fmt: str,
    path: Union[str, Path],
    column: Optional[str] = None,
) -> Path:
    """Write ``report`` to ``path`` in json, csv or svg.

    Raises:
        ConfigurationError: unknown format, or unknown SVG column.
        ReportError: the path is not writable.
    """
    path = Path(path)
    if fmt not in FORMATS:
        raise ConfigurationError(f"unknown format {fmt!r}; choose one of {FORMATS}", field="format")
    if fmt == "json":
        _write_text(path, report.to_json())
    elif fmt == "csv":
        _write_text(path, report_frame(report).to_csv(index=False))
    else:
        render_svg(report, path, column)
    logger.info(f"Wrote {report.experiment} report ({fmt}) to {path}")
    return path


def _fmt(value) -> str:
    if value is None:
        return "n/a"
    if isinstance(value, bool):
        return "PASS" if value else "FAIL"
    if isinstance(value, float):
        if value == 0 or math.isfinite(value) and 1e-3 <= abs(value) < 1e4:
            return f"{value:.4f}"
        return f"{value:.3e}"
    return str(value)


def format_summary(report: ExperimentReport, columns: Optional[Sequence[str]] = None) -> str:
    """Human-readable summary: headline rows, summary values and checks."""
    lines = [f"{'='*60}", f"  {report.experiment}", f"{'='*60}"]
    c = report.construction
    lines.append(
        f"  sigma={c.sigma:g} p={c.p:g} k={c.k} J={c.J} N={c.grid_N} L={c.domain_L:.4f}"
    )
    if report.rows:
        shown = list(columns or report.columns[:6])
        lines.append(f"\n{'-'*60}")
        lines.append("  " + "  ".join(f"{name:>14}" for name in shown))
        for row in report.rows:
            lines.append("  " + "  ".join(f"{_fmt(row.get(name)):>14}" for name in shown))
    if report.summary:
        lines.append(f"\n{'-'*60}")
        for key, value in report.summary.items():
            lines.append(f"  {key:<28} {_fmt(value)}")
    if report.checks:
        lines.append(f"\n{'-'*60}")
        lines.append("  CHECKS")
        for check in report.checks:
            lines.append(
                f"  [{_fmt(check.passed)}] {check.name:<26} measured={_fmt(check.measured)} "
                f"threshold={check.threshold}"
            )
    lines.append(f"{'='*60}\n")
    return "\n".join(lines)
