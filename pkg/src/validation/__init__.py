"""
Validation Module (Experiment Harness)

Experiment drivers that measure each quantitative step of the ill-posedness
argument and package the results as ExperimentReport objects.

Components:
    - verify_lemma: divergence, Besov plateau, block identities, lower bound
    - remainder_scaling: t-scaling of the departure and of the Taylor remainder
    - inflation: B^sigma norm of S_t(u0) - u0 along t_n = eps 2^{-kn}
    - sensitivity_sweep: re-runs at N/2 and (2N, 2L)
    - apply_checks: thresholds behind --check

Example Usage:
    from src.validation import verify_lemma, apply_checks

    report = verify_lemma(params, [3, 4, 5])
    report = apply_checks(report, get_check_thresholds())
"""

from src.validation.lemma import verify_lemma
from src.validation.remainder_scaling import remainder_scaling
from src.validation.inflation import inflation, inflation_times
from src.validation.sensitivity import sensitivity_sweep, compare_reports
from src.validation.acceptance import apply_checks, evaluate_checks
from src.validation.common import fit_loglog_slope, run_rows

__all__ = [
    'verify_lemma',
    'remainder_scaling',
    'inflation',
    'inflation_times',
    'sensitivity_sweep',
    'compare_reports',
    'apply_checks',
    'evaluate_checks',
    'fit_loglog_slope',
    'run_rows'
]
