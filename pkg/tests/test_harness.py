"""
Tests for the experiment drivers: lemma verification, remainder scaling,
norm inflation, sensitivity and the --check thresholds.
"""

import math

import pytest

from src.construction.packets import make_u0
from src.construction.params import ConstructionParams
from src.contracts.schemas import (
    INFLATION_COLUMNS,
    LEMMA_COLUMNS,
    REMAINDER_COLUMNS,
    ConstructionEcho,
    ExperimentReport,
)
from src.foundation.errors import ConfigurationError
from src.foundation.model_config import get_check_thresholds
from src.simulation.euler_solver import SolverConfig, choose_dt
from src.spectral.grid import make_grid
from src.validation import (
    apply_checks,
    compare_reports,
    fit_loglog_slope,
    inflation,
    inflation_times,
    remainder_scaling,
    run_rows,
    sensitivity_sweep,
    verify_lemma,
)
from src.validation.common import construction_echo

L_DEFAULT = 24 * math.pi


def _params(N=512, J=3, k=1, sigma=2.5, p=2.0):
    return ConstructionParams(sigma=sigma, p=p, k=k, J=J, grid=make_grid(N, L_DEFAULT))


def _cfg(params, T=0.01):
    return SolverConfig(dt=choose_dt(make_u0(params), dt_cap=1e-3), T=T)


class TestCommon:
    """Row execution and slope fits."""

    def test_run_rows_keeps_order(self):
        assert run_rows(lambda x: x * x, [3, 1, 2], threads=2) == [9, 1, 4]
        assert run_rows(lambda x: x + 1, [1], threads=1) == [2]

    def test_fit_loglog_slope(self):
        t = [0.001, 0.002, 0.004, 0.008]
        assert fit_loglog_slope(t, [x ** 2 for x in t]) == pytest.approx(2.0)
        assert fit_loglog_slope([1.0], [1.0]) is None
        assert fit_loglog_slope([1.0, 2.0], [0.0, 0.0]) is None


class TestVerifyLemma:
    """Divergence, partition, plateau and the block identities."""

    def test_rows_and_summary(self):
        report = verify_lemma(_params(N=512, J=3), [1, 2, 3], threads=1)
        assert report.experiment == "verify-lemma"
        assert [row["n"] for row in report.rows] == [1, 2, 3]
        assert list(report.rows[0]) == LEMMA_COLUMNS
        summary = report.summary
        assert summary["partition_residual"] < 1e-12
        assert summary["div_residual"] < 1e-12
        assert summary["i3_identity_residual_max"] < 1e-9
        assert 0.5 - 1e-12 <= summary["square_sum_min"] <= summary["square_sum_max"] <= 1.0 + 1e-12

    def test_plateau_lower_bound_and_selection(self):
        report = verify_lemma(_params(N=1024, J=4), [3, 4], threads=1)
        summary = report.summary
        assert summary["besov_plateau_change"] < 0.05
        assert summary["block_selection_residual"] < 1e-10
        assert summary["lower_bound_ratio_top_n"] >= 0.5
        assert summary["h4_spread"] < 0.10

    def test_diagonal_cancellation_is_exact_for_sparse_lacunarity(self):
        report = verify_lemma(_params(N=1024, J=2, k=2), [2], threads=1)
        assert report.rows[0]["diagonal_residual"] < 1e-8

    def test_cross_term_identity_for_wide_gaps(self):
        report = verify_lemma(_params(N=2048, J=1, k=5), [1], threads=1)
        assert report.rows[0]["cross_term_residual"] < 1e-8

    def test_n_outside_range(self):
        with pytest.raises(ConfigurationError):
            verify_lemma(_params(N=256, J=2), [0])
        with pytest.raises(ConfigurationError):
            verify_lemma(_params(N=256, J=2), [3])

    def test_deterministic_apart_from_timing(self):
        a = verify_lemma(_params(N=256, J=2), [1, 2], threads=1)
        b = verify_lemma(_params(N=256, J=2), [1, 2], threads=1)
        assert a.to_json(include_timing=False) == b.to_json(include_timing=False)


class TestRemainderScaling:
    """Quadratic remainder, linear departure and conservation."""

    def test_slopes(self):
        params = _params(N=256, J=2)
        report = remainder_scaling(params, [0.001, 0.002, 0.004, 0.008], _cfg(params), threads=1)
        assert list(report.rows[0]) == REMAINDER_COLUMNS
        summary = report.summary
        assert 1.8 <= summary["remainder_slope"] <= 2.2
        assert 0.9 <= summary["departure_slope"] <= 1.1
        assert summary["energy_drift_max"] < 1e-6
        assert summary["taylor_oracle_rel_error"] < 0.05
        assert summary["j_min_sensitivity"] <= 1e-6

    def test_zero_time_row(self):
        params = _params(N=256, J=1)
        report = remainder_scaling(params, [0.0, 0.002], _cfg(params), threads=1, taylor_check=False)
        assert report.rows[0]["remainder_norm"] == 0.0
        assert report.rows[0]["departure_norm"] == 0.0
        assert "taylor_oracle_ratio" not in report.summary


class TestInflation:
    """Lower-bound chain and the decay of the contrast norm."""

    def test_chain_and_contrast(self):
        params = _params(N=512, J=3)
        report = inflation(params, 0.1, [1, 2, 3], _cfg(params), threads=1)
        assert list(report.rows[0]) == INFLATION_COLUMNS
        assert [r["t_n"] for r in report.rows] == pytest.approx(inflation_times(params, 0.1, [1, 2, 3]))
        scale = max(r["block_bound"] for r in report.rows)
        assert report.summary["chain_residual_min"] >= -1e-12 * max(scale, 1.0)
        assert report.summary["block_plateau_ratio"] >= 0.5
        assert report.summary["contrast_decay"] >= 3.0

    def test_zero_eps_gives_zero_rows(self):
        params = _params(N=256, J=2)
        report = inflation(params, 0.0, [0, 1, 2], _cfg(params), threads=1)
        for row in report.rows:
            assert row["t_n"] == 0.0
            assert row["D_n"] == 0.0
            assert row["block_bound"] == 0.0
            assert row["contrast_norm"] == 0.0

    def test_invalid_arguments(self):
        params = _params(N=256, J=2)
        with pytest.raises(ConfigurationError) as exc:
            inflation(params, -0.1, [1], _cfg(params))
        assert exc.value.field == "eps"
        with pytest.raises(ConfigurationError):
            inflation(params, 0.1, [3], _cfg(params))


class TestSensitivityAndChecks:
    """Grid variants and threshold evaluation."""

    def _report(self, params, value):
        return ExperimentReport(
            experiment="verify-lemma",
            construction=construction_echo(params),
            rows=[{"n": 1, "r_n": value}],
        )

    def test_compare_reports(self):
        params = _params(N=256, J=1)
        out = compare_reports(self._report(params, 2.0), self._report(params, 2.5), "r_n")
        assert out["relative_change"] == {"1": pytest.approx(0.25)}
        assert out["max_relative_change"] == pytest.approx(0.25)

    def test_sweep_skips_variants_that_do_not_fit(self):
        params = _params(N=512, J=3)
        base = self._report(params, 1.0)
        sweep = sensitivity_sweep(lambda p: self._report(p, 1.1), params, base)
        assert sweep["headline"] == "r_n"
        assert sweep["half_N"] is None
        assert sweep["double_L"]["grid_N"] == 1024
        assert sweep["double_L"]["max_relative_change"] == pytest.approx(0.1)

    def test_missing_measurements_fail(self):
        echo = ConstructionEcho(sigma=2.5, p=2.0, k=1, J=3, grid_N=512, domain_L=L_DEFAULT)
        report = apply_checks(ExperimentReport(experiment="verify-lemma", construction=echo), get_check_thresholds())
        assert not report.all_checks_passed
        assert any(c.detail == "not measured" for c in report.checks)

    def test_lemma_checks_pass_on_small_grid(self):
        report = verify_lemma(_params(N=512, J=3), [2, 3], threads=1)
        checked = apply_checks(report, get_check_thresholds())
        names = {c.name: c.passed for c in checked.checks}
        assert names["partition_of_unity"]
        assert names["divergence_free"]
        assert names["besov_plateau"]
