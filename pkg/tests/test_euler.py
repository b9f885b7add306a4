"""
Tests for the pseudo-spectral Euler solver, the short-time expansion and the
vorticity oracle.
"""

import math

import numpy as np
import pytest

from src.besov.littlewood_paley import build_lp_family
from src.foundation.errors import ConfigurationError, SolverDivergenceError
from src.simulation.euler_solver import SolverConfig, choose_dt, cfl_bound, diagnostics, rhs, solve, step
from src.simulation.taylor import flow, linear_departure, remainder, second_variation, taylor_coefficient
from src.simulation.vorticity import streamfunction, vorticity_rhs
from src.spectral.fields import ScalarField, VectorField2, inverse_transform
from src.spectral.grid import make_grid
from src.spectral.operators import curl, laplacian, lp_norm, perp_gradient


def _smooth_flow(N=32, kmax=3, seed=0, scale=0.02):
    """Divergence-free velocity with lattice modes |k_i| <= kmax on [0, 2 pi)^2."""
    grid = make_grid(N, 2 * math.pi)
    rng = np.random.default_rng(seed)
    idx = grid.frequency_indices
    keep = (np.abs(idx)[:, None] <= kmax) & (np.abs(idx)[None, :] <= kmax)
    coeffs = (rng.standard_normal((N, N)) + 1j * rng.standard_normal((N, N))) * keep
    psi = ScalarField.physical(grid, scale * inverse_transform(coeffs))
    return perp_gradient(psi)


def _taylor_green(N=32):
    grid = make_grid(N, 2 * math.pi)
    x = grid.coordinates
    u1 = np.sin(x)[:, None] * np.cos(x)[None, :]
    u2 = -np.cos(x)[:, None] * np.sin(x)[None, :]
    return VectorField2.from_arrays(grid, u1, u2)


class TestSolverConfig:
    """Configuration validation and the CFL rule."""

    def test_invalid_config(self):
        with pytest.raises(ConfigurationError):
            SolverConfig(dt=0.0, T=1.0)
        with pytest.raises(ConfigurationError):
            SolverConfig(dt=0.1, T=math.inf)
        with pytest.raises(ConfigurationError):
            SolverConfig(dt=0.1, T=1.0, integrator="euler")

    def test_cfl_violation_is_rejected(self):
        u0 = _smooth_flow()
        bound = cfl_bound(u0)
        with pytest.raises(ConfigurationError) as exc:
            solve(u0, SolverConfig(dt=2 * bound, T=4 * bound))
        assert exc.value.field == "dt"

    def test_choose_dt(self):
        u0 = _smooth_flow()
        assert choose_dt(u0, dt_cap=1.0) == pytest.approx(cfl_bound(u0) / 4)
        assert choose_dt(u0, dt_cap=1e-6) == 1e-6
        zero = VectorField2.zeros(u0.grid)
        assert cfl_bound(zero) == math.inf


class TestSolve:
    """Snapshots, steady states, accuracy and conservation."""

    def test_zero_time_returns_initial_data(self):
        u0 = _smooth_flow()
        traj = solve(u0, SolverConfig(dt=0.01, T=0.0))
        assert traj.times == [0.0]
        assert np.array_equal(traj.final.u1.data, u0.u1.data)

    def test_snapshot_times_are_hit(self):
        u0 = _smooth_flow()
        traj = solve(u0, SolverConfig(dt=0.03, T=0.1), times=[0.05])
        assert traj.times == pytest.approx([0.0, 0.05, 0.1])
        frame = traj.to_frame()
        assert list(frame.columns) == ["step", "t", "energy", "enstrophy", "max_divergence", "divergence_ratio"]
        assert frame["t"].iloc[-1] == pytest.approx(0.1)

    def test_mixed_sign_times_rejected(self):
        u0 = _smooth_flow()
        with pytest.raises(ConfigurationError):
            solve(u0, SolverConfig(dt=0.01, T=0.1), times=[-0.05])

    def test_taylor_green_is_steady(self):
        u0 = _taylor_green()
        assert lp_norm(rhs(u0), 2) < 1e-12
        final = solve(u0, SolverConfig(dt=0.01, T=0.1)).final
        assert lp_norm(final - u0, 2) < 1e-12

    def test_fourth_order_convergence(self):
        u0 = _smooth_flow(scale=0.05)
        T = 0.2
        reference = solve(u0, SolverConfig(dt=T / 128, T=T, cfl_safety=2.0)).final
        errors = [
            lp_norm(solve(u0, SolverConfig(dt=dt, T=T, cfl_safety=2.0)).final - reference, 2)
            for dt in (T / 8, T / 16)
        ]
        assert errors[0] / errors[1] > 2 ** 3.5

    def test_step_local_error_is_fifth_order(self):
        u0 = _smooth_flow(scale=0.05)

        def local_error(dt):
            fine = u0
            for _ in range(10):
                fine = step(fine, dt / 10)
            return lp_norm(step(u0, dt) - fine, 2)

        ratio = local_error(0.02) / local_error(0.01)
        assert 2 ** 4.5 < ratio < 2 ** 5.5

    def test_conservation_and_incompressibility(self):
        u0 = _smooth_flow()
        traj = solve(u0, SolverConfig(dt=0.01, T=0.2))
        start, end = traj.diagnostics[0], traj.diagnostics[-1]
        assert abs(end["energy"] - start["energy"]) / start["energy"] < 1e-6
        assert abs(end["enstrophy"] - start["enstrophy"]) / start["enstrophy"] < 1e-6
        assert traj.max_divergence_ratio() < 1e-12

    def test_backward_integration_recovers_initial_data(self):
        u0 = _smooth_flow()
        cfg = SolverConfig(dt=0.01, T=0.1)
        forward = flow(u0, 0.1, cfg)
        back = flow(forward, -0.1, cfg)
        assert lp_norm(back - u0, 2) < 1e-6 * lp_norm(u0, 2)

    def test_non_finite_state_raises(self):
        grid = make_grid(16, 2 * math.pi)
        bad = VectorField2.from_arrays(grid, np.full((16, 16), np.nan), np.zeros((16, 16)))
        with pytest.raises(SolverDivergenceError) as exc:
            step(bad, 0.01, step_index=3, t=0.02)
        assert exc.value.step == 3


class TestShortTimeExpansion:
    """Remainder scaling and the second-order Taylor coefficient."""

    def test_remainder_is_second_order(self):
        u0 = _smooth_flow()
        cfg = SolverConfig(dt=0.0025, T=0.1)
        r1 = lp_norm(remainder(u0, 0.01, cfg), 2)
        r2 = lp_norm(remainder(u0, 0.02, cfg), 2)
        assert math.log2(r2 / r1) == pytest.approx(2.0, abs=0.15)
        assert lp_norm(remainder(u0, 0.0, cfg), 2) == 0.0

    def test_linear_departure_is_first_order(self):
        u0 = _smooth_flow()
        family = build_lp_family(u0.grid)
        cfg = SolverConfig(dt=2.5e-4, T=1e-2)

        def value(t):
            return linear_departure(u0, t, cfg, sigma=2.5, p=2.0, family=family)

        assert value(0.0) == 0.0
        assert value(2e-3) == pytest.approx(2 * value(1e-3), rel=0.15)

    def test_taylor_coefficient_matches_closed_form(self):
        u0 = _smooth_flow(scale=0.05)
        cfg = SolverConfig(dt=1e-3, T=1e-3)
        numeric = taylor_coefficient(u0, cfg, 1e-3)
        closed = second_variation(u0)
        assert lp_norm(numeric - closed, 2) < 1e-3 * lp_norm(closed, 2)


class TestVorticityOracle:
    """Velocity and vorticity formulations agree on resolved fields."""

    def test_streamfunction_inverts_curl(self):
        u = _smooth_flow()
        psi = streamfunction(u)
        omega = curl(u.as_spectral())
        assert np.max(np.abs(laplacian(psi).data - omega.data)) < 1e-12

    def test_curl_of_rhs_matches_vorticity_rhs(self):
        u = _smooth_flow(N=32, kmax=4)
        lhs = curl(rhs(u).as_spectral())
        oracle = vorticity_rhs(u)
        assert np.max(np.abs(lhs.data - oracle.data)) < 1e-10 * max(np.max(np.abs(oracle.data)), 1e-300)

    def test_diagnostics_of_taylor_green(self):
        d = diagnostics(_taylor_green())
        assert d["energy"] == pytest.approx(math.sqrt(2) * math.pi, rel=1e-12)
        assert d["enstrophy"] == pytest.approx(2 * math.pi, rel=1e-12)
        assert d["divergence_ratio"] < 1e-14
