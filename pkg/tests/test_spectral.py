"""
Tests for the spectral core: grid, dual-representation fields and Fourier multipliers.
"""

import math

import numpy as np
import pytest

from src.foundation.errors import ConfigurationError, RepresentationError
from src.spectral.fields import ScalarField, VectorField2, inverse_transform
from src.spectral.grid import make_grid
from src.spectral.operators import (
    apply_multiplier,
    curl,
    dealias,
    divergence,
    gradient,
    inverse_laplacian,
    laplacian,
    lp_norm,
    mean_value,
    partial,
    perp_gradient,
    spectral_l2_norm,
)


def _band_limited(grid, kmax, seed=0):
    """Real random field with lattice modes |k_i| <= kmax only."""
    rng = np.random.default_rng(seed)
    idx = grid.frequency_indices
    keep = (np.abs(idx)[:, None] <= kmax) & (np.abs(idx)[None, :] <= kmax)
    coeffs = (rng.standard_normal((grid.N, grid.N)) + 1j * rng.standard_normal((grid.N, grid.N))) * keep
    return ScalarField.physical(grid, inverse_transform(coeffs))


class TestGrid:
    """Grid validation and lattice geometry."""

    def test_rejects_bad_resolution(self):
        with pytest.raises(ConfigurationError):
            make_grid(100, 2 * math.pi)
        with pytest.raises(ConfigurationError):
            make_grid(4, 2 * math.pi)

    def test_rejects_non_positive_period(self):
        with pytest.raises(ConfigurationError) as exc:
            make_grid(32, 0.0)
        assert exc.value.field == "L"

    def test_lattice_geometry(self):
        grid = make_grid(2048, 24 * math.pi)
        assert grid.spacing == pytest.approx(1.0 / 12.0)
        assert grid.nyquist == pytest.approx(2048 / 24.0)
        assert grid.frequency_indices.min() == -1024
        assert grid.frequency_indices.max() == 1023
        assert grid.is_lattice_frequency(17.0 / 12.0 * 2 ** 5)
        assert not grid.is_lattice_frequency(0.05)

    def test_dealias_mask_is_square(self):
        grid = make_grid(32, 2 * math.pi)
        mask = grid.dealias_mask()
        kept = grid.frequency_indices[mask[:, 0]]
        assert np.abs(kept).max() == 10
        assert mask.sum() == 21 * 21


class TestFields:
    """Transforms, normalization and immutability."""

    def test_constant_has_its_value_at_zero_frequency(self):
        grid = make_grid(16, 3.0)
        f = ScalarField.physical(grid, np.full((16, 16), 2.5))
        coeffs = f.to_spectral().data
        assert coeffs[0, 0] == pytest.approx(2.5)
        assert np.abs(coeffs).sum() == pytest.approx(2.5)

    def test_transform_round_trip(self):
        grid = make_grid(32, 2 * math.pi)
        f = _band_limited(grid, 8, seed=1)
        back = f.to_spectral().to_physical()
        assert np.max(np.abs(back.data - f.data)) < 1e-12

    def test_representation_mismatch_raises(self):
        grid = make_grid(16, 1.0)
        spectral = ScalarField.zeros(grid).to_spectral()
        with pytest.raises(RepresentationError):
            spectral.to_spectral()
        with pytest.raises(RepresentationError):
            ScalarField.zeros(grid).to_physical()

    def test_data_is_read_only(self):
        grid = make_grid(16, 1.0)
        f = ScalarField.zeros(grid)
        with pytest.raises(ValueError):
            f.data[0, 0] = 1.0

    def test_vector_components_share_representation(self):
        grid = make_grid(16, 1.0)
        with pytest.raises(RepresentationError):
            VectorField2(ScalarField.zeros(grid), ScalarField.zeros(grid).to_spectral())

    def test_mixed_representation_arithmetic(self):
        grid = make_grid(32, 2 * math.pi)
        f = _band_limited(grid, 6, seed=2)
        total = f + f.to_spectral()
        assert total.is_physical
        assert np.max(np.abs(total.data - 2 * f.data)) < 1e-12


class TestOperators:
    """Derivatives, projections-free identities and norms."""

    def test_partial_of_sine(self):
        grid = make_grid(64, 2 * math.pi)
        f = ScalarField.from_function(grid, lambda x1, x2: np.sin(3 * x1) * np.cos(2 * x2))
        d1 = partial(f, 0)
        expected = 3 * np.cos(3 * grid.coordinates)[:, None] * np.cos(2 * grid.coordinates)[None, :]
        assert np.max(np.abs(d1.data - expected)) < 1e-11
        with pytest.raises(ConfigurationError):
            partial(f, 2)

    def test_perp_gradient_is_divergence_free(self):
        grid = make_grid(32, 2 * math.pi)
        psi = _band_limited(grid, 6, seed=3)
        u = perp_gradient(psi)
        assert np.max(np.abs(divergence(u).data)) < 1e-10
        assert np.max(np.abs(curl(u).data - laplacian(psi).data)) < 1e-10

    def test_inverse_laplacian_removes_mean(self):
        grid = make_grid(32, 2 * math.pi)
        f = _band_limited(grid, 5, seed=4)
        recovered = inverse_laplacian(-laplacian(f))
        assert np.max(np.abs(recovered.data - (f.data - mean_value(f)))) < 1e-10

    def test_parseval(self):
        grid = make_grid(32, 5.0)
        f = _band_limited(grid, 8, seed=5)
        assert lp_norm(f, 2) == pytest.approx(spectral_l2_norm(f), rel=1e-12)

    def test_lp_norms(self):
        grid = make_grid(32, 2 * math.pi)
        f = ScalarField.from_function(grid, lambda x1, x2: np.cos(x1) + 0 * x2)
        assert lp_norm(f, math.inf) == pytest.approx(1.0)
        assert lp_norm(f, 2) == pytest.approx(math.sqrt(2 * math.pi ** 2), rel=1e-12)
        assert lp_norm(f, 4) == pytest.approx((4 * math.pi ** 2 * 3 / 8) ** 0.25, rel=1e-12)
        with pytest.raises(ConfigurationError):
            lp_norm(f, 0.5)

    def test_dealias_none_is_identity(self):
        grid = make_grid(32, 2 * math.pi)
        f = _band_limited(grid, 15, seed=6)
        assert dealias(f, None) is f
        truncated = dealias(f.to_spectral())
        idx = np.abs(grid.frequency_indices)
        assert np.all(truncated.data[idx > 10, :] == 0)

    def test_multiplier_matches_direct_convolution(self):
        grid = make_grid(8, 2 * math.pi)
        N = grid.N
        f = _band_limited(grid, 4, seed=7)
        m = np.exp(-grid.xi_squared)
        x, xi = grid.coordinates, grid.wavenumbers
        kernel = np.empty((N, N))
        for a in range(N):
            for b in range(N):
                phase = np.exp(1j * (xi[:, None] * x[a] + xi[None, :] * x[b]))
                kernel[a, b] = (m * phase).sum().real / N ** 2
        # out[a, b] = sum_{c, d} kernel[a - c, b - d] f[c, d]
        expected = sum(
            f.data[c, d] * np.roll(kernel, (c, d), axis=(0, 1)) for c in range(N) for d in range(N)
        )
        out = apply_multiplier(f, m)
        assert out.is_physical
        assert np.max(np.abs(out.data - expected)) < 1e-12 * np.max(np.abs(f.data))

    def test_multipliers_compose(self):
        grid = make_grid(32, 2 * math.pi)
        f = _band_limited(grid, 10, seed=8)
        smooth = np.exp(-grid.xi_squared / 50.0)
        derivative = 1j * grid.xi1
        twice = apply_multiplier(apply_multiplier(f, smooth), derivative)
        once = apply_multiplier(f, lambda xi1, xi2: 1j * xi1 * np.exp(-(xi1 ** 2 + xi2 ** 2) / 50.0))
        assert np.max(np.abs(twice.data - once.data)) < 1e-12 * np.max(np.abs(once.data))

    def test_gradient_agrees_with_centered_differences(self):
        def fd_error(N):
            grid = make_grid(N, 2 * math.pi)
            f = ScalarField.from_function(
                grid, lambda x1, x2: np.sin(x1) * np.cos(2 * x2) + 0.3 * np.cos(3 * x1 + x2)
            )
            grad = gradient(f)
            fd1 = (np.roll(f.data, -1, axis=0) - np.roll(f.data, 1, axis=0)) / (2 * grid.dx)
            fd2 = (np.roll(f.data, -1, axis=1) - np.roll(f.data, 1, axis=1)) / (2 * grid.dx)
            return max(np.max(np.abs(grad.u1.data - fd1)), np.max(np.abs(grad.u2.data - fd2)))

        coarse, fine = fd_error(32), fd_error(64)
        assert fine < 1e-2
        assert coarse / fine > 3.5
