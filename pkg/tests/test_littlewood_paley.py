"""
Tests for the Littlewood-Paley family and the Besov norms built on it.
"""

import math

import numpy as np
import pytest

from src.besov.littlewood_paley import (
    block_upper_index,
    build_lp_family,
    chi_profile,
    dyadic_block,
    homogeneous_block,
    low_frequency_residue,
    phi_profile,
    smooth_step,
)
from src.besov.norms import BesovParams, besov_norm, block_norms, dominant_block
from src.foundation.errors import BlockRangeError, ConfigurationError
from src.spectral.fields import ScalarField, inverse_transform
from src.spectral.grid import make_grid
from src.spectral.operators import lp_norm, spectral_l2_norm

L_DEFAULT = 24 * math.pi
CARRIER_3 = 17.0 / 12.0 * 8


def _mode(grid, freq):
    return ScalarField.from_function(grid, lambda x1, x2: np.cos(freq * x1) + 0 * x2)


def _random_field(grid, kmax, seed, min_radius=0.0):
    """Real field with lattice modes |k_i| <= kmax and |xi| >= min_radius."""
    rng = np.random.default_rng(seed)
    idx = np.abs(grid.frequency_indices)
    keep = (idx[:, None] <= kmax) & (idx[None, :] <= kmax) & (grid.xi_abs >= min_radius)
    coeffs = (rng.standard_normal((grid.N, grid.N)) + 1j * rng.standard_normal((grid.N, grid.N))) * keep
    return ScalarField.physical(grid, inverse_transform(coeffs))


class TestProfiles:
    """Smooth step, chi and phi."""

    def test_smooth_step_limits(self):
        values = smooth_step(np.array([-1.0, 0.0, 0.5, 1.0, 2.0]))
        assert values[0] == 0.0 and values[1] == 0.0
        assert values[2] == pytest.approx(0.5)
        assert values[3] == 1.0 and values[4] == 1.0
        t = np.linspace(0, 1, 201)
        assert np.all(np.diff(smooth_step(t)) >= 0)

    def test_chi_support(self):
        assert np.all(chi_profile(np.linspace(0, 0.75, 20)) == 1.0)
        assert np.all(chi_profile(np.linspace(4 / 3, 5, 20)) == 0.0)

    def test_phi_support(self):
        r = np.linspace(0, 4, 4001)
        phi = phi_profile(r)
        assert np.all(phi[r <= 0.75] == 0.0)
        assert np.all(phi[r >= 8 / 3] == 0.0)
        plateau = (r >= 4 / 3) & (r <= 1.5)
        assert np.all(phi[plateau] == 1.0)


class TestFamily:
    """Block range, partition of unity and range errors."""

    def test_block_upper_index(self):
        assert block_upper_index(make_grid(2048, L_DEFAULT)) == 7
        assert block_upper_index(make_grid(1024, L_DEFAULT)) == 6

    def test_partition_of_unity(self):
        fam = build_lp_family(make_grid(256, L_DEFAULT))
        assert fam.partition_residual() < 1e-12
        lo, hi = fam.square_sum_range()
        assert 0.5 - 1e-12 <= lo <= hi <= 1.0 + 1e-12

    def test_block_range_errors(self):
        fam = build_lp_family(make_grid(64, L_DEFAULT), j_min_homog=-4)
        with pytest.raises(BlockRangeError):
            fam.multiplier(-2)
        with pytest.raises(BlockRangeError):
            fam.multiplier(fam.j_max + 1)
        with pytest.raises(BlockRangeError):
            fam.homogeneous_multiplier(-5)

    def test_homogeneous_floor_must_be_negative(self):
        with pytest.raises(ConfigurationError) as exc:
            build_lp_family(make_grid(64, L_DEFAULT), j_min_homog=0)
        assert exc.value.field == "j_min_homog"

    def test_carrier_selected_by_one_block(self):
        grid = make_grid(512, L_DEFAULT)
        fam = build_lp_family(grid)
        f = _mode(grid, CARRIER_3)
        for j in fam.block_indices():
            block = dyadic_block(f, j, fam)
            if j == 3:
                assert np.max(np.abs(block.data - f.data)) < 1e-12
            else:
                assert np.max(np.abs(block.data)) < 1e-12

    def test_blocks_sum_to_field(self):
        grid = make_grid(128, L_DEFAULT)
        fam = build_lp_family(grid)
        f = _mode(grid, 2.0) + _mode(grid, 0.5)
        total = sum((dyadic_block(f, j, fam).data for j in fam.block_indices()), np.zeros_like(f.data))
        assert np.max(np.abs(total - f.data)) < 1e-12

    def test_homogeneous_blocks_and_residue(self):
        grid = make_grid(128, L_DEFAULT)
        fam = build_lp_family(grid, j_min_homog=-6)
        f = _mode(grid, 2.0) + _mode(grid, 1.0 / 12.0)
        total = low_frequency_residue(f, -6, fam).data.copy()
        for j in fam.homogeneous_indices():
            total += homogeneous_block(f, j, fam).data
        assert np.max(np.abs(total - f.data)) < 1e-12

    def test_blocks_two_apart_are_orthogonal(self):
        grid = make_grid(64, 2 * math.pi)
        fam = build_lp_family(grid)
        f = _random_field(grid, 20, seed=1)
        scale = np.max(np.abs(f.data))
        for i in fam.block_indices():
            inner = dyadic_block(f, i, fam)
            for j in fam.block_indices():
                if abs(i - j) >= 2:
                    assert np.max(np.abs(dyadic_block(inner, j, fam).data)) < 1e-12 * scale


class TestBesovNorms:
    """Weighted block norms, sup over blocks and the dominant block."""

    def test_params_validation(self):
        with pytest.raises(ConfigurationError):
            BesovParams(s=1.0, p=0.5)
        with pytest.raises(ConfigurationError):
            BesovParams(s=1.0, r=0.5)

    def test_single_mode_norm(self):
        grid = make_grid(512, L_DEFAULT)
        fam = build_lp_family(grid)
        f = _mode(grid, CARRIER_3)
        l2 = grid.L / math.sqrt(2.0)
        assert spectral_l2_norm(f) == pytest.approx(l2, rel=1e-12)
        norm = besov_norm(f, BesovParams(s=1.5), fam)
        assert norm == pytest.approx(2 ** 4.5 * l2, rel=1e-10)
        j, value = dominant_block(f, BesovParams(s=1.5), fam)
        assert j == 3
        assert value == pytest.approx(norm)

    def test_lr_sum_dominates_sup(self):
        grid = make_grid(128, L_DEFAULT)
        fam = build_lp_family(grid)
        f = _mode(grid, 2.0) + _mode(grid, 0.5)
        sup = besov_norm(f, BesovParams(s=1.0), fam)
        l1 = besov_norm(f, BesovParams(s=1.0, r=1.0), fam)
        assert l1 >= sup > 0

    def test_p_not_two_uses_physical_norm(self):
        grid = make_grid(512, L_DEFAULT)
        fam = build_lp_family(grid)
        f = _mode(grid, CARRIER_3)
        norms = block_norms(f, BesovParams(s=0.0, p=math.inf), fam)
        assert norms[3] == pytest.approx(1.0, rel=1e-12)

    def test_homogeneous_floor_below_family(self):
        grid = make_grid(64, L_DEFAULT)
        fam = build_lp_family(grid, j_min_homog=-4)
        with pytest.raises(ConfigurationError):
            besov_norm(_mode(grid, 1.0), BesovParams(s=0.5, homogeneous=True, j_min=-6), fam)

    def test_norm_is_absolutely_homogeneous(self):
        grid = make_grid(64, 2 * math.pi)
        fam = build_lp_family(grid)
        f = _random_field(grid, 20, seed=2)
        params = BesovParams(s=1.5)
        assert besov_norm(f * -3.0, params, fam) == pytest.approx(3 * besov_norm(f, params, fam), rel=1e-12)

    def test_norm_increases_with_regularity(self):
        grid = make_grid(32, 2 * math.pi)
        fam = build_lp_family(grid)
        f = _random_field(grid, 6, seed=3, min_radius=2.0)
        for p in (2.0, 3.0):
            low = besov_norm(f, BesovParams(s=1.0, p=p), fam)
            high = besov_norm(f, BesovParams(s=2.0, p=p), fam)
            assert 0 < low <= high * (1 + 1e-12)

    def test_sup_matches_blockwise_quadrature(self):
        grid = make_grid(64, 2 * math.pi)
        fam = build_lp_family(grid)
        f = _random_field(grid, 20, seed=4)
        for p in (2.0, 3.0):
            expected = max(
                2.0 ** (1.5 * j) * lp_norm(dyadic_block(f, j, fam), p) for j in fam.block_indices()
            )
            assert besov_norm(f, BesovParams(s=1.5, p=p), fam) == pytest.approx(expected, rel=1e-10)
