import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from gausspolyfilter.configs import SpatialConfig
from gausspolyfilter.models import Image, InvalidParameterException, RecursiveSigmaTooSmallException, SpatialParams
from gausspolyfilter.models.image import max_abs_diff
from gausspolyfilter.spatial import (DirectGaussianFilter, RecursiveGaussianFilter, ScaledSpatialFilter,
                                     direct_gaussian, make_spatial_filter, recursive_coefficients,
                                     recursive_gaussian, spatial_weight)
from gausspolyfilter.utils.utils import band_bounds, map_bands

NUMPY_PAD_MODES = {'replicate': 'edge', 'reflect': 'symmetric', 'zero': 'constant'}


def convolve_oracle(arr, sigma_s, radius, boundary):
    """Non-separable windowed sum over the full 2-D neighbourhood"""
    padded = np.pad(arr, radius, mode=NUMPY_PAD_MODES[boundary])
    out = np.zeros_like(arr)
    height, width = arr.shape
    for row in range(height):
        for col in range(width):
            total = 0.0
            for dy in range(-radius, radius + 1):
                for dx in range(-radius, radius + 1):
                    total += spatial_weight(dy, dx, sigma_s) * padded[row + radius - dy, col + radius - dx]
            out[row, col] = total
    return out


def interior(arr, band):
    return arr[band:-band, band:-band]


class TestSpatialWeight:

    def test_origin(self):
        assert spatial_weight(0, 0, 3.0) == 1.0

    def test_pythagorean_triple(self):
        assert spatial_weight(3, 4, 5) == pytest.approx(math.exp(-0.5), rel=1e-15)

    @given(st.integers(-20, 20), st.integers(-20, 20), st.floats(0.5, 20))
    def test_separable(self, a, b, sigma):
        assert spatial_weight(a, b, sigma) == pytest.approx(spatial_weight(a, 0, sigma) * spatial_weight(0, b, sigma),
                                                            rel=1e-12)


class TestDirectGaussian:

    @pytest.mark.parametrize('sigma_s', [1, 2.5])
    def test_constant(self, sigma_s):
        params = SpatialParams(sigma_s)
        out = direct_gaussian(Image.constant(20, 15, 7.0), params)
        assert np.allclose(out.samples, 7.0 * params.mass, rtol=1e-14, atol=0)

    def test_impulse_response_is_the_kernel(self):
        params = SpatialParams(1.5, 4, 'zero')
        impulse = np.zeros((9, 9))
        impulse[4, 4] = 1.0
        out = direct_gaussian(Image(impulse), params).samples
        for dy in range(-4, 5):
            for dx in range(-4, 5):
                assert out[4 + dy, 4 + dx] == pytest.approx(spatial_weight(dy, dx, 1.5), rel=1e-12, abs=1e-300)

    @pytest.mark.parametrize('boundary', ['replicate', 'reflect', 'zero'])
    def test_matches_brute_force(self, rng, boundary):
        arr = rng.random((16, 16))
        out = direct_gaussian(Image(arr), SpatialParams(2, 6, boundary)).samples
        assert np.max(np.abs(out - convolve_oracle(arr, 2, 6, boundary))) <= 1e-12

    def test_threads_are_bitwise_identical(self, natural_image):
        params = SpatialParams(3)
        single = DirectGaussianFilter(params, threads=1).filter(natural_image)
        multi = DirectGaussianFilter(params, threads=3).filter(natural_image)
        assert np.array_equal(single.samples, multi.samples)


class TestRecursiveGaussian:

    def test_coefficients_have_unit_dc_gain(self):
        causal, anticausal, denominator = recursive_coefficients(3.0)
        assert len(denominator) == 5 and denominator[0] == pytest.approx(1.0)
        assert anticausal[0] == pytest.approx(0.0, abs=1e-15)
        assert (causal.sum() + anticausal.sum()) / denominator.sum() == pytest.approx(1.0, rel=1e-12)

    @pytest.mark.parametrize('sigma_s', [0.5, 2, 7.5, 20])
    def test_constant(self, sigma_s):
        params = SpatialParams(sigma_s)
        out = recursive_gaussian(Image.constant(40, 30, 93.0), sigma_s)
        assert np.allclose(out.samples, 93.0 * params.mass, rtol=1e-6, atol=0)

    def test_impulse_response(self):
        sigma_s = 3
        params = SpatialParams(sigma_s, 6 * sigma_s)
        impulse = np.zeros((61, 61))
        impulse[30, 30] = 1.0
        out = recursive_gaussian(Image(impulse), sigma_s, params).samples
        for k in range(-3 * sigma_s, 3 * sigma_s + 1):
            assert abs(out[30, 30 + k] - spatial_weight(0, k, sigma_s)) <= 0.01
            assert abs(out[30 + k, 30] - spatial_weight(k, 0, sigma_s)) <= 0.01

    def test_random_image_matches_direct(self, rng):
        sigma_s = 5
        arr = rng.uniform(0, 255, size=(64, 64))
        params = SpatialParams.with_window_factor(sigma_s, SpatialConfig.ORACLE_WINDOW_FACTOR)
        direct = direct_gaussian(Image(arr), params)
        recursive = recursive_gaussian(Image(arr), sigma_s, params)
        assert max_abs_diff(direct, recursive) <= 1e-2 * direct.dynamic_range

    @pytest.mark.parametrize('sigma_s', [2, 3, 5, 10])
    def test_backends_agree_away_from_borders(self, natural_image, sigma_s):
        params = SpatialParams.with_window_factor(sigma_s, SpatialConfig.ORACLE_WINDOW_FACTOR)
        direct = direct_gaussian(natural_image, params)
        recursive = recursive_gaussian(natural_image, sigma_s, params)
        band = math.ceil(3 * sigma_s)
        diff = np.abs(interior(direct.samples, band) - interior(recursive.samples, band))
        assert diff.max() <= 1e-2 * direct.dynamic_range

    @pytest.mark.parametrize('boundary', ['replicate', 'reflect', 'zero'])
    def test_boundary_rules_match_direct(self, natural_image, boundary):
        sigma_s = 3
        params = SpatialParams.with_window_factor(sigma_s, SpatialConfig.ORACLE_WINDOW_FACTOR, boundary)
        direct = direct_gaussian(natural_image, params)
        recursive = recursive_gaussian(natural_image, sigma_s, params)
        assert max_abs_diff(direct, recursive) <= 1e-2 * direct.dynamic_range

    def test_zero_boundary_darkens_corners(self):
        img = Image.constant(20, 20, 100.0)
        params = SpatialParams(2, boundary='zero')
        replicate = recursive_gaussian(img, 2, SpatialParams(2)).samples
        zero = recursive_gaussian(img, 2, params).samples
        direct = direct_gaussian(img, params).samples
        assert zero[0, 0] < 0.5 * replicate[0, 0]
        assert zero[0, 0] == pytest.approx(direct[0, 0], rel=3e-2)
        assert zero[10, 10] == pytest.approx(replicate[10, 10], rel=1e-6)

    def test_reflect_differs_from_replicate_at_borders(self):
        arr = np.zeros((24, 24))
        arr[:, :2] = 255
        params = SpatialParams(2, boundary='reflect')
        reflect = recursive_gaussian(Image(arr), 2, params).samples
        replicate = recursive_gaussian(Image(arr), 2, SpatialParams(2)).samples
        direct = direct_gaussian(Image(arr), params).samples
        assert abs(reflect[12, 0] - direct[12, 0]) <= 1e-2 * direct.max()
        assert abs(replicate[12, 0] - reflect[12, 0]) > 0.1 * direct.max()

    def test_small_sigma_is_rejected(self):
        with pytest.raises(RecursiveSigmaTooSmallException) as e:
            recursive_gaussian(Image.constant(4, 4, 1.0), 0.4)
        assert e.value.param == 'sigma_s'
        assert 'direct' in str(e.value)

    def test_mismatched_params(self):
        with pytest.raises(InvalidParameterException):
            recursive_gaussian(Image.constant(4, 4, 1.0), 2, SpatialParams(3))

    def test_threads_are_bitwise_identical(self, natural_image):
        params = SpatialParams(4)
        single = RecursiveGaussianFilter(params, threads=1).filter(natural_image)
        multi = RecursiveGaussianFilter(params, threads=4).filter(natural_image)
        assert np.array_equal(single.samples, multi.samples)


@pytest.mark.parametrize('backend', ['direct', 'recursive'])
def test_linearity(rng, backend):
    spatial_filter = make_spatial_filter(backend, SpatialParams(2.5))
    x = rng.uniform(0, 255, size=(24, 20))
    y = rng.uniform(-50, 50, size=(24, 20))
    a, b = 1.7, -0.3
    combined = spatial_filter.apply(a * x + b * y)
    separate = a * spatial_filter.apply(x) + b * spatial_filter.apply(y)
    assert np.max(np.abs(combined - separate)) <= 1e-10 * np.max(np.abs(combined))


def test_scaled_filter(rng):
    base = DirectGaussianFilter(SpatialParams(2))
    scaled = ScaledSpatialFilter(base, 3.5)
    arr = rng.random((10, 10))
    assert np.allclose(scaled.apply(arr), 3.5 * base.apply(arr), rtol=1e-15)
    assert scaled.mass == pytest.approx(3.5 * base.mass)
    with pytest.raises(InvalidParameterException):
        ScaledSpatialFilter(base, 0)


def test_unknown_backend():
    with pytest.raises(InvalidParameterException) as e:
        make_spatial_filter('fft', SpatialParams(2))
    assert e.value.param == 'backend'


def test_backend_instance_passes_through():
    spatial_filter = DirectGaussianFilter(SpatialParams(2))
    assert make_spatial_filter(spatial_filter, SpatialParams(5)) is spatial_filter


class TestBands:

    @pytest.mark.parametrize('length, bands', [(10, 3), (5, 8), (1, 1), (128, 4)])
    def test_bounds_cover_range(self, length, bands):
        bounds = band_bounds(length, bands)
        assert bounds[0][0] == 0 and bounds[-1][1] == length
        assert all(stop == start for (_, stop), (start, _) in zip(bounds, bounds[1:]))
        assert len(bounds) <= min(length, bands)

    @settings(max_examples=20, deadline=None)
    @given(st.integers(1, 30), st.integers(1, 30), st.integers(1, 6), st.sampled_from([0, 1]))
    def test_map_bands_reassembles(self, height, width, threads, axis):
        arr = np.arange(height * width, dtype=float).reshape(height, width)
        assert np.array_equal(map_bands(lambda band: band * 2, arr, axis, threads), arr * 2)
