import math

import numpy as np
import pytest

from gausspolyfilter.filters import (ExactBilateralFilter, GaussPolynomialFilter, TaylorBilateralFilter,
                                     exact_bilateral, gpf, gpf_states, make_filter, taylor_bilateral)
from gausspolyfilter.filters.gpf import centre_of, resolve_ratio
from gausspolyfilter.metrics import compare
from gausspolyfilter.models import Image, InvalidParameterException, IntensityRange, RangeParams, SpatialParams
from gausspolyfilter.models.image import max_abs_diff, mean_intensity, shift
from gausspolyfilter.spatial import DirectGaussianFilter, ScaledSpatialFilter, direct_gaussian, spatial_weight

NUMPY_PAD_MODES = {'replicate': 'edge', 'reflect': 'symmetric', 'zero': 'constant'}
# mse_db of the constant-time filter against the exact one on a Peppers-class image, sigma_r = 30, N = 20
REFERENCE_MSE_DB = {2: -9.6, 3: -5.6}


def bilateral_oracle(arr, sigma_s, sigma_r, radius, boundary):
    padded = np.pad(arr, radius, mode=NUMPY_PAD_MODES[boundary])
    out = np.zeros_like(arr)
    height, width = arr.shape
    for row in range(height):
        for col in range(width):
            centre = arr[row, col]
            numerator = denominator = 0.0
            for dy in range(-radius, radius + 1):
                for dx in range(-radius, radius + 1):
                    value = padded[row + radius + dy, col + radius + dx]
                    weight = spatial_weight(dy, dx, sigma_s) * math.exp(-(value - centre) ** 2 / (2 * sigma_r ** 2))
                    numerator += weight * value
                    denominator += weight
            out[row, col] = numerator / denominator
    return out


def smoothing(img, spatial):
    """Plain normalised Gaussian smoothing with the direct backend"""
    ones = Image.constant(img.width, img.height, 1.0)
    return direct_gaussian(img, spatial).samples / direct_gaussian(ones, spatial).samples


def interior(arr, band):
    return arr[band:-band, band:-band]


class TestExactBilateral:

    @pytest.mark.parametrize('boundary', ['replicate', 'reflect', 'zero'])
    def test_matches_double_loop(self, rng, boundary):
        arr = rng.uniform(0, 255, size=(12, 10))
        out = exact_bilateral(Image(arr), SpatialParams(1.5, 3, boundary), RangeParams(40))
        assert np.max(np.abs(out.samples - bilateral_oracle(arr, 1.5, 40, 3, boundary))) <= 1e-9

    def test_isolated_peak(self):
        arr = np.array([[0, 0, 0], [0, 255, 0], [0, 0, 0]], dtype=float)
        out = exact_bilateral(Image(arr), SpatialParams(1, 1), RangeParams(30)).samples
        assert out[1, 1] == pytest.approx(bilateral_oracle(arr, 1, 30, 1, 'replicate')[1, 1], rel=1e-12)
        assert out[1, 1] == pytest.approx(255, abs=1e-12)

    @pytest.mark.parametrize('value', [0.0, 13.25, 255.0])
    def test_constant(self, value):
        img = Image.constant(9, 7, value)
        out = exact_bilateral(img, SpatialParams(2), RangeParams(10))
        assert np.array_equal(out.samples, img.samples)

    def test_huge_sigma_r_is_gaussian_smoothing(self, random_image):
        spatial = SpatialParams(2)
        out = exact_bilateral(random_image, spatial, RangeParams(1e9))
        assert np.max(np.abs(out.samples - smoothing(random_image, spatial))) <= 1e-6

    def test_output_is_convex_combination(self, random_image):
        spatial = SpatialParams(1.5)
        out = exact_bilateral(random_image, spatial, RangeParams(30)).samples
        assert out.min() >= random_image.samples.min() - 1e-9
        assert out.max() <= random_image.samples.max() + 1e-9

    @pytest.mark.parametrize('c', [-100, 50, 127.5])
    def test_shift_invariance(self, natural_image, c):
        crop = natural_image.crop(20, 30, 64, 64)
        spatial, range_params = SpatialParams(2), RangeParams(30)
        shifted = exact_bilateral(shift(crop, c), spatial, range_params).samples + c
        assert np.max(np.abs(shifted - exact_bilateral(crop, spatial, range_params).samples)) <= 1e-9

    def test_preserves_edges(self):
        sigma_s = 2
        arr = np.zeros((24, 24))
        arr[:, 12:] = 255
        out = exact_bilateral(Image(arr), SpatialParams(sigma_s), RangeParams(30)).samples
        far = np.abs(np.arange(24) - 11.5) >= 3 * sigma_s
        assert np.max(np.abs(out - arr)[:, far]) < 1
        assert np.max(np.abs(out - arr)) < 1

    def test_threads_are_bitwise_identical(self, random_image):
        spatial, range_params = SpatialParams(2), RangeParams(30)
        single = ExactBilateralFilter(random_image, spatial, range_params, threads=1).process()
        multi = ExactBilateralFilter(random_image, spatial, range_params, threads=4).process()
        assert np.array_equal(single.samples, multi.samples)


class TestGpf:

    @pytest.mark.parametrize('backend', ['direct', 'recursive'])
    def test_constant_levels(self, backend):
        rng = np.random.default_rng(11)
        for value in rng.uniform(0, 255, size=10):
            img = Image.constant(16, 16, value)
            for sigma_s in (2, 5):
                for sigma_r in (10, 30):
                    spatial, range_params = SpatialParams(sigma_s), RangeParams(sigma_r, 20)
                    out = gpf(img, spatial, range_params, backend=backend)
                    assert np.max(np.abs(out.samples - value)) <= 1e-9
                    exact = exact_bilateral(img, spatial, range_params)
                    assert np.max(np.abs(exact.samples - value)) <= 1e-9

    def test_large_sigma_r_is_near_exact(self, random_image):
        spatial, range_params = SpatialParams(2), RangeParams(80, 20)
        out = gpf(random_image, spatial, range_params, backend='direct')
        assert compare(out, exact_bilateral(random_image, spatial, range_params)).mse_db <= -20

    def test_moderate_sigma_r(self, normal_image):
        spatial, range_params = SpatialParams(2), RangeParams(30, 20)
        out = gpf(normal_image, spatial, range_params, backend='direct')
        assert compare(out, exact_bilateral(normal_image, spatial, range_params)).mse_db <= 0

    def test_error_decreases_with_degree(self, normal_image):
        spatial = SpatialParams(2)
        reference = exact_bilateral(normal_image, spatial, RangeParams(30))
        errors = [compare(gpf(normal_image, spatial, RangeParams(30, n), backend='direct'), reference).mse_db
                  for n in (5, 10, 20, 30)]
        for before, after in zip(errors, errors[1:]):
            assert after <= before + 0.1

    def test_centering_consistency(self, random_image):
        spatial, range_params = SpatialParams(2), RangeParams(30, 20)
        t_c = mean_intensity(random_image)
        centred = gpf(random_image, spatial, range_params, backend='direct')
        manual = gpf(shift(random_image, t_c), spatial, range_params, backend='direct', centering=False)
        assert np.array_equal(centred.samples, manual.samples + t_c)

    def test_spatial_scale_invariance(self, random_image):
        spatial, range_params = SpatialParams(2), RangeParams(30, 20)
        base = DirectGaussianFilter(spatial)
        plain = gpf(random_image, spatial, range_params, backend=base)
        scaled = gpf(random_image, spatial, range_params, backend=ScaledSpatialFilter(base, 37.0))
        assert max_abs_diff(plain, scaled) <= 1e-10

    @pytest.mark.parametrize('sigma_s', [2, 5])
    def test_backends_agree(self, natural_image, sigma_s):
        range_params = RangeParams(30, 20)
        direct = gpf(natural_image, SpatialParams.with_window_factor(sigma_s, 4), range_params, backend='direct')
        recursive = gpf(natural_image, SpatialParams(sigma_s), range_params, backend='recursive')
        band = math.ceil(3 * sigma_s)
        assert np.max(np.abs(interior(direct.samples - recursive.samples, band))) <= 0.5

    def test_spatial_filterings(self, random_image):
        bilateral = GaussPolynomialFilter(random_image, SpatialParams(2), RangeParams(30, 7), backend='direct')
        bilateral.process()
        assert bilateral.state.filterings == 9

    def test_loop_invariants(self, normal_image):
        sigma_r, degree = 30.0, 12
        bilateral = GaussPolynomialFilter(normal_image, SpatialParams(2), RangeParams(sigma_r, degree),
                                          backend='direct')
        h = normal_image.samples - bilateral.centre
        H = h / sigma_r
        gaussian = np.exp(-h ** 2 / (2 * sigma_r ** 2))
        seen = []
        for state in bilateral.states():
            n = state.n
            seen.append(n)
            if n > degree:
                break
            assert state.c == pytest.approx(1 / math.factorial(n), rel=1e-14)
            assert np.allclose(state.G, H ** n, rtol=1e-12, atol=0)
            assert np.allclose(state.F, H ** n * gaussian, rtol=1e-12, atol=0)
            assert state.G.shape == state.P.shape == state.Q.shape == normal_image.shape
        assert seen == list(range(degree + 2))

    def test_intermediate_states_can_be_kept(self, random_image):
        bilateral = GaussPolynomialFilter(random_image, SpatialParams(2), RangeParams(30, 3), backend='direct')
        snapshots = [state.copy() for state in bilateral.states()]
        assert [s.n for s in snapshots] == [0, 1, 2, 3, 4]
        assert np.all(snapshots[0].Q == 0)
        assert not np.array_equal(snapshots[1].Q, snapshots[2].Q)

    def test_midpoint_centering(self, random_image):
        assert centre_of(random_image, 'midpoint') == 127.5
        assert centre_of(random_image, 'midpoint', IntensityRange(-1, 1)) == 0
        assert centre_of(random_image, True) == mean_intensity(random_image)
        assert centre_of(random_image, None) == 0
        with pytest.raises(InvalidParameterException):
            centre_of(random_image, 'median')

    def test_fallback_keeps_input(self, caplog):
        arr = np.zeros((8, 8))
        arr[:, 4:] = 255
        img = Image(arr)
        bilateral = GaussPolynomialFilter(img, SpatialParams(1), RangeParams(10, 1), backend='direct')
        with caplog.at_level('WARNING', logger='gpf'):
            out = bilateral.process()
        assert bilateral.fallback_pixels == img.pixels
        assert np.array_equal(out.samples, arr)
        assert str(img.pixels) in caplog.text

    def test_no_fallback_on_regular_input(self, random_image):
        bilateral = GaussPolynomialFilter(random_image, SpatialParams(2), RangeParams(30, 20))
        bilateral.process()
        assert bilateral.fallback_pixels == 0


def test_resolve_ratio():
    P = np.array([1.0, 1.0, 1.0, 1.0, 2.0])
    Q = np.array([2.0, 0.0, -1.0, 1e-9, np.inf])
    fallback = np.array([10.0, 20.0, 30.0, 40.0, 50.0])
    out, count = resolve_ratio(P, Q, fallback, scale=3.0, offset=1.0)
    assert np.array_equal(out, [2.5, 20.0, 30.0, 40.0, 1.0])
    assert count == 3


class TestTaylor:

    def test_constant(self):
        img = Image.constant(12, 12, 100.0)
        out = taylor_bilateral(img, SpatialParams(2), RangeParams(30, 20), backend='direct')
        assert np.max(np.abs(out.samples - 100.0)) <= 1e-9

    @pytest.mark.parametrize('degree', [0, 1])
    def test_degenerate_kernel_is_gaussian_smoothing(self, random_image, degree):
        spatial = SpatialParams(2)
        out = taylor_bilateral(random_image, spatial, RangeParams(30, degree), backend='direct')
        assert np.max(np.abs(out.samples - smoothing(random_image, spatial))) <= 1e-9

    def test_filterings(self, random_image):
        bilateral = TaylorBilateralFilter(random_image, SpatialParams(2), RangeParams(30, 10), backend='direct')
        bilateral.process()
        assert bilateral.filterings == 12

    def test_large_sigma_r_tracks_exact(self, random_image):
        spatial, range_params = SpatialParams(2), RangeParams(400, 20)
        out = taylor_bilateral(random_image, spatial, range_params, backend='direct')
        assert compare(out, exact_bilateral(random_image, spatial, range_params)).mse_db <= -20


def test_make_filter():
    img = Image.constant(4, 4, 1.0)
    spatial, range_params = SpatialParams(1), RangeParams()
    assert isinstance(make_filter('exact', img, spatial, range_params), ExactBilateralFilter)
    assert isinstance(make_filter('gpf', img, spatial, range_params), GaussPolynomialFilter)
    assert isinstance(make_filter('taylor', img, spatial, range_params), TaylorBilateralFilter)
    with pytest.raises(InvalidParameterException):
        make_filter('grid', img, spatial, range_params)


@pytest.mark.slow
class TestNaturalImageAccuracy:

    def test_error_grows_with_sigma_s(self, peppers):
        range_params = RangeParams(30, 20)
        errors = []
        for sigma_s in (2, 3, 4, 5):
            spatial = SpatialParams(sigma_s)
            out = gpf(peppers, spatial, range_params, backend='recursive')
            errors.append(compare(out, exact_bilateral(peppers, spatial, range_params)).mse_db)
        assert errors == sorted(errors)

    @pytest.mark.parametrize('sigma_s', sorted(REFERENCE_MSE_DB))
    def test_error_matches_reference_band(self, peppers, sigma_s):
        spatial, range_params = SpatialParams(sigma_s), RangeParams(30, 20)
        out = gpf(peppers, spatial, range_params, backend='recursive')
        mse_db = compare(out, exact_bilateral(peppers, spatial, range_params)).mse_db
        assert abs(mse_db - REFERENCE_MSE_DB[sigma_s]) <= 3

    def test_taylor_is_far_worse_than_gpf(self, peppers):
        spatial, range_params = SpatialParams(3), RangeParams(30, 20)
        reference = exact_bilateral(peppers, spatial, range_params)
        gp = compare(gpf(peppers, spatial, range_params), reference).mse_db
        taylor = compare(taylor_bilateral(peppers, spatial, range_params), reference).mse_db
        assert taylor >= gp + 15
