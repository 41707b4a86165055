# -*- coding: utf-8 -*-
"""
GPF
===
This module contains the constant-time Gauss-polynomial bilateral filter.

Replacing the range kernel by its degree-N Gauss-polynomial turns both sums of the bilateral filter into
N + 2 spatial Gaussian filterings of pointwise moment images
    F_n = (h / sigma_r)^n exp(-h^2 / 2 sigma_r^2),
which are combined per pixel into the numerator P and the denominator Q. The intensities are first centred at t_c,
which shrinks the largest translation the polynomial has to cover, and t_c is added back to the output.
"""
import logging

import numpy as np

from gausspolyfilter.configs import FilterConfig, SpatialConfig
from gausspolyfilter.models.base import BaseBilateralFilter
from gausspolyfilter.models.exceptions import InvalidParameterException
from gausspolyfilter.models.image import Image, IntensityRange, mean_intensity, shift
from gausspolyfilter.models.params import RangeParams, SpatialParams
from gausspolyfilter.spatial import SpatialFilter, make_spatial_filter

log = logging.getLogger('gpf.filters.gpf')


def centre_of(img: Image, centering, intensity_range: IntensityRange = None):
    """Returns the centring value t_c: the mean intensity, the midpoint of the intensity range, or 0 when
    centring is off.

    :param img: input image
    :type img: Image
    :param centering: 'mean', 'midpoint', True (same as 'mean'), or False/None (off)
    :param intensity_range: range whose midpoint is used in 'midpoint' mode, defaults to [0, 255]
    :type intensity_range: IntensityRange, optional
    :return: t_c
    :rtype: float
    """
    if centering is True:
        centering = FilterConfig.DEFAULT_CENTERING
    if centering in (False, None):
        return 0.0
    if centering == 'mean':
        return mean_intensity(img)
    if centering == 'midpoint':
        return (intensity_range or IntensityRange()).midpoint
    raise InvalidParameterException('centering', f'must be one of {", ".join(FilterConfig.CENTERING_MODES)} '
                                                 f'or off, got {centering!r}')


def resolve_ratio(P, Q, fallback, scale=1.0, offset=0.0, q_min=FilterConfig.Q_MIN):
    """Computes scale * P / Q + offset, keeping ``fallback`` wherever Q <= q_min or the ratio is not finite.

    :return: output array and the number of fallback pixels
    :rtype: Tuple[np.ndarray, int]
    """
    with np.errstate(divide='ignore', invalid='ignore', over='ignore'):
        ratio = scale * (P / Q) + offset
    bad = ~(Q > q_min) | ~np.isfinite(ratio)
    out = np.where(bad, fallback, ratio)
    return out, int(np.count_nonzero(bad))


class GpfState:
    """Per-pixel accumulators of the Gauss-polynomial filter.

    At the start of iteration n: G = H^n, F = H^n exp(-h^2 / 2 sigma_r^2), Fbar is F filtered spatially and c = 1 / n!.
    Arrays are rebound, never updated in place, so a `copy` taken at any step stays valid.
    """

    def __init__(self, h, sigma_r, spatial_filter: SpatialFilter):
        self.H = h / sigma_r
        self.G = np.ones_like(h)
        self.F = np.exp(-(h * h) / (2.0 * sigma_r ** 2))
        self.P = np.zeros_like(h)
        self.Q = np.zeros_like(h)
        self.Fbar = spatial_filter.apply(self.F)
        self.c = 1.0
        self.n = 0
        self.filterings = 1

    def step(self, spatial_filter: SpatialFilter):
        """One loop iteration: Q before P, then the power images and the coefficient"""
        self.Q = self.Q + self.c * self.G * self.Fbar
        self.F = self.H * self.F
        self.Fbar = spatial_filter.apply(self.F)
        self.filterings += 1
        self.P = self.P + self.c * self.G * self.Fbar
        self.G = self.H * self.G
        self.c = self.c / (self.n + 1)
        self.n += 1

    def copy(self):
        other = object.__new__(GpfState)
        other.__dict__.update(self.__dict__)
        return other


def gpf_states(h: np.ndarray, sigma_r, degree, spatial_filter: SpatialFilter):
    """Runs the Gauss-polynomial loop on the centred intensities ``h``.

    Yields the live state at the start of every iteration n = 0..degree, then once more after the loop.
    """
    state = GpfState(h, sigma_r, spatial_filter)
    for _ in range(degree + 1):
        yield state
        state.step(spatial_filter)
    yield state


class GaussPolynomialFilter(BaseBilateralFilter):
    """Constant-time approximation of the Gaussian bilateral filter.

    :param img: input image
    :type img: Image
    :param spatial: spatial kernel parameters
    :type spatial: SpatialParams
    :param range_params: range kernel parameters (sigma_r and the degree N)
    :type range_params: RangeParams
    :param backend: 'direct', 'recursive' or a `SpatialFilter` instance
    :param centering: 'mean' (default), 'midpoint', or False to disable centring
    :param intensity_range: range used by 'midpoint' centring
    :type intensity_range: IntensityRange, optional
    :param threads: number of threads used by the spatial passes
    :type threads: int
    """

    def __init__(self, img: Image, spatial: SpatialParams, range_params: RangeParams,
                 backend=SpatialConfig.DEFAULT_BACKEND, centering=FilterConfig.DEFAULT_CENTERING,
                 intensity_range: IntensityRange = None, threads=1):
        super().__init__(img, spatial, range_params)
        self.spatial_filter = make_spatial_filter(backend, spatial, threads)
        self.centre = centre_of(img, centering, intensity_range)
        self.state = None

    def states(self):
        """Iterates over the loop states (see `gpf_states`)"""
        h = shift(self.img, self.centre).samples
        return gpf_states(h, self.range_params.sigma_r, self.range_params.degree, self.spatial_filter)

    def process(self):
        for state in self.states():
            pass
        self.state = state
        out, self.fallback_pixels = resolve_ratio(state.P, state.Q, self.img.samples,
                                                  scale=self.range_params.sigma_r, offset=self.centre)
        log.debug('GPF on %r with %r, %r, backend=%s, t_c=%g: %d spatial filterings', self.img, self.spatial,
                  self.range_params, self.spatial_filter.name, self.centre, state.filterings)
        if self.fallback_pixels:
            log.warning('GPF: %d pixel(s) had a vanishing denominator and kept their input value',
                        self.fallback_pixels)
        self._filtered = Image(out, copy=False)
        return self._filtered


def gpf(img: Image, sp: SpatialParams, rp: RangeParams, backend=SpatialConfig.DEFAULT_BACKEND,
        centering=FilterConfig.DEFAULT_CENTERING, threads=1) -> Image:
    """Gauss-polynomial bilateral filter of ``img``"""
    return GaussPolynomialFilter(img, sp, rp, backend=backend, centering=centering, threads=threads).process()
