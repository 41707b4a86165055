# -*- coding: utf-8 -*-
"""
Spatial
=======
Spatial Gaussian filtering F -> sum_j g(j) F(i - j) with the unnormalised weights g(j) = exp(-|j|^2 / 2 sigma_s^2).

Two interchangeable backends:

* `DirectGaussianFilter` - exact windowed convolution over [-W, W]^2, computed separably (row pass, then column pass).
  Cost grows linearly with W.
* `RecursiveGaussianFilter` - fourth-order causal + anticausal recursive approximation of the Gaussian. Cost per pixel
  does not depend on sigma_s. The response is normalised to unit DC gain and rescaled by the truncated kernel mass S,
  so both backends map a constant v to v * S.
"""
from abc import ABC, abstractmethod
import logging
import math

import numpy as np
from scipy.ndimage import correlate1d
from scipy.signal import lfilter, lfilter_zi

from gausspolyfilter.configs import SpatialConfig
from gausspolyfilter.models.exceptions import InvalidParameterException, RecursiveSigmaTooSmallException
from gausspolyfilter.models.image import Image
from gausspolyfilter.models.params import SpatialParams
from gausspolyfilter.utils.utils import map_bands

log = logging.getLogger('gpf.spatial')


def spatial_weight(j_row, j_col, sigma_s):
    """g(j) = exp(-(j_row^2 + j_col^2) / 2 sigma_s^2)"""
    return math.exp(-(j_row * j_row + j_col * j_col) / (2.0 * sigma_s ** 2))


class SpatialFilter(ABC):
    """Base class for the spatial Gaussian backends. Subclasses implement `apply` on raw float64 arrays; `filter`
    wraps it for `Image` objects.

    :param params: spatial kernel parameters
    :type params: SpatialParams
    :param threads: number of threads used for the row and column passes
    :type threads: int
    """
    name = None

    def __init__(self, params: SpatialParams, threads=1):
        self.params = params
        self.threads = max(1, int(threads))

    @abstractmethod
    def apply(self, arr: np.ndarray) -> np.ndarray:
        """Filters a 2-D float64 array and returns a new array of the same shape"""
        pass

    def filter(self, img: Image) -> Image:
        return Image(self.apply(img.samples), copy=False)

    @property
    def mass(self):
        """Response to a unit constant image"""
        return self.params.mass

    def _separable(self, arr, line_pass):
        """Row pass (bands of rows) followed by a column pass (bands of columns)"""
        rows_done = map_bands(lambda band: line_pass(band, 1), arr, axis=0, threads=self.threads)
        return map_bands(lambda band: line_pass(band, 0), rows_done, axis=1, threads=self.threads)

    def __repr__(self):
        return f'{self.__class__.__name__}({self.params!r})'


class DirectGaussianFilter(SpatialFilter):
    """Exact windowed Gaussian convolution with the configured boundary rule"""
    name = 'direct'

    def __init__(self, params: SpatialParams, threads=1):
        super().__init__(params, threads)
        self._taps = params.kernel_1d()
        self._mode = SpatialConfig.NDIMAGE_MODES[params.boundary]

    def apply(self, arr):
        arr = np.asarray(arr, dtype=np.float64)
        return self._separable(arr, self._line_pass)

    def _line_pass(self, arr, axis):
        # The taps are symmetric, so correlation and convolution coincide
        return correlate1d(arr, self._taps, axis=axis, mode=self._mode, cval=0.0)


def recursive_coefficients(sigma_s):
    """Numerator and denominator polynomials (in z^-1) of the fourth-order recursive Gaussian.

    The impulse response for n >= 0 is a sum of four complex exponentials alpha_k p_k^n, hence
    H+(z) = sum_k alpha_k / (1 - p_k z^-1). The anticausal part covers n >= 1 only, so its transfer function is
    H+(z) - h(0) and it is run on the reversed signal. Both numerators are scaled so that the total DC gain is 1.

    :param sigma_s: Gaussian standard deviation in pixels
    :type sigma_s: float
    :return: causal numerator, anticausal numerator and the shared denominator
    :rtype: Tuple[np.ndarray, np.ndarray, np.ndarray]
    """
    cfg = SpatialConfig
    poles, residues = [], []
    for cos_coef, sin_coef, decay, freq in ((cfg.RECURSIVE_A0, cfg.RECURSIVE_A1, cfg.RECURSIVE_B0, cfg.RECURSIVE_W0),
                                            (cfg.RECURSIVE_C0, cfg.RECURSIVE_C1, cfg.RECURSIVE_B1, cfg.RECURSIVE_W1)):
        pole = np.exp((-decay + 1j * freq) / sigma_s)
        residue = (cos_coef - 1j * sin_coef) / 2
        poles += [pole, np.conj(pole)]
        residues += [residue, np.conj(residue)]

    denominator = np.real(np.poly(poles))
    numerator = np.zeros(len(poles), dtype=complex)
    for k, residue in enumerate(residues):
        numerator += residue * np.poly(poles[:k] + poles[k + 1:])
    causal = np.real(numerator)
    anticausal = np.append(causal, 0.0) - causal[0] * denominator

    dc_gain = (causal.sum() + anticausal.sum()) / denominator.sum()
    return causal / dc_gain, anticausal / dc_gain, denominator


def _steady_state(zi, edge, axis):
    """Initial filter state for a signal that has been equal to ``edge`` forever. A zero edge gives the zero state"""
    shape = [1, 1]
    shape[axis] = -1
    return zi.reshape(shape) * edge


class RecursiveGaussianFilter(SpatialFilter):
    """Constant-time recursive approximation of the Gaussian filter.

    Each 1-D pass is the sum of a causal and an anticausal fourth-order recursion run on the same input. The boundary
    rule sets how the recursions start:

    * replicate - from the steady state of the edge sample
    * zero - from the zero state
    * reflect - on the line mirrored W samples beyond each end, then from the steady state of the mirrored edge
    """
    name = 'recursive'

    def __init__(self, params: SpatialParams, threads=1):
        if params.sigma_s < SpatialConfig.MIN_RECURSIVE_SIGMA:
            raise RecursiveSigmaTooSmallException(
                'sigma_s', f'{params.sigma_s} is below {SpatialConfig.MIN_RECURSIVE_SIGMA}, where the recursive '
                           f'approximation is poor; use the direct backend')
        super().__init__(params, threads)
        self._causal, self._anticausal, self._denominator = recursive_coefficients(params.sigma_s)
        self._causal_zi = lfilter_zi(self._causal, self._denominator)
        self._anticausal_zi = lfilter_zi(self._anticausal, self._denominator)
        self._scale = params.mass_1d

    def apply(self, arr):
        arr = np.asarray(arr, dtype=np.float64)
        return self._separable(arr, self._line_pass)

    def _line_pass(self, arr, axis):
        boundary = self.params.boundary
        length = arr.shape[axis]
        if boundary == 'reflect':
            pad = self.params.window_radius
            widths = [(0, 0)] * arr.ndim
            widths[axis] = (pad, pad)
            arr = np.pad(arr, widths, mode='symmetric')

        first = np.take(arr, [0], axis=axis)
        last = np.take(arr, [-1], axis=axis)
        if boundary == 'zero':
            first, last = np.zeros_like(first), np.zeros_like(last)
        causal, _ = lfilter(self._causal, self._denominator, arr, axis=axis,
                            zi=_steady_state(self._causal_zi, first, axis))
        reversed_arr = np.flip(arr, axis=axis)
        anticausal, _ = lfilter(self._anticausal, self._denominator, reversed_arr, axis=axis,
                                zi=_steady_state(self._anticausal_zi, last, axis))
        out = causal + np.flip(anticausal, axis=axis)

        if boundary == 'reflect':
            out = np.take(out, np.arange(pad, pad + length), axis=axis)
        return out * self._scale


class ScaledSpatialFilter(SpatialFilter):
    """Wraps a backend and multiplies every spatial weight by a constant ``scale``"""

    def __init__(self, base: SpatialFilter, scale):
        if not scale > 0:
            raise InvalidParameterException('scale', f'must be positive, got {scale}')
        super().__init__(base.params, base.threads)
        self.base = base
        self.scale = float(scale)
        self.name = base.name

    def apply(self, arr):
        return self.scale * self.base.apply(arr)

    @property
    def mass(self):
        return self.scale * self.base.mass


_BACKENDS = {
    'direct': DirectGaussianFilter,
    'recursive': RecursiveGaussianFilter,
}


def make_spatial_filter(backend, params: SpatialParams, threads=1) -> SpatialFilter:
    """Returns a backend instance. ``backend`` is a name ('direct' or 'recursive') or an existing `SpatialFilter`,
    which is returned unchanged"""
    if isinstance(backend, SpatialFilter):
        return backend
    try:
        backend_cls = _BACKENDS[backend]
    except KeyError:
        raise InvalidParameterException('backend', f'must be one of {", ".join(SpatialConfig.BACKENDS)}, '
                                                   f'got {backend!r}')
    return backend_cls(params, threads=threads)


def direct_gaussian(img: Image, params: SpatialParams, threads=1) -> Image:
    """Exact windowed spatial Gaussian filtering of ``img``"""
    return DirectGaussianFilter(params, threads).filter(img)


def recursive_gaussian(img: Image, sigma_s, params: SpatialParams = None, threads=1) -> Image:
    """Constant-time recursive spatial Gaussian filtering of ``img``.

    :param img: input image
    :type img: Image
    :param sigma_s: Gaussian standard deviation (pixels), at least 0.5
    :type sigma_s: float
    :param params: optional spatial parameters; their window radius fixes the rescaling mass S
    :type params: SpatialParams, optional
    :param threads: number of threads
    :type threads: int
    :return: filtered image
    :rtype: Image
    """
    if sigma_s < SpatialConfig.MIN_RECURSIVE_SIGMA:
        raise RecursiveSigmaTooSmallException(
            'sigma_s', f'{sigma_s} is below {SpatialConfig.MIN_RECURSIVE_SIGMA}; use the direct backend')
    if params is None:
        params = SpatialParams(sigma_s)
    elif params.sigma_s != sigma_s:
        raise InvalidParameterException('sigma_s', f'{sigma_s} does not match the spatial parameters {params!r}')
    return RecursiveGaussianFilter(params, threads).filter(img)
