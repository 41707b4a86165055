# -*- coding: utf-8 -*-
"""
Params
======
Range- and spatial-kernel configuration objects passed to every filter.
"""
import math

import numpy as np

from gausspolyfilter.configs import RangeConfig, SpatialConfig
from gausspolyfilter.models.exceptions import InvalidParameterException


def _positive(name, value):
    value = float(value)
    if not (np.isfinite(value) and value > 0):
        raise InvalidParameterException(name, f'must be a positive real, got {value}')
    return value


class RangeParams:
    """Range kernel configuration: width sigma_r of the Gaussian and degree N of its polynomial approximations

    :param sigma_r: standard deviation of the range Gaussian (intensity units)
    :type sigma_r: float
    :param degree: polynomial degree N
    :type degree: int
    """

    def __init__(self, sigma_r=RangeConfig.DEFAULT_SIGMA_R, degree=RangeConfig.DEFAULT_DEGREE):
        self.sigma_r = _positive('sigma_r', sigma_r)
        if int(degree) != degree or degree < 0:
            raise InvalidParameterException('degree', f'must be a non-negative integer, got {degree}')
        self.degree = int(degree)

    @property
    def taylor_terms(self):
        """Number K of series terms of the Taylor baseline; polynomial degree 2K <= N"""
        return self.degree // 2

    def __repr__(self):
        return f'RangeParams(sigma_r={self.sigma_r}, degree={self.degree})'


class SpatialParams:
    """Spatial kernel configuration: the Gaussian width, the square window [-W, W] x [-W, W] and the boundary rule

    :param sigma_s: standard deviation of the spatial Gaussian (pixels)
    :type sigma_s: float
    :param window_radius: W, defaults to ceil(3 * sigma_s)
    :type window_radius: int, optional
    :param boundary: one of 'replicate', 'reflect', 'zero'
    :type boundary: str
    """

    def __init__(self, sigma_s, window_radius=None, boundary=SpatialConfig.DEFAULT_BOUNDARY):
        self.sigma_s = _positive('sigma_s', sigma_s)
        if window_radius is None:
            window_radius = math.ceil(SpatialConfig.WINDOW_FACTOR * self.sigma_s)
        if int(window_radius) != window_radius or window_radius < 1:
            raise InvalidParameterException('window', f'must be a positive integer, got {window_radius}')
        self.window_radius = int(window_radius)
        if boundary not in SpatialConfig.BOUNDARY_MODES:
            raise InvalidParameterException('boundary', f'must be one of {", ".join(SpatialConfig.BOUNDARY_MODES)}, '
                                                        f'got {boundary!r}')
        self.boundary = boundary

    @classmethod
    def with_window_factor(cls, sigma_s, factor, boundary=SpatialConfig.DEFAULT_BOUNDARY):
        """Window radius W = ceil(factor * sigma_s)"""
        return cls(sigma_s, math.ceil(factor * sigma_s), boundary)

    def offsets(self):
        return np.arange(-self.window_radius, self.window_radius + 1)

    def kernel_1d(self):
        """Unnormalised taps exp(-k^2 / 2 sigma_s^2) for k = -W..W"""
        k = self.offsets().astype(np.float64)
        return np.exp(-(k * k) / (2.0 * self.sigma_s ** 2))

    @property
    def mass_1d(self):
        return float(self.kernel_1d().sum())

    @property
    def mass(self):
        """Total weight S of the truncated 2-D kernel, the response of the unnormalised filter to a unit constant"""
        return self.mass_1d ** 2

    def __repr__(self):
        return f'SpatialParams(sigma_s={self.sigma_s}, window_radius={self.window_radius}, boundary={self.boundary!r})'
