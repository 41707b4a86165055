# -*- coding: utf-8 -*-
"""
Range Kernel
============
The Gaussian range kernel g(t - tau), its degree-N Gauss-polynomial approximation and the truncated Taylor series
baseline, plus tools measuring the sup-norm approximation error over an intensity range.

A translated Gaussian factors as exp(-tau^2 / 2s^2) exp(-t^2 / 2s^2) exp(tau t / s^2). The Gauss-polynomial keeps the
two Gaussians and replaces only the monotonic exponential by its Taylor polynomial of degree N. All evaluators
broadcast over numpy arrays; scalar inputs give Python floats.
"""
import logging

import numpy as np

from gausspolyfilter.configs import RangeConfig
from gausspolyfilter.models.exceptions import InvalidParameterException
from gausspolyfilter.models.image import IntensityRange
from gausspolyfilter.models.params import RangeParams

log = logging.getLogger('gpf.range_kernel')


def _as_output(value):
    value = np.asarray(value)
    return float(value) if value.ndim == 0 else value


def _half_gaussian_exponent(x, sigma_r):
    return -(x * x) / (2.0 * sigma_r ** 2)


def gaussian_range(t, tau, params: RangeParams):
    """Exact range kernel exp(-(t - tau)^2 / 2 sigma_r^2)"""
    d = np.asarray(t, dtype=np.float64) - np.asarray(tau, dtype=np.float64)
    return _as_output(np.exp(_half_gaussian_exponent(d, params.sigma_r)))


def gauss_polynomial(t, tau, params: RangeParams):
    """Degree-N Gauss-polynomial approximation of exp(-(t - tau)^2 / 2 sigma_r^2).

    The n-th term (tau t / sigma_r^2)^n / n! is obtained from the previous one by multiplying with
    (tau t / sigma_r^2) / n, so no factorial is ever formed. The truncated series is not sign-definite and the
    result can be negative when tau * t < 0.

    :param t: intensity (or array of intensities)
    :param tau: translation (or array of translations)
    :param params: range kernel parameters
    :type params: RangeParams
    :return: approximated kernel value(s)
    """
    t = np.asarray(t, dtype=np.float64)
    tau = np.asarray(tau, dtype=np.float64)
    x = tau * t / params.sigma_r ** 2
    term = np.ones_like(x)
    series = np.ones_like(x)
    for n in range(1, params.degree + 1):
        term = term * x / n
        series = series + term
    value = np.exp(_half_gaussian_exponent(tau, params.sigma_r)) * np.exp(_half_gaussian_exponent(t, params.sigma_r))
    return _as_output(value * series)


def taylor_polynomial(t, tau, params: RangeParams):
    """Truncated Taylor series of the whole translated Gaussian: sum_{k<=K} (-u)^k / k! with
    u = (t - tau)^2 / 2 sigma_r^2 and K = floor(N / 2), so that the polynomial degree 2K does not exceed N.
    Grows without bound away from t = tau."""
    d = np.asarray(t, dtype=np.float64) - np.asarray(tau, dtype=np.float64)
    u = (d * d) / (2.0 * params.sigma_r ** 2)
    term = np.ones_like(u)
    series = np.ones_like(u)
    for k in range(1, params.taylor_terms + 1):
        term = -term * u / k
        series = series + term
    return _as_output(series)


_APPROXIMATIONS = {
    'gp': gauss_polynomial,
    'taylor': taylor_polynomial,
}


def _approximation(which):
    try:
        return _APPROXIMATIONS[which]
    except KeyError:
        raise InvalidParameterException('which', f'must be one of {", ".join(RangeConfig.APPROXIMATIONS)}, '
                                                 f'got {which!r}')


def kernel_curves(params: RangeParams, tau, intensity_range: IntensityRange, step=RangeConfig.DEFAULT_STEP,
                  which=RangeConfig.APPROXIMATIONS):
    """Samples the exact kernel and the selected approximations on the closed grid over ``intensity_range``

    :param params: range kernel parameters
    :type params: RangeParams
    :param tau: translation
    :type tau: float
    :param intensity_range: interval over which t varies
    :type intensity_range: IntensityRange
    :param step: grid spacing
    :type step: float
    :param which: approximation selectors ('gp', 'taylor')
    :type which: Iterable[str]
    :return: grid, exact kernel on the grid, and a dictionary with an approximation curve per selector
    :rtype: Tuple[np.ndarray, np.ndarray, dict]
    """
    grid = intensity_range.grid(step)
    exact = gaussian_range(grid, tau, params)
    curves = {name: _approximation(name)(grid, tau, params) for name in which}
    return grid, exact, curves


def sup_error(params: RangeParams, tau, intensity_range: IntensityRange, step=RangeConfig.DEFAULT_STEP, which='gp'):
    """Maximum over the grid t = low, low + step, ..., high of |g(t - tau) - approx(t, tau)|"""
    _, exact, curves = kernel_curves(params, tau, intensity_range, step, which=(which,))
    error = float(np.max(np.abs(exact - curves[which])))
    log.debug('sup_error(%s, tau=%s, %r, %r) = %g', which, tau, params, intensity_range, error)
    return error


def sup_error_over_taus(params: RangeParams, taus, intensity_range: IntensityRange, step=RangeConfig.DEFAULT_STEP,
                        which='gp'):
    """Worst sup_error over a collection of translations"""
    return max(sup_error(params, tau, intensity_range, step, which) for tau in taus)
