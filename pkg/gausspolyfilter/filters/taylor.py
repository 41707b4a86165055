# -*- coding: utf-8 -*-
"""
Taylor
======
This module contains the Taylor-polynomial baseline: the whole translated range kernel g(t - tau) is replaced by
its truncated Taylor series sum_{k<=K} (-1)^k (t - tau)^{2k} / (2^k sigma_r^{2k} k!).

Expanding (t - tau)^{2k} binomially into t^m tau^{2k-m} reduces both sums of the bilateral filter to spatial
filterings of the moment images t^m, m = 0..2K+1 (the numerator needs one extra power), so the cost is constant in
sigma_s just like GPF. The expansion is evaluated on centred and sigma_r-scaled intensities; since the kernel depends
on t - tau only, this leaves the result unchanged and keeps the powers well scaled.
"""
import logging

import numpy as np
from scipy.special import comb

from gausspolyfilter.configs import SpatialConfig
from gausspolyfilter.filters.gpf import resolve_ratio
from gausspolyfilter.models.base import BaseBilateralFilter
from gausspolyfilter.models.image import Image, mean_intensity
from gausspolyfilter.models.params import RangeParams, SpatialParams
from gausspolyfilter.spatial import make_spatial_filter

log = logging.getLogger('gpf.filters.taylor')


class TaylorBilateralFilter(BaseBilateralFilter):
    """Constant-time bilateral filter with a truncated-Taylor range kernel. Uses the same spatial backend and
    boundary rule as GPF so that comparisons isolate the range approximation.

    :param img: input image
    :type img: Image
    :param spatial: spatial kernel parameters
    :type spatial: SpatialParams
    :param range_params: range kernel parameters; K = floor(degree / 2) series terms are used
    :type range_params: RangeParams
    :param backend: 'direct', 'recursive' or a `SpatialFilter` instance
    :param threads: number of threads used by the spatial passes
    :type threads: int
    """

    def __init__(self, img: Image, spatial: SpatialParams, range_params: RangeParams,
                 backend=SpatialConfig.DEFAULT_BACKEND, threads=1):
        super().__init__(img, spatial, range_params)
        self.spatial_filter = make_spatial_filter(backend, spatial, threads)
        self.filterings = 0

    def _coefficients(self):
        """(-1)^k / (2^k k!) for k = 0..K, by the running recursion"""
        coef = 1.0
        coefficients = [coef]
        for k in range(1, self.range_params.taylor_terms + 1):
            coef = -coef / (2 * k)
            coefficients.append(coef)
        return coefficients

    def process(self):
        sigma_r = self.range_params.sigma_r
        terms = self.range_params.taylor_terms
        centre = mean_intensity(self.img)
        u = (self.img.samples - centre) / sigma_r

        # Filtered moment images M_m = (u^m * g_s), m = 0..2K+1
        moments = []
        power = np.ones_like(u)
        for m in range(2 * terms + 2):
            moments.append(self.spatial_filter.apply(power))
            power = power * u
        self.filterings = len(moments)

        # (-tau)^p for p = 0..2K, tau being the centre pixel
        neg_tau = [np.ones_like(u)]
        for _ in range(2 * terms):
            neg_tau.append(neg_tau[-1] * -u)

        P = np.zeros_like(u)
        Q = np.zeros_like(u)
        for k, coef in enumerate(self._coefficients()):
            for m in range(2 * k + 1):
                weight = coef * comb(2 * k, m, exact=True) * neg_tau[2 * k - m]
                Q = Q + weight * moments[m]
                P = P + weight * moments[m + 1]

        out, self.fallback_pixels = resolve_ratio(P, Q, self.img.samples, scale=sigma_r, offset=centre)
        log.debug('Taylor bilateral filter on %r with %r, %r, backend=%s: %d spatial filterings', self.img,
                  self.spatial, self.range_params, self.spatial_filter.name, self.filterings)
        if self.fallback_pixels:
            log.warning('Taylor baseline: %d pixel(s) had a non-positive denominator and kept their input value',
                        self.fallback_pixels)
        self._filtered = Image(out, copy=False)
        return self._filtered


def taylor_bilateral(img: Image, sp: SpatialParams, rp: RangeParams, backend=SpatialConfig.DEFAULT_BACKEND,
                     threads=1) -> Image:
    """Taylor-polynomial baseline bilateral filter of ``img``"""
    return TaylorBilateralFilter(img, sp, rp, backend=backend, threads=threads).process()
