# -*- coding: utf-8 -*-
"""
Exact
=====
This module contains the brute-force Gaussian bilateral filter, the reference every approximation is measured against.
"""
import logging

import cv2
import numpy as np

from gausspolyfilter.models.base import BaseBilateralFilter
from gausspolyfilter.models.image import Image
from gausspolyfilter.models.params import RangeParams, SpatialParams
from gausspolyfilter.spatial import spatial_weight
from gausspolyfilter.utils.utils import map_row_bands

log = logging.getLogger('gpf.filters.exact')

BORDER_TYPES = {
    'replicate': cv2.BORDER_REPLICATE,
    'reflect': cv2.BORDER_REFLECT,
    'zero': cv2.BORDER_CONSTANT,
}


def pad_image(arr, radius, boundary):
    """Pads ``arr`` by ``radius`` pixels on every side following the boundary rule"""
    return cv2.copyMakeBorder(np.ascontiguousarray(arr, dtype=np.float64), radius, radius, radius, radius,
                              BORDER_TYPES[boundary], value=0.0)


class ExactBilateralFilter(BaseBilateralFilter):
    """Direct evaluation of the bilateral filter: for every pixel i, the ratio of
    sum_j g_s(j) g_r(f(i - j) - f(i)) f(i - j) to sum_j g_s(j) g_r(f(i - j) - f(i)) over the window j in [-W, W]^2.
    Costs O(W^2) per pixel.

    The denominator contains the centre term g_s(0) g_r(0) = 1, so it never vanishes.
    """

    def __init__(self, img: Image, spatial: SpatialParams, range_params: RangeParams, threads=1):
        super().__init__(img, spatial, range_params)
        self.threads = max(1, int(threads))

    def process(self):
        radius = self.spatial.window_radius
        height, width = self.img.shape
        padded = pad_image(self.img.samples, radius, self.spatial.boundary)
        offsets = [(dy, dx, spatial_weight(dy, dx, self.spatial.sigma_s))
                   for dy in range(-radius, radius + 1) for dx in range(-radius, radius + 1)]
        inv_two_var = 1.0 / (2.0 * self.range_params.sigma_r ** 2)

        def band(start, stop):
            centre = padded[start + radius:stop + radius, radius:radius + width]
            numerator = np.zeros_like(centre)
            denominator = np.zeros_like(centre)
            for dy, dx, weight in offsets:
                neighbour = padded[start + radius + dy:stop + radius + dy, radius + dx:radius + dx + width]
                diff = neighbour - centre
                kernel = weight * np.exp(-(diff * diff) * inv_two_var)
                numerator += kernel * diff
                denominator += kernel
            # Weighted mean of the neighbours written as an offset from the centre, exact on flat regions
            return centre + numerator / denominator

        log.debug('Exact bilateral filter on %r with %r, %r (%d offsets)', self.img, self.spatial,
                  self.range_params, len(offsets))
        out = map_row_bands(band, height, self.threads)
        self._filtered = Image(out, copy=False)
        return self._filtered


def exact_bilateral(img: Image, sp: SpatialParams, rp: RangeParams, threads=1) -> Image:
    """Brute-force bilateral filter of ``img``"""
    return ExactBilateralFilter(img, sp, rp, threads=threads).process()
