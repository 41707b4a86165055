# -*- coding: utf-8 -*-
"""
Image
=====
Real-valued grayscale image container, the admissible intensity range and the pointwise utilities shared by every
filter. Samples are stored row-major as float64 and indexed by (row, column).
"""
import logging

import numpy as np

from gausspolyfilter.configs import Config, SyntheticImageConfig
from gausspolyfilter.models.exceptions import InvalidImageException, IncompatibleImagesException, \
    InvalidParameterException

log = logging.getLogger('gpf.image')


class Image:
    """Immutable 2-D grid of real intensity samples.

    :param samples: 2-D array-like of intensities, shape (height, width)
    :type samples: np.ndarray
    :param copy: whether to copy ``samples``; pass False only for freshly computed arrays nobody else holds
    :type copy: bool
    """

    def __init__(self, samples, copy=True):
        arr = np.array(samples, dtype=np.float64) if copy else np.asarray(samples, dtype=np.float64)
        if arr.ndim != 2:
            raise InvalidImageException(f'Image samples must be a 2-D grid, got {arr.ndim} dimension(s)')
        height, width = arr.shape
        if height < 1 or width < 1:
            raise InvalidImageException(f'Image dimensions must be positive, got {width}x{height}')
        if not np.all(np.isfinite(arr)):
            raise InvalidImageException('Image samples must be finite')
        arr.setflags(write=False)
        self._samples = arr

    @classmethod
    def from_flat(cls, width, height, samples):
        """Builds an image from a flat row-major sequence of ``width * height`` samples"""
        flat = np.asarray(samples, dtype=np.float64).ravel()
        if width < 1 or height < 1:
            raise InvalidImageException(f'Image dimensions must be positive, got {width}x{height}')
        if flat.size != width * height:
            raise InvalidImageException(f'Expected {width * height} samples for a {width}x{height} image, '
                                        f'got {flat.size}')
        return cls(flat.reshape(height, width))

    @classmethod
    def constant(cls, width, height, value):
        return cls(np.full((height, width), float(value)), copy=False)

    @property
    def samples(self):
        """Read-only (height, width) float64 array"""
        return self._samples

    @property
    def width(self):
        return self._samples.shape[1]

    @property
    def height(self):
        return self._samples.shape[0]

    @property
    def shape(self):
        return self._samples.shape

    @property
    def pixels(self):
        return self._samples.size

    @property
    def dynamic_range(self):
        return float(self._samples.max() - self._samples.min())

    def crop(self, top, left, height, width):
        return Image(self._samples[top:top + height, left:left + width])

    def __array__(self, dtype=None, copy=None):
        return self._samples if dtype is None else self._samples.astype(dtype)

    def __repr__(self):
        return f'Image({self.width}x{self.height})'


class IntensityRange:
    """Closed intensity interval [low, high], e.g. [0, 255] for 8-bit input"""

    def __init__(self, low=Config.DEFAULT_RANGE[0], high=Config.DEFAULT_RANGE[1]):
        low, high = float(low), float(high)
        if not (np.isfinite(low) and np.isfinite(high)) or not low < high:
            raise InvalidParameterException('range', f'low must be smaller than high, got [{low}, {high}]')
        self.low = low
        self.high = high

    @classmethod
    def parse(cls, text):
        """Parses ``LO:HI``"""
        try:
            low, high = text.split(':')
            return cls(float(low), float(high))
        except ValueError:
            raise InvalidParameterException('range', f'expected LO:HI, got {text!r}')

    @property
    def midpoint(self):
        return (self.low + self.high) / 2

    def grid(self, step):
        """Closed uniform grid low, low + step, ..., high; ``high`` is always included

        :param step: grid spacing
        :type step: float
        :return: grid points
        :rtype: np.ndarray
        """
        if not step > 0:
            raise InvalidParameterException('step', f'must be positive, got {step}')
        count = int(np.floor((self.high - self.low) / step + 1e-9)) + 1
        points = self.low + step * np.arange(count)
        points = points[points <= self.high]
        if points[-1] < self.high:
            points = np.append(points, self.high)
        return points

    def __repr__(self):
        return f'IntensityRange({self.low}, {self.high})'


def mean_intensity(img: Image) -> float:
    """Arithmetic mean of all samples, accumulated in double precision (pairwise summation)"""
    return float(np.mean(img.samples, dtype=np.float64))


def shift(img: Image, c: float) -> Image:
    """Subtracts ``c`` from every sample"""
    c = float(c)
    if not np.isfinite(c):
        raise InvalidParameterException('shift', 'must be finite')
    return Image(img.samples - c, copy=False)


def max_abs_diff(a: Image, b: Image) -> float:
    """Largest pointwise absolute difference between two same-sized images"""
    if a.shape != b.shape:
        raise IncompatibleImagesException(f'Cannot compare a {a.width}x{a.height} image '
                                          f'with a {b.width}x{b.height} image')
    return float(np.max(np.abs(a.samples - b.samples)))


def _ellipse_distance(rows, cols, centre, radii, angle):
    """Squared normalised distance from an ellipse centre; below 1 inside the ellipse"""
    dy, dx = rows - centre[0], cols - centre[1]
    u = (dx * np.cos(angle) + dy * np.sin(angle)) / radii[1]
    v = (-dx * np.sin(angle) + dy * np.cos(angle)) / radii[0]
    return u ** 2 + v ** 2


def peppers_like(size=256, seed=0):
    """Deterministic 8-bit-valued stand-in for a natural test image such as *Peppers*.

    A gently graded mid-gray background with smoothly shaded mid-tone blobs, and three glossy bright peppers, each
    outlined by a dark rim of shadow, over mild sensor-like noise. The peppers are placed identically for every seed;
    the seed moves the mid-tone blobs and the noise. The samples span most of [0, 255] with a standard deviation of
    about 55 and a mean close to mid-gray. The bright/dark outlines are the hardest structures for the range kernel
    approximations.

    :param size: side length in pixels
    :type size: int
    :param seed: seed of the random generator
    :type seed: int
    :return: integer-valued image with samples in [0, 255]
    :rtype: Image
    """
    rng = np.random.default_rng(seed)
    rows, cols = np.mgrid[0:size, 0:size] / float(size)
    img = 132 + 24 * (cols - 0.5) + 10 * np.sin(3 * np.pi * rows)

    for _ in range(5):
        centre = rng.uniform(0.1, 0.9, size=2)
        radii = rng.uniform(0.08, 0.2, size=2)
        dist = _ellipse_distance(rows, cols, centre, radii, rng.uniform(0, np.pi))
        level = rng.uniform(85, 170)
        # Shading darkens towards the blob outline
        img = np.where(dist < 1, level * (1 - 0.15 * dist), img)

    cfg = SyntheticImageConfig
    for centre, radii, angle in cfg.PEPPERS:
        rim = (radii[0] + cfg.PEPPER_RIM, radii[1] + cfg.PEPPER_RIM)
        img = np.where(_ellipse_distance(rows, cols, centre, rim, angle) < 1, cfg.PEPPER_SHADOW, img)
        img = np.where(_ellipse_distance(rows, cols, centre, radii, angle) < 1, cfg.PEPPER_GLOSS, img)

    img = img + rng.normal(0, 2.5, size=img.shape)
    img = np.clip(np.floor(img + 0.5), 0, 255)
    log.debug('Generated a %dx%d synthetic natural image (seed=%d)', size, size, seed)
    return Image(img, copy=False)
