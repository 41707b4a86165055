# -*- coding: utf-8 -*-
"""
Base
=====
This module contains the base bilateral filter class
"""
from abc import ABC, abstractmethod
import logging

from gausspolyfilter.models.image import Image
from gausspolyfilter.models.params import RangeParams, SpatialParams

log = logging.getLogger('gpf.base')


class BaseBilateralFilter(ABC):
    """Base for all bilateral filter classes. All subclasses should implement `process`, which filters ``self.img``
    and stores the result so that it is available through the `filtered` property"""

    def __init__(self, img: Image, spatial: SpatialParams, range_params: RangeParams):
        self._img = img
        self.spatial = spatial
        self.range_params = range_params
        self._filtered = None
        # Pixels whose denominator was too small and that kept their input value
        self.fallback_pixels = 0

    @property
    def img(self):
        return self._img

    @abstractmethod
    def process(self) -> Image:
        """This method filters ``self.img`` and returns the output image"""
        pass

    @property
    def filtered(self):
        """Output of the last `process` call"""
        return self._filtered

    def __repr__(self):
        return f'{self.__class__.__name__}({self.img!r}, {self.spatial!r}, {self.range_params!r})'
