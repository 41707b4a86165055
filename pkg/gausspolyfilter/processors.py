# -*- coding: utf-8 -*-
"""
Processing
==========
This module contains file-level image processors used by the command-line tools
"""
from abc import ABC, abstractmethod
import logging
import os

from gausspolyfilter.models.image import Image, peppers_like
from gausspolyfilter.pgm import read_pgm, write_pgm

log = logging.getLogger('gpf.processors')

# Passing this instead of a path selects the built-in synthetic natural image
SYNTHETIC_INPUT = 'synthetic'


class ImageProcessor(ABC):
    """Base class for all image processors. Each subclass has to implement the `process` method"""

    def __init__(self, img: Image = None):
        self._img = img

    @abstractmethod
    def process(self):
        """The main processing method"""
        pass

    @property
    def img(self):
        return self._img


class ImageReader(ImageProcessor):
    """Class for reading an 8-bit PGM file (P5 or P2) into a real-valued image. The special path ``synthetic``
    produces the built-in 256x256 natural test image instead"""

    def __init__(self, filepath: str):
        """
        :param filepath: path to the PGM file, or 'synthetic'
        :type filepath: str
        """
        self.filepath = filepath
        super().__init__()

    def process(self):
        """Reads the file and returns the decoded image"""
        if self.filepath == SYNTHETIC_INPUT:
            self._img = peppers_like()
        else:
            with open(self.filepath, 'rb') as f:
                self._img = read_pgm(f.read())
        log.info('Read %r from %s', self._img, self.filepath)
        return self._img


class ImageWriter(ImageProcessor):
    """Class for writing an image as a canonical binary PGM file"""

    def __init__(self, img: Image, filepath: str):
        self.filepath = filepath
        super().__init__(img)

    def process(self):
        """Quantises and writes the image; returns the written path"""
        directory = os.path.dirname(os.path.abspath(self.filepath))
        if not os.path.isdir(directory):
            raise FileNotFoundError(f'Output directory does not exist: {directory}')
        with open(self.filepath, 'wb') as f:
            f.write(write_pgm(self.img))
        log.info('Wrote %r to %s', self.img, self.filepath)
        return self.filepath
