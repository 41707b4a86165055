# -*- coding: utf-8 -*-
"""
PGM
===
Reading and writing 8-bit portable graymaps.

The reader accepts binary (P5) and ASCII (P2) files: header tokens are separated by any whitespace, '#' starts a
comment running to the end of the line, and in P5 files exactly one whitespace byte follows maxval before the pixel
bytes. The writer always emits canonical binary files "P5\\n<width> <height>\\n255\\n" + pixels, clamping samples to
[0, 255] and rounding half away from zero.
"""
from collections import namedtuple
import logging

import numpy as np

from gausspolyfilter.configs import PgmConfig
from gausspolyfilter.models.exceptions import BadDimensionsException, BadMagicException, PgmParseException, \
    TruncatedDataException, UnsupportedMaxvalException
from gausspolyfilter.models.image import Image

log = logging.getLogger('gpf.pgm')

Pgm8 = namedtuple('Pgm8', ['width', 'height', 'maxval', 'pixels'])

_WHITESPACE = b' \t\n\r\v\f'


class _HeaderScanner:
    """Token reader over the header (and the ASCII raster) of a PNM file"""

    def __init__(self, data: bytes, pos: int):
        self.data = data
        self.pos = pos

    def _skip(self):
        data = self.data
        while self.pos < len(data):
            byte = data[self.pos:self.pos + 1]
            if byte in _WHITESPACE:
                self.pos += 1
            elif byte == b'#':
                end = data.find(b'\n', self.pos)
                self.pos = len(data) if end < 0 else end + 1
            else:
                break

    def integer(self, what):
        """Reads the next unsigned decimal token"""
        self._skip()
        start = self.pos
        data = self.data
        while self.pos < len(data) and data[self.pos:self.pos + 1] not in _WHITESPACE \
                and data[self.pos:self.pos + 1] != b'#':
            self.pos += 1
        token = data[start:self.pos]
        if not token:
            raise TruncatedDataException(f'Unexpected end of data while reading {what}', start)
        if not token.isdigit():
            if what in ('width', 'height') and token.lstrip(b'-+').isdigit():
                raise BadDimensionsException(f'{what} must be a positive integer, got {token.decode("ascii")}',
                                             start)
            raise PgmParseException(f'Expected a decimal integer for {what}, got {token[:16]!r}', start)
        return int(token), start


def decode_pgm(data: bytes) -> Pgm8:
    """Parses a P5 or P2 byte sequence

    :param data: file contents
    :type data: bytes
    :return: decoded graymap
    :rtype: Pgm8
    """
    data = bytes(data)
    magic = data[:2]
    if magic not in PgmConfig.MAGICS:
        raise BadMagicException(f'Not an 8-bit PGM file: expected P5 or P2, got {magic!r}', 0)
    if len(data) > 2 and data[2:3] not in _WHITESPACE and data[2:3] != b'#':
        raise BadMagicException(f'Not an 8-bit PGM file: bad magic {data[:3]!r}', 0)

    scanner = _HeaderScanner(data, 2)
    width, width_at = scanner.integer('width')
    height, height_at = scanner.integer('height')
    if width <= 0:
        raise BadDimensionsException(f'width must be positive, got {width}', width_at)
    if height <= 0:
        raise BadDimensionsException(f'height must be positive, got {height}', height_at)
    maxval, maxval_at = scanner.integer('maxval')
    if maxval != PgmConfig.MAXVAL:
        raise UnsupportedMaxvalException(f'Only maxval {PgmConfig.MAXVAL} is supported, got {maxval}', maxval_at)

    count = width * height
    if magic == PgmConfig.BINARY_MAGIC:
        pos = scanner.pos
        if pos >= len(data) or data[pos:pos + 1] not in _WHITESPACE:
            raise TruncatedDataException('Expected a single whitespace byte after maxval', pos)
        pos += 1
        if len(data) - pos < count:
            raise TruncatedDataException(f'Expected {count} pixel bytes, found {len(data) - pos}', len(data))
        pixels = np.frombuffer(data, dtype=np.uint8, count=count, offset=pos).reshape(height, width).copy()
    else:
        values = np.empty(count, dtype=np.uint8)
        for idx in range(count):
            value, at = scanner.integer(f'pixel {idx}')
            if value > maxval:
                raise PgmParseException(f'Pixel value {value} exceeds maxval {maxval}', at)
            values[idx] = value
        pixels = values.reshape(height, width)
    log.debug('Decoded a %dx%d %s graymap', width, height, magic.decode('ascii'))
    return Pgm8(width, height, maxval, pixels)


def encode_pgm(pgm: Pgm8) -> bytes:
    """Emits a canonical binary graymap"""
    header = f'P5\n{pgm.width} {pgm.height}\n{PgmConfig.MAXVAL}\n'.encode('ascii')
    return header + np.ascontiguousarray(pgm.pixels, dtype=np.uint8).tobytes()


def quantise(img: Image) -> np.ndarray:
    """Clamps samples to [0, 255] and rounds half away from zero"""
    clamped = np.clip(img.samples, 0, PgmConfig.MAXVAL)
    return np.floor(clamped + 0.5).astype(np.uint8)


def to_image(pgm: Pgm8) -> Image:
    return Image(pgm.pixels.astype(np.float64), copy=False)


def from_image(img: Image) -> Pgm8:
    return Pgm8(img.width, img.height, PgmConfig.MAXVAL, quantise(img))


def read_pgm(data: bytes) -> Image:
    """Parses PGM bytes into a real-valued image"""
    return to_image(decode_pgm(data))


def write_pgm(img: Image) -> bytes:
    """Serialises an image as canonical binary PGM bytes"""
    return encode_pgm(from_image(img))
