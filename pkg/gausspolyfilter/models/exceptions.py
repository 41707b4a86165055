# -*- coding: utf-8 -*-
"""
Exceptions
=======
This module contains custom exceptions.
"""


class BaseGPFException(Exception):
    """
    Base exception class
    """


class InvalidImageException(BaseGPFException):
    """
    Raised when an image has bad dimensions, a wrong number of samples or non-finite samples
    """


class IncompatibleImagesException(BaseGPFException):
    """
    Raised when two images that should be compared pixel-by-pixel have different dimensions
    """


class InvalidParameterException(BaseGPFException):
    """
    Raised when a filter or sweep parameter is out of its admissible range.
    ``param`` names the offending parameter so that command-line tools can report the flag.
    """
    def __init__(self, param, message):
        self.param = param
        self.detail = message
        super().__init__(f'{param}: {message}')


class RecursiveSigmaTooSmallException(InvalidParameterException):
    """
    Raised when the recursive Gaussian backend is asked for a sigma it cannot approximate well
    """


class PgmParseException(BaseGPFException):
    """
    Raised when a byte sequence is not a valid 8-bit portable graymap. ``offset`` is the byte position of the problem
    """
    def __init__(self, message, offset):
        self.offset = offset
        super().__init__(f'{message} (at byte {offset})')


class BadMagicException(PgmParseException):
    """
    Raised when the file does not start with P5 or P2
    """


class TruncatedDataException(PgmParseException):
    """
    Raised when the header or the pixel data ends early
    """


class UnsupportedMaxvalException(PgmParseException):
    """
    Raised when maxval is not 255
    """


class BadDimensionsException(PgmParseException):
    """
    Raised when width or height is not a positive integer
    """


class CommandLineException(BaseGPFException):
    """
    Raised when command-line arguments cannot be parsed
    """


class FileAccessException(BaseGPFException):
    """
    Raised when a file named on the command line cannot be read or written.
    ``param`` names the option that supplied ``path``.
    """
    def __init__(self, param, path, reason):
        self.param = param
        self.path = path
        super().__init__(f'{path}: {reason}')
