# -*- coding: utf-8 -*-
"""
Metrics
=======
Error between a filtered image and its reference: the mean squared error, its value in decibels 10 log10(MSE),
and the largest absolute deviation.
"""
from collections import namedtuple
import logging
import math

import numpy as np

from gausspolyfilter.configs import MetricsConfig
from gausspolyfilter.models.exceptions import IncompatibleImagesException, InvalidParameterException
from gausspolyfilter.models.image import Image

log = logging.getLogger('gpf.metrics')

ErrorReport = namedtuple('ErrorReport', ['mse', 'mse_db', 'max_abs', 'pixels'])


def mse_to_db(mse):
    """10 log10(mse); identical images map to the floor value"""
    if mse == 0:
        return MetricsConfig.MSE_DB_FLOOR
    return 10.0 * math.log10(mse)


def compare(a: Image, b: Image, exclude_border=0) -> ErrorReport:
    """Compares two same-sized images, optionally ignoring a band of ``exclude_border`` pixels along every edge

    :param a: first image
    :type a: Image
    :param b: second image
    :type b: Image
    :param exclude_border: width of the ignored border band
    :type exclude_border: int
    :return: mse, mse_db, max_abs and the number of compared pixels
    :rtype: ErrorReport
    """
    if a.shape != b.shape:
        raise IncompatibleImagesException(f'Cannot compare a {a.width}x{a.height} image '
                                          f'with a {b.width}x{b.height} image')
    if exclude_border < 0:
        raise InvalidParameterException('exclude_border', f'must be non-negative, got {exclude_border}')
    height, width = a.shape
    if 2 * exclude_border >= min(height, width):
        raise InvalidParameterException('exclude_border', f'{exclude_border} leaves no pixels of a '
                                                          f'{width}x{height} image')
    inner = slice(exclude_border, height - exclude_border), slice(exclude_border, width - exclude_border)
    diff = a.samples[inner] - b.samples[inner]
    mse = float(np.mean(diff * diff))
    return ErrorReport(mse=mse, mse_db=mse_to_db(mse), max_abs=float(np.max(np.abs(diff))), pixels=int(diff.size))


def format_report(report: ErrorReport):
    return f'mse={report.mse!r} mse_db={report.mse_db!r} max_abs={report.max_abs!r} pixels={report.pixels}'
