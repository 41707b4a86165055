from concurrent.futures import ThreadPoolExecutor
import logging
import time

import numpy as np

log = logging.getLogger('gpf.utils')


def band_bounds(length, bands):
    """Splits range(length) into at most ``bands`` contiguous, nearly equal (start, stop) pairs

    :param length: number of rows or columns
    :type length: int
    :param bands: requested number of bands
    :type bands: int
    :return: list of (start, stop) pairs covering range(length)
    :rtype: List[Tuple[int, int]]
    """
    bands = max(1, min(int(bands), length))
    edges = np.linspace(0, length, bands + 1).round().astype(int)
    return [(int(start), int(stop)) for start, stop in zip(edges[:-1], edges[1:]) if stop > start]


def map_bands(func, arr, axis, threads=1):
    """Applies ``func`` to contiguous bands of ``arr`` cut along ``axis`` and stitches the results back together.

    ``func`` must treat every line across ``axis`` independently, so that the result is bitwise identical to
    ``func(arr)`` whatever the number of threads.

    :param func: callable mapping an array band to an array of the same shape
    :param arr: input array
    :type arr: np.ndarray
    :param axis: axis along which the bands are cut
    :type axis: int
    :param threads: number of worker threads; 1 runs ``func`` on the whole array in the calling thread
    :type threads: int
    :return: processed array
    :rtype: np.ndarray
    """
    if threads <= 1:
        return func(arr)
    bounds = band_bounds(arr.shape[axis], threads)
    bands = [np.take(arr, np.arange(start, stop), axis=axis) for start, stop in bounds]
    with ThreadPoolExecutor(max_workers=len(bands)) as pool:
        results = list(pool.map(func, bands))
    return np.concatenate(results, axis=axis)


def map_row_bands(func, rows, threads=1):
    """Runs ``func(start, stop)`` for contiguous row bands of ``range(rows)`` and stacks the returned row blocks"""
    if threads <= 1:
        return func(0, rows)
    bounds = band_bounds(rows, threads)
    with ThreadPoolExecutor(max_workers=len(bounds)) as pool:
        results = list(pool.map(lambda bound: func(*bound), bounds))
    return np.concatenate(results, axis=0)


def median_time(func, repeats=1, warmup=0):
    """Median wall-clock duration of ``func()`` over ``repeats`` timed calls, after ``warmup`` untimed ones.
    Uses the monotonic high-resolution clock.

    :return: median duration in seconds and the result of the last call
    :rtype: Tuple[float, object]
    """
    result = None
    for _ in range(warmup):
        result = func()
    durations = []
    for _ in range(repeats):
        start = time.perf_counter()
        result = func()
        durations.append(time.perf_counter() - start)
    log.debug('Timed %d run(s): %s', repeats, ', '.join(f'{d:.4f}s' for d in durations))
    return float(np.median(durations)), result


def parse_float_list(text):
    """Parses ``R,R,...``; returns an empty list for an empty string"""
    return [float(item) for item in text.split(',') if item.strip()]
