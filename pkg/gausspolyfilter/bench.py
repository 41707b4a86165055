# -*- coding: utf-8 -*-
"""
Bench
=====
Timing and accuracy sweeps over the bilateral filters, the sup-norm kernel error sweep, and their CSV output.

Timings cover the filter call only; image loading and CSV writing are never timed.
"""
from collections import namedtuple
import csv
import logging

from gausspolyfilter.configs import BenchConfig, RangeConfig, SpatialConfig
from gausspolyfilter.filters import exact_bilateral, make_filter
from gausspolyfilter.metrics import compare
from gausspolyfilter.models.exceptions import InvalidParameterException
from gausspolyfilter.models.image import Image, IntensityRange
from gausspolyfilter.models.params import RangeParams, SpatialParams
from gausspolyfilter.range_kernel import kernel_curves, sup_error
from gausspolyfilter.utils.utils import median_time

log = logging.getLogger('gpf.bench')

BenchRecord = namedtuple('BenchRecord', ['method', 'backend', 'sigma_s', 'sigma_r', 'degree', 'repeats',
                                         'median_seconds', 'pixels'])
AccuracyRecord = namedtuple('AccuracyRecord', ['method', 'backend', 'sigma_s', 'sigma_r', 'degree', 'mse', 'mse_db',
                                               'max_abs', 'pixels'])
KernelErrorRecord = namedtuple('KernelErrorRecord', ['tau', 'approx', 'sup_error'])


def _check_sweep(methods, sigma_s_list):
    if not methods:
        raise InvalidParameterException('method', 'at least one method is required')
    if not sigma_s_list:
        raise InvalidParameterException('sigma-s-list', 'at least one sigma_s is required')


def run_benchmark(img: Image, methods, sigma_s_list, range_params: RangeParams,
                  backend=SpatialConfig.DEFAULT_BACKEND, repeats=BenchConfig.REPEATS, warmup=BenchConfig.WARMUP,
                  threads=BenchConfig.THREADS, boundary=SpatialConfig.DEFAULT_BOUNDARY):
    """Times every (method, sigma_s) combination, methods varying slowest.

    :param img: input image
    :type img: Image
    :param methods: filter names ('exact', 'gpf', 'taylor')
    :type methods: List[str]
    :param sigma_s_list: spatial widths to sweep
    :type sigma_s_list: List[float]
    :param range_params: range kernel parameters shared by all runs
    :type range_params: RangeParams
    :param backend: spatial backend used by the constant-time methods
    :type backend: str
    :param repeats: number of timed runs per combination
    :type repeats: int
    :param warmup: number of discarded runs per combination
    :type warmup: int
    :param threads: number of threads used inside each filter
    :type threads: int
    :return: one record per combination
    :rtype: List[BenchRecord]
    """
    _check_sweep(methods, sigma_s_list)
    if int(repeats) != repeats or repeats < 1:
        raise InvalidParameterException('repeats', f'must be a positive integer, got {repeats}')
    if int(warmup) != warmup or warmup < 0:
        raise InvalidParameterException('warmup', f'must be a non-negative integer, got {warmup}')

    records = []
    for method in methods:
        for sigma_s in sigma_s_list:
            spatial = SpatialParams(sigma_s, boundary=boundary)
            # Filter objects are built outside the timed call, so validation errors surface before timing starts
            make_filter(method, img, spatial, range_params, backend=backend, threads=threads)

            def run():
                return make_filter(method, img, spatial, range_params, backend=backend, threads=threads).process()

            seconds, _ = median_time(run, repeats=int(repeats), warmup=int(warmup))
            record = BenchRecord(method, backend, float(sigma_s), range_params.sigma_r, range_params.degree,
                                 int(repeats), seconds, img.pixels)
            log.info('%s sigma_s=%g: median %.6fs over %d run(s)', method, sigma_s, seconds, repeats)
            records.append(record)
    return records


def run_accuracy(img: Image, methods, sigma_s_list, range_params: RangeParams, backend=SpatialConfig.DEFAULT_BACKEND,
                 window_factor=SpatialConfig.WINDOW_FACTOR, boundary=SpatialConfig.DEFAULT_BOUNDARY, threads=1,
                 degrees=None):
    """Compares every method against the exact bilateral filter with the same window, for each sigma_s and, when
    ``degrees`` is given, for each degree (degrees varying fastest).

    :return: one record per (method, sigma_s, degree)
    :rtype: List[AccuracyRecord]
    """
    _check_sweep(methods, sigma_s_list)
    degrees = [range_params.degree] if degrees is None else list(degrees)
    if not degrees:
        raise InvalidParameterException('degree-list', 'at least one degree is required')

    references = {}
    records = []
    for method in methods:
        for sigma_s in sigma_s_list:
            spatial = SpatialParams.with_window_factor(sigma_s, window_factor, boundary)
            if sigma_s not in references:
                references[sigma_s] = exact_bilateral(img, spatial, range_params, threads=threads)
            reference = references[sigma_s]
            for degree in degrees:
                params = RangeParams(range_params.sigma_r, degree)
                out = make_filter(method, img, spatial, params, backend=backend, threads=threads).process()
                report = compare(out, reference)
                log.info('%s sigma_s=%g degree=%d: %.3f dB', method, sigma_s, degree, report.mse_db)
                records.append(AccuracyRecord(method, backend, float(sigma_s), params.sigma_r, degree,
                                              report.mse, report.mse_db, report.max_abs, report.pixels))
    return records


def run_kernel_error(range_params: RangeParams, taus, intensity_range: IntensityRange,
                     step=RangeConfig.DEFAULT_STEP, which=RangeConfig.APPROXIMATIONS):
    """Sup-norm error of each selected approximation for every translation

    :rtype: List[KernelErrorRecord]
    """
    if not taus:
        raise InvalidParameterException('tau-list', 'at least one tau is required')
    return [KernelErrorRecord(float(tau), approx, sup_error(range_params, tau, intensity_range, step, approx))
            for tau in taus for approx in which]


def plot_kernel_curves(path, range_params: RangeParams, taus, intensity_range: IntensityRange,
                       step=RangeConfig.DEFAULT_STEP, which=RangeConfig.APPROXIMATIONS):
    """Draws the exact kernel and the selected approximations over the range, one panel per translation"""
    import matplotlib
    matplotlib.use('Agg')
    import matplotlib.pyplot as plt

    fig, axes = plt.subplots(1, len(taus), figsize=(4 * len(taus), 3.5), squeeze=False)
    for ax, tau in zip(axes[0], taus):
        grid, exact, curves = kernel_curves(range_params, tau, intensity_range, step, which)
        ax.plot(grid, exact, 'k-', label='Gaussian')
        for name, curve in curves.items():
            ax.plot(grid, curve, '--', label=name)
        ax.set_ylim(-0.2, 1.2)
        ax.set_title(f'tau = {tau:g}')
        ax.set_xlabel('t')
    axes[0][0].legend()
    fig.suptitle(f'sigma_r = {range_params.sigma_r:g}, N = {range_params.degree}')
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    log.info('Saved kernel curves to %s', path)
    return path


def write_csv(path, columns, records):
    """Writes ``records`` (namedtuples) under a header row, in the given column order. Floats use repr, so the
    decimal separator is always '.'"""
    with open(path, 'w', newline='') as f:
        writer = csv.writer(f, lineterminator='\n')
        writer.writerow(columns)
        for record in records:
            writer.writerow([_cell(getattr(record, column)) for column in columns])
    log.info('Wrote %d row(s) to %s', len(records), path)
    return path


def _cell(value):
    return repr(value) if isinstance(value, float) else str(value)
