# -*- coding: utf-8 -*-
"""
Run
===

Command-line entry point. Subcommands:

* ``filter`` - bilateral filtering of a PGM file
* ``compare`` - error metrics between two PGM files
* ``kernel-error`` - sup-norm error of the range kernel approximations
* ``bench`` - timing sweep over sigma_s
* ``accuracy`` - error sweep of the approximations against the exact filter

Exit status is 0 on success, 1 on I/O errors and 2 on invalid parameters or malformed files.
"""
import argparse
import logging
import re
import sys

from gausspolyfilter.bench import plot_kernel_curves, run_accuracy, run_benchmark, run_kernel_error, write_csv
from gausspolyfilter.configs import BenchConfig, Config, FilterConfig, RangeConfig, SpatialConfig
from gausspolyfilter.filters import make_filter
from gausspolyfilter.metrics import compare, format_report
from gausspolyfilter.models.exceptions import (BaseGPFException, CommandLineException, FileAccessException,
                                               InvalidParameterException)
from gausspolyfilter.models.image import IntensityRange
from gausspolyfilter.models.params import RangeParams, SpatialParams
from gausspolyfilter.processors import ImageReader, ImageWriter
from gausspolyfilter.utils.utils import parse_float_list

log = logging.getLogger('gpf.run')

EXIT_OK = 0
EXIT_IO_ERROR = 1
EXIT_BAD_INPUT = 2


class ArgumentParser(argparse.ArgumentParser):
    """Raises instead of printing the usage and exiting, so that every error ends up as a single line"""

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # Values such as -120,0,120 or -128:127 are arguments, not flags
        self._negative_number_matcher = re.compile(r'^-\.?\d')

    def error(self, message):
        raise CommandLineException(message)


def _flag(param):
    return '--' + param.replace('_', '-')


def _with_file(param, path, action):
    try:
        return action()
    except OSError as e:
        raise FileAccessException(param, path, e.strerror or str(e)) from e


def _float_list(flag, text, positive=False):
    try:
        values = parse_float_list(text)
    except ValueError:
        raise InvalidParameterException(flag, f'expected a comma-separated list of numbers, got {text!r}')
    if not values:
        raise InvalidParameterException(flag, 'must not be empty')
    if positive and not all(v > 0 for v in values):
        raise InvalidParameterException(flag, f'all values must be positive, got {text!r}')
    return values


def _int_list(flag, text):
    values = _float_list(flag, text)
    if any(int(v) != v for v in values):
        raise InvalidParameterException(flag, f'expected a comma-separated list of integers, got {text!r}')
    return [int(v) for v in values]


def _methods(text):
    methods = [m.strip() for m in text.split(',') if m.strip()]
    if not methods:
        raise InvalidParameterException('method', 'must not be empty')
    for method in methods:
        if method not in FilterConfig.METHODS:
            raise InvalidParameterException('method', f'must be one of {", ".join(FilterConfig.METHODS)}, '
                                                      f'got {method!r}')
    return methods


def cmd_filter(opts):
    img = _with_file('input', opts.input, ImageReader(opts.input).process)
    spatial = SpatialParams(opts.sigma_s, opts.window, opts.boundary)
    range_params = RangeParams(opts.sigma_r, opts.degree)
    centering = False if opts.no_centering else FilterConfig.DEFAULT_CENTERING
    bilateral = make_filter(opts.method, img, spatial, range_params, backend=opts.backend, centering=centering,
                            threads=opts.threads)
    out = bilateral.process()
    _with_file('output', opts.output, ImageWriter(out, opts.output).process)
    if bilateral.fallback_pixels:
        print(f'fallback pixels: {bilateral.fallback_pixels}', file=sys.stderr)
    return EXIT_OK


def cmd_compare(opts):
    ref = _with_file('ref', opts.ref, ImageReader(opts.ref).process)
    test = _with_file('test', opts.test, ImageReader(opts.test).process)
    print(format_report(compare(ref, test, opts.exclude_border)))
    return EXIT_OK


def cmd_kernel_error(opts):
    taus = _float_list('tau-list', opts.tau_list)
    intensity_range = IntensityRange.parse(opts.range)
    if not opts.step > 0:
        raise InvalidParameterException('step', f'must be positive, got {opts.step}')
    which = RangeConfig.APPROXIMATIONS if opts.which == 'both' else (opts.which,)
    range_params = RangeParams(opts.sigma_r, opts.degree)
    records = run_kernel_error(range_params, taus, intensity_range, opts.step, which)
    _with_file('csv', opts.csv, lambda: write_csv(opts.csv, BenchConfig.KERNEL_ERROR_COLUMNS, records))
    if opts.plot:
        _with_file('plot', opts.plot,
                   lambda: plot_kernel_curves(opts.plot, range_params, taus, intensity_range, opts.step, which))
    return EXIT_OK


def cmd_bench(opts):
    methods = _methods(opts.method)
    sigma_s_list = _float_list('sigma-s-list', opts.sigma_s_list, positive=True)
    range_params = RangeParams(opts.sigma_r, opts.degree)
    img = _with_file('input', opts.input, ImageReader(opts.input).process)
    records = run_benchmark(img, methods, sigma_s_list, range_params, backend=opts.backend, repeats=opts.repeats,
                            warmup=opts.warmup, threads=opts.threads, boundary=opts.boundary)
    _with_file('csv', opts.csv, lambda: write_csv(opts.csv, BenchConfig.CSV_COLUMNS, records))
    return EXIT_OK


def cmd_accuracy(opts):
    methods = _methods(opts.method)
    sigma_s_list = _float_list('sigma-s-list', opts.sigma_s_list, positive=True)
    degrees = _int_list('degree-list', opts.degree_list) if opts.degree_list else None
    if not opts.window_factor > 0:
        raise InvalidParameterException('window-factor', f'must be positive, got {opts.window_factor}')
    range_params = RangeParams(opts.sigma_r, opts.degree)
    img = _with_file('input', opts.input, ImageReader(opts.input).process)
    records = run_accuracy(img, methods, sigma_s_list, range_params, backend=opts.backend,
                           window_factor=opts.window_factor, boundary=opts.boundary, threads=opts.threads,
                           degrees=degrees)
    _with_file('csv', opts.csv, lambda: write_csv(opts.csv, BenchConfig.ACCURACY_COLUMNS, records))
    return EXIT_OK


def _add_common(parser):
    parser.add_argument('--verbose', action='store_true', help='Log debug messages')
    parser.add_argument('--log-file', type=str, help='Also write the log to this file')


def _add_range(parser, degree_required=False):
    parser.add_argument('--sigma-r', type=float, required=True, help='Range kernel width (intensity units)')
    parser.add_argument('--degree', type=int, default=RangeConfig.DEFAULT_DEGREE, required=degree_required,
                        help='Polynomial degree N')


def _add_spatial(parser):
    parser.add_argument('--backend', choices=SpatialConfig.BACKENDS, default=SpatialConfig.DEFAULT_BACKEND)
    parser.add_argument('--boundary', choices=SpatialConfig.BOUNDARY_MODES, default=SpatialConfig.DEFAULT_BOUNDARY)
    parser.add_argument('--threads', type=int, default=BenchConfig.THREADS,
                        help='Threads used for row-parallel filtering; outputs do not depend on it')


def build_parser():
    parser = ArgumentParser(prog='gausspolyfilter', description='Constant-time Gaussian bilateral filtering')
    subparsers = parser.add_subparsers(dest='command', required=True, parser_class=ArgumentParser)

    p = subparsers.add_parser('filter', help='Filter a PGM image')
    p.add_argument('--input', type=str, required=True, help='Input PGM file')
    p.add_argument('--output', type=str, required=True, help='Output PGM file')
    p.add_argument('--method', choices=FilterConfig.METHODS, required=True)
    p.add_argument('--sigma-s', type=float, required=True, help='Spatial kernel width (pixels)')
    _add_range(p)
    _add_spatial(p)
    p.add_argument('--window', type=int, help='Window radius W, defaults to ceil(3 * sigma_s)')
    p.add_argument('--no-centering', action='store_true', help='Do not centre intensities at their mean (gpf)')
    _add_common(p)
    p.set_defaults(func=cmd_filter)

    p = subparsers.add_parser('compare', help='Error metrics between two PGM images')
    p.add_argument('--ref', type=str, required=True)
    p.add_argument('--test', type=str, required=True)
    p.add_argument('--exclude-border', type=int, default=0)
    _add_common(p)
    p.set_defaults(func=cmd_compare)

    p = subparsers.add_parser('kernel-error', help='Sup-norm error of the range kernel approximations')
    _add_range(p, degree_required=True)
    p.add_argument('--tau-list', type=str, required=True, help='Comma-separated translations')
    p.add_argument('--range', type=str, default='{:g}:{:g}'.format(*Config.DEFAULT_RANGE), help='LO:HI')
    p.add_argument('--step', type=float, default=RangeConfig.DEFAULT_STEP)
    p.add_argument('--which', choices=RangeConfig.APPROXIMATIONS + ('both',), default='both')
    p.add_argument('--csv', type=str, required=True)
    p.add_argument('--plot', type=str, help='Also plot the kernel curves to this PNG file')
    _add_common(p)
    p.set_defaults(func=cmd_kernel_error)

    p = subparsers.add_parser('bench', help='Median run time per (method, sigma_s)')
    p.add_argument('--input', type=str, required=True, help="Input PGM file or 'synthetic'")
    p.add_argument('--method', type=str, required=True, help='Comma-separated methods')
    p.add_argument('--sigma-s-list', type=str, required=True)
    _add_range(p)
    _add_spatial(p)
    p.add_argument('--repeats', type=int, default=BenchConfig.REPEATS)
    p.add_argument('--warmup', type=int, default=BenchConfig.WARMUP)
    p.add_argument('--csv', type=str, required=True)
    _add_common(p)
    p.set_defaults(func=cmd_bench)

    p = subparsers.add_parser('accuracy', help='Error of each method against the exact filter')
    p.add_argument('--input', type=str, required=True, help="Input PGM file or 'synthetic'")
    p.add_argument('--method', type=str, required=True, help='Comma-separated methods')
    p.add_argument('--sigma-s-list', type=str, required=True)
    _add_range(p)
    p.add_argument('--degree-list', type=str, help='Sweep these degrees instead of the single --degree')
    _add_spatial(p)
    p.add_argument('--window-factor', type=float, default=SpatialConfig.WINDOW_FACTOR,
                   help='Window radius W = ceil(factor * sigma_s)')
    p.add_argument('--csv', type=str, required=True)
    _add_common(p)
    p.set_defaults(func=cmd_accuracy)
    return parser


def configure_logging(verbose=False, log_file=None):
    """Attaches a stderr handler (and optionally a file handler) to the package logger, replacing the ones set up by
    an earlier call"""
    root = logging.getLogger('gpf')
    for handler in [h for h in root.handlers if getattr(h, '_gpf_cli', False)]:
        root.removeHandler(handler)
        handler.close()
    handlers = [logging.StreamHandler(sys.stderr)]
    if log_file:
        handlers.append(logging.FileHandler(log_file))
    formatter = logging.Formatter(Config.LOG_FORMAT)
    for handler in handlers:
        handler._gpf_cli = True
        handler.setFormatter(formatter)
        root.addHandler(handler)
    root.setLevel(logging.DEBUG if verbose else logging.INFO)


def main(argv=None):
    """Parses ``argv`` (defaults to sys.argv[1:]), runs the subcommand and returns the exit status"""
    try:
        opts = build_parser().parse_args(argv)
        if getattr(opts, 'threads', 1) < 1:
            raise InvalidParameterException('threads', f'must be at least 1, got {opts.threads}')
        configure_logging(opts.verbose, opts.log_file)
        return opts.func(opts)
    except SystemExit as e:
        # --help
        return e.code if isinstance(e.code, int) else EXIT_OK
    except FileAccessException as e:
        print(f'error: {_flag(e.param)}: {e}', file=sys.stderr)
        return EXIT_IO_ERROR
    except InvalidParameterException as e:
        print(f'error: {_flag(e.param)}: {e.detail}', file=sys.stderr)
        return EXIT_BAD_INPUT
    except BaseGPFException as e:
        print(f'error: {e}', file=sys.stderr)
        return EXIT_BAD_INPUT
    except OSError as e:
        message = f'{e.filename}: {e.strerror}' if e.filename and e.strerror else str(e)
        print(f'error: {message}', file=sys.stderr)
        return EXIT_IO_ERROR


if __name__ == '__main__':
    sys.exit(main())
