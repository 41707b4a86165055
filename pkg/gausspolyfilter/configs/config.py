class Config:
    # Dynamic range [L, U] of 8-bit grayscale input
    DEFAULT_RANGE = (0.0, 255.0)
    LOG_FORMAT = '%(asctime)s %(name)s %(levelname)s: %(message)s'


class RangeConfig(Config):
    """Config used for the range kernel and its polynomial approximations"""
    # Degree used for all the experiments unless overridden
    DEFAULT_DEGREE = 20
    DEFAULT_SIGMA_R = 30.0
    # Grid spacing used when measuring the sup-norm approximation error (8-bit quantisation step)
    DEFAULT_STEP = 1.0
    # Selectors accepted by `sup_error`: Gauss-polynomial and truncated Taylor series
    APPROXIMATIONS = ('gp', 'taylor')


class SpatialConfig(Config):
    """Config used by the spatial Gaussian backends"""
    # Window radius W = ceil(WINDOW_FACTOR * sigma_s)
    WINDOW_FACTOR = 3
    # Wider window used when the direct backend serves as a reference for the recursive one
    ORACLE_WINDOW_FACTOR = 4
    DEFAULT_BOUNDARY = 'replicate'
    BOUNDARY_MODES = ('replicate', 'reflect', 'zero')
    # scipy.ndimage mode names for each boundary rule
    NDIMAGE_MODES = {'replicate': 'nearest', 'reflect': 'reflect', 'zero': 'constant'}
    BACKENDS = ('direct', 'recursive')
    DEFAULT_BACKEND = 'recursive'
    # Below this sigma the 4th-order recursive approximation is poor
    MIN_RECURSIVE_SIGMA = 0.5
    # Fourth-order recursive Gaussian, h(x) = sum of two damped cosines/sines in x / sigma:
    # (a0 cos(w0 x) + a1 sin(w0 x)) exp(-b0 x) + (c0 cos(w1 x) + c1 sin(w1 x)) exp(-b1 x)
    RECURSIVE_A0 = 1.680
    RECURSIVE_A1 = 3.735
    RECURSIVE_B0 = 1.783
    RECURSIVE_W0 = 0.6318
    RECURSIVE_C0 = -0.6803
    RECURSIVE_C1 = -0.2598
    RECURSIVE_B1 = 1.723
    RECURSIVE_W1 = 1.997


class FilterConfig(Config):
    """Config used by the bilateral filters"""
    # Pixels with a denominator at or below this value fall back to the input intensity
    Q_MIN = 1e-8
    CENTERING_MODES = ('mean', 'midpoint')
    DEFAULT_CENTERING = 'mean'
    METHODS = ('exact', 'gpf', 'taylor')


class MetricsConfig(Config):
    # Reported mse_db when two images are identical (below any physical value)
    MSE_DB_FLOOR = -400.0


class PgmConfig(Config):
    MAXVAL = 255
    BINARY_MAGIC = b'P5'
    ASCII_MAGIC = b'P2'
    MAGICS = (BINARY_MAGIC, ASCII_MAGIC)


class BenchConfig(Config):
    REPEATS = 5
    WARMUP = 1
    THREADS = 1
    CSV_COLUMNS = ('method', 'backend', 'sigma_s', 'sigma_r', 'degree', 'pixels', 'repeats', 'median_seconds')
    ACCURACY_COLUMNS = ('method', 'backend', 'sigma_s', 'sigma_r', 'degree', 'mse', 'mse_db', 'max_abs', 'pixels')
    KERNEL_ERROR_COLUMNS = ('tau', 'approx', 'sup_error')


class SyntheticImageConfig(Config):
    """Layout of the built-in synthetic natural image, in units of the image side"""
    # (centre (row, col), radii (row, col), angle) of each bright pepper
    PEPPERS = (((0.30, 0.30), (0.08, 0.11), 0.3),
               ((0.68, 0.35), (0.085, 0.10), 1.2),
               ((0.45, 0.72), (0.075, 0.12), 2.1))
    # Width of the dark shadow rim around each pepper
    PEPPER_RIM = 0.05
    PEPPER_GLOSS = 243
    PEPPER_SHADOW = 12
