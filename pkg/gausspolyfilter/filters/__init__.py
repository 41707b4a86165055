from gausspolyfilter.configs import FilterConfig, SpatialConfig
from gausspolyfilter.models.exceptions import InvalidParameterException

from .exact import ExactBilateralFilter, exact_bilateral
from .gpf import GaussPolynomialFilter, GpfState, gpf, gpf_states
from .taylor import TaylorBilateralFilter, taylor_bilateral


def make_filter(method, img, spatial, range_params, backend=SpatialConfig.DEFAULT_BACKEND,
                centering=FilterConfig.DEFAULT_CENTERING, threads=1):
    """Builds the bilateral filter object for ``method`` ('exact', 'gpf' or 'taylor'); the backend is ignored by
    the exact filter and the centring mode by all but GPF"""
    if method == 'exact':
        return ExactBilateralFilter(img, spatial, range_params, threads=threads)
    if method == 'gpf':
        return GaussPolynomialFilter(img, spatial, range_params, backend=backend, centering=centering,
                                     threads=threads)
    if method == 'taylor':
        return TaylorBilateralFilter(img, spatial, range_params, backend=backend, threads=threads)
    raise InvalidParameterException('method', f'must be one of {", ".join(FilterConfig.METHODS)}, got {method!r}')
