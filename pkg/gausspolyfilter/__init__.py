# -*- coding: utf-8 -*-
"""
gausspolyfilter
===============
Constant-time Gaussian bilateral filtering of grayscale images using Gauss-polynomial approximations of the
translated range kernel, together with an exact reference filter, a Taylor-polynomial baseline, two spatial Gaussian
backends and a benchmark harness.
"""
import logging

__version__ = '1.0.0'

logging.getLogger('gpf').addHandler(logging.NullHandler())
