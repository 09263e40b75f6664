"""Exact Riesz bounds of exponential systems and their closed-form lower bounds."""

try:
    from ._rieszbounds import *  # packaged wheel layout
    from ._rieszbounds import __all__, __version__
except ImportError:  # build-tree layout: extension sits next to the package
    from _rieszbounds import *
    from _rieszbounds import __all__, __version__
