"""Semantic discord detection for univariate time series.

Thin re-export of the C++ extension. Library indices are 0-based;
intervals written to files by the CLI are 1-based inclusive.
"""

try:
    from ._semdis import *  # noqa: F401,F403  (installed package layout)
    from ._semdis import __version__  # noqa: F401
except ImportError:  # in-tree build: the module sits next to the package on sys.path
    from _semdis import *  # noqa: F401,F403
    from _semdis import __version__  # noqa: F401

__all__ = [
    "detect",
    "classic_discord",
    "calibrate_epsilon",
    "znorm_dist",
    "overlapping_rate",
    "random_walk",
    "generate_bump_series",
    "generate_concat_series",
    "FlatWindowError",
    "EmptyResultError",
    "CalibrationError",
    "GenerationError",
]
