"""Exact Hankel determinants for lattice-path counting sequences.

Everything is exact arithmetic: rationals, rational functions in the
H-step weight t, and rational functions in the series variable x.
"""

from .hankel import det_exact, det_sequence, detect_period, hankel_matrix
from .pathcount import (ITConfig, PathParams, delannoy_matrix, f_dp_oracle,
                        f_series, lgv_signed_sum, paths_weight)
from .polyx import Poly, RatSeries
from .scalars import RatFunc, T, scalar_parse, scalar_str
from .transform import (FactorChain, QuadFE, QuadraticForm, apply_T,
                        canonicalize, fe_equal, orbit, series_of_fe,
                        shift_out, split_u)

__all__ = [
    "det_exact", "det_sequence", "detect_period", "hankel_matrix",
    "ITConfig", "PathParams", "delannoy_matrix", "f_dp_oracle", "f_series",
    "lgv_signed_sum", "paths_weight",
    "Poly", "RatSeries",
    "RatFunc", "T", "scalar_parse", "scalar_str",
    "FactorChain", "QuadFE", "QuadraticForm", "apply_T", "canonicalize",
    "fe_equal", "orbit", "series_of_fe", "shift_out", "split_u",
]

__version__ = "0.1.0"
