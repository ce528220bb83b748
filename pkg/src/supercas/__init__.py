"""Exact-arithmetic checks for the split Casimir operator of osp(M|N) and sl(M|N)."""

from .casimir_engine import AlgebraError, LieSuperalgebra, OperatorBundle
from .osp_algebra import build_osp
from .sl_algebra import build_sl
from .superlinalg import GradedSpace, Q, SuperMatrix
from .vogel_universal import vogel_params

__version__ = "0.1.0"

__all__ = [
    "AlgebraError",
    "GradedSpace",
    "LieSuperalgebra",
    "OperatorBundle",
    "Q",
    "SuperMatrix",
    "build_osp",
    "build_sl",
    "vogel_params",
]
