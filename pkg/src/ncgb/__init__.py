"""Noncommutative Groebner bases through the extended letterplace correspondence."""

from .coeff import ParamRing, Scalar, param_ring
from .corpus import Presentation, example
from .engine import EngineConfig, GBResult, free_gbasis, hfree_gbasis
from .errors import InconsistentIdealError, ParseError
from .freealg import FreePoly, dehomogenize, homogenize
from .letterplace import LPPoly, psi_star
from .ordering import OrderingSpec

__all__ = [
    "ParamRing",
    "Scalar",
    "param_ring",
    "Presentation",
    "example",
    "EngineConfig",
    "GBResult",
    "free_gbasis",
    "hfree_gbasis",
    "InconsistentIdealError",
    "ParseError",
    "FreePoly",
    "homogenize",
    "dehomogenize",
    "LPPoly",
    "psi_star",
    "OrderingSpec",
]
