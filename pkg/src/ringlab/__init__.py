"""Finite rings, the prime radical, and symmetry-type ring properties."""

from .constructions import (
    ConstructedRing,
    corner_ring,
    direct_product,
    matrix_ring,
    polynomial_quotient_ring,
    pullback_ring,
    rab_truncated,
    ring_zmod,
    sn_ring,
    upper_triangular,
    vn_ring,
)
from .errors import *  # noqa: F403
from .expr import evaluate, evaluate_constructed, parse_expression, to_string
from .radicals import RadicalProfile, radical_profile
from .ring import FiniteRing, Subset, make_ring_from_tables, read_ring, write_ring

__version__ = "0.1.0"
