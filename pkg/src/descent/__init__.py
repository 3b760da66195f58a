"""
Explicit descent of cyclic p-gonal curves to Q through Galois cocycles and conics
"""

from exactfield import conic_point
from .cocycle import GaloisCocycle, cocycle_from_maps, compute_cocycle, lift_scalar, quadratic_discriminant
from .conic import DescendedConic, descend_to_conic, find_conic_point, invariant_quadrics, quadric_relation
from .model import (
    CHARACTER_BOUND,
    FOM_OBSTRUCTION,
    QUADRATIC_MODEL,
    RATIONAL_MODEL,
    DescentOutcome,
    parametrize_and_model,
)
from .engine import DescentEngine, descend

__all__ = [
    'GaloisCocycle', 'compute_cocycle', 'cocycle_from_maps', 'lift_scalar', 'quadratic_discriminant',
    'DescendedConic', 'descend_to_conic', 'invariant_quadrics', 'quadric_relation', 'find_conic_point',
    'conic_point',
    'DescentOutcome', 'parametrize_and_model',
    'RATIONAL_MODEL', 'QUADRATIC_MODEL', 'FOM_OBSTRUCTION', 'CHARACTER_BOUND',
    'DescentEngine', 'descend',
]
