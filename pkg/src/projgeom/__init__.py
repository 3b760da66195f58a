"""
The projective line over a number field: points, Mobius maps, weighted sets, binary quadratics
"""

from .points import ProjPoint, WeightedPointSet
from .mobius import Mobius, mobius_apply, mobius_through_triples
from .matching import check_match_contract, maps_onto, match_weighted_sets
from .quadratics import BinaryQuadratic, quadratic_twisted_action

__all__ = [
    'ProjPoint', 'WeightedPointSet',
    'Mobius', 'mobius_apply', 'mobius_through_triples',
    'match_weighted_sets', 'maps_onto', 'check_match_contract',
    'BinaryQuadratic', 'quadratic_twisted_action',
]
