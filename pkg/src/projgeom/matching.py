"""
Matching weighted point sets by Mobius transformations
"""

from itertools import permutations

from errors import MatchContractError
from .mobius import mobius_through_triples


def maps_onto(g, source, target):
    """True when g sends every weighted point of source onto a point of target of equal weight"""
    for point, weight in source:
        if target.weight_of(g.apply(point)) != weight:
            return False
    return True


def check_match_contract(source, target):
    if len(source) != len(target):
        raise MatchContractError(f"sets of size {len(source)} and {len(target)} cannot match")
    if len(source) < 3:
        raise MatchContractError(f"matching needs at least 3 points, got {len(source)}")
    if source.weight_multiset() != target.weight_multiset():
        raise MatchContractError('weight multisets differ')
    if source.field != target.field:
        raise MatchContractError(f"sets over {source.field.label} and {target.field.label}")


def match_weighted_sets(source, target):
    """All Mobius maps g with g(source) = target as weighted sets, sorted canonically.

    The first three points of source (canonical order) are sent to every
    ordered triple of target points with the same weights; each candidate is
    checked on the whole set.
    """
    check_match_contract(source, target)
    anchor = source.entries[:3]
    src = [point for point, _ in anchor]
    found = {}
    for images in permutations(target.entries, 3):
        if any(w != img_w for (_, w), (_, img_w) in zip(anchor, images)):
            continue
        g = mobius_through_triples(src, [point for point, _ in images])
        if g not in found and maps_onto(g, source, target):
            found[g] = None
    return sorted(found, key=lambda g: g.sort_key())
