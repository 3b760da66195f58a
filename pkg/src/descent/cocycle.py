"""
Galois cocycles sigma -> g_sigma of Mobius maps built from branch-divisor matches
"""

from dataclasses import dataclass

from errors import (
    CocycleObstructionError,
    FomNotContainedError,
    InvariantViolation,
    ValidationError,
)
from exactfield import rat
from exactfield.ternary import squarefree_split
from projgeom import Mobius, match_weighted_sets
from serialization import mobius_to_dict


@dataclass(frozen=True)
class GaloisCocycle:
    """g_sigma(a) = sigma(a) on the weighted branch set, with
    g_{sigma tau} = (g_tau)^sigma o g_sigma for all pairs."""
    group: object
    maps: dict
    base: str = 'Q'
    ambiguous: bool = False

    def __getitem__(self, sigma):
        return self.maps[sigma]

    @property
    def field(self):
        return self.group.field

    def relation_holds(self, sigma, tau):
        expected = self.maps[tau].conjugate(sigma).compose(self.maps[sigma])
        return self.maps[self.group.compose(sigma, tau)] == expected

    def is_trivial(self):
        return all(g.is_identity() for g in self.maps.values())

    def verify(self):
        if not self.maps[self.group.identity].is_identity():
            raise InvariantViolation('cocycle value at the identity is not the identity map')
        for sigma in self.group:
            for tau in self.group:
                if not self.relation_holds(sigma, tau):
                    raise InvariantViolation(f"cocycle relation fails at ({sigma}, {tau})")
        return self

    def to_dict(self):
        return {
            'field': self.field.label,
            'base': self.base,
            'ambiguous': self.ambiguous,
            'maps': {str(sigma): mobius_to_dict(g) for sigma, g in sorted(self.maps.items())},
        }


def _consistent(group, assignment, sigma):
    """Check every relation involving sigma whose three entries are assigned"""
    for tau in assignment:
        for first, second in ((sigma, tau), (tau, sigma)):
            product = group.compose(first, second)
            if product not in assignment:
                continue
            expected = assignment[second].conjugate(first).compose(assignment[first])
            if assignment[product] != expected:
                return False
    return True


def _select(group, candidates, limit):
    """Backtracking over per-sigma candidate lists in canonical order"""
    order = [sigma for sigma in group if sigma != group.identity]
    assignment = {group.identity: Mobius.identity(group.field)}
    found = []

    def extend(position):
        if len(found) >= limit:
            return
        if position == len(order):
            found.append(dict(assignment))
            return
        sigma = order[position]
        for g in candidates[sigma]:
            assignment[sigma] = g
            if _consistent(group, assignment, sigma):
                extend(position + 1)
            del assignment[sigma]

    extend(0)
    return found


def compute_cocycle(curve, k='Q', max_selections=2):
    """Select g_sigma among the matches branch -> sigma(branch) satisfying the cocycle relation.

    Raises FomNotContainedError when some sigma has no match at all and
    CocycleObstructionError when no selection is consistent.
    """
    if k != 'Q':
        raise ValidationError('base field', f"only k = Q is supported, got {k}")
    field = curve.field
    if not field.is_galois:
        raise ValidationError('field not Galois', f"{field.label} is not Galois over Q")
    group = field.galois_group()
    candidates = {}
    for sigma in group:
        target = curve.branch.conjugate(sigma)
        matches = []
        if target.weight_multiset() == curve.branch.weight_multiset():
            matches = match_weighted_sets(curve.branch, target)
        if not matches:
            raise FomNotContainedError(sigma, 'branch divisor does not match its conjugate')
        candidates[sigma] = matches
    if Mobius.identity(field) not in candidates[group.identity]:
        raise InvariantViolation('identity map missing from the self-matches of the branch divisor')

    selections = _select(group, candidates, max(1, int(max_selections)))
    if not selections:
        raise CocycleObstructionError('matches exist for every automorphism but none satisfy the cocycle relation')
    return GaloisCocycle(group, selections[0], k, ambiguous=len(selections) > 1).verify()


def cocycle_from_maps(field, maps, k='Q'):
    """Cocycle from explicit values {sigma: Mobius}, verified exhaustively"""
    group = field.galois_group()
    if set(maps) != set(group):
        raise ValidationError('cocycle domain', 'a value is needed for every automorphism')
    return GaloisCocycle(group, dict(maps), k).verify()


def quadratic_discriminant(field):
    """Squarefree d with field = Q(sqrt(d)), for a quadratic field"""
    if field.degree != 2:
        raise ValidationError('quadratic field', f"{field.label} has degree {field.degree}")
    c0, c1, _ = field.minpoly
    disc = rat(c1 * c1 - 4 * c0)
    d, _ = squarefree_split(int(disc.numerator) * int(disc.denominator))
    return d


def lift_scalar(cocycle):
    """c in Q with sigma(A) A = c I for a matrix lift A of g_sigma, sigma generating an order-2 group"""
    group = cocycle.group
    if len(group) != 2:
        raise ValidationError('quadratic group', f"lift scalar needs a group of order 2, got {len(group)}")
    sigma = next(s for s in group if s != group.identity)
    (a, b), (c, d) = cocycle[sigma].rows
    (sa, sb), (sc, sd) = cocycle[sigma].conjugate(sigma).rows
    product = ((sa * a + sb * c, sa * b + sb * d), (sc * a + sd * c, sc * b + sd * d))
    scalar = product[0][0]
    if not (product[0][1].is_zero() and product[1][0].is_zero() and product[1][1] == scalar):
        raise InvariantViolation('sigma(A) A is not a scalar matrix')
    if not scalar.is_rational():
        raise InvariantViolation(f"lift scalar {scalar} is not rational")
    return scalar.rational_value()
