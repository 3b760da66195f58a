"""
The power character sigma -> t(sigma) with phi^sigma = phi^t(sigma)
"""

from dataclasses import dataclass, field as dc_field

from errors import FomNotContainedError, InvariantViolation, ValidationError
from projgeom import match_weighted_sets


@dataclass(frozen=True)
class PowerCharacter:
    """Values of the power character on Gal(K/Q).

    valid_units[sigma] is the full coset of units admitting a match; values
    holds the smallest one. unit_subgroup is the coset of the identity.
    """
    p: int
    group: object
    values: dict
    valid_units: dict = dc_field(repr=False)

    @property
    def unit_subgroup(self):
        return self.valid_units[self.group.identity]

    @property
    def kernel(self):
        return [sigma for sigma in self.group if 1 in self.valid_units[sigma]]

    @property
    def image_order(self):
        return len({self.valid_units[sigma] for sigma in self.group})

    @property
    def k1_degree(self):
        return self.image_order

    def is_trivial(self):
        return self.image_order == 1

    def to_dict(self):
        return {
            'p': self.p,
            'values': {str(sigma): t for sigma, t in sorted(self.values.items())},
            'unit_subgroup': sorted(self.unit_subgroup),
            'kernel': self.kernel,
            'image_order': self.image_order,
            'k1_degree': self.k1_degree,
        }


def _units_matching(curve, sigma):
    target = curve.branch.conjugate(sigma)
    units = []
    for t in range(1, curve.p):
        source = curve.branch.scale_weights(t)
        if source.weight_multiset() != target.weight_multiset():
            continue
        if match_weighted_sets(source, target):
            units.append(t)
    return frozenset(units)


def power_character(curve, k='Q'):
    """Compute t(sigma) for every automorphism of the curve's field over k.

    Raises FomNotContainedError when some sigma admits no unit at all.
    """
    if k != 'Q':
        raise ValidationError('base field', f"only k = Q is supported, got {k}")
    if not curve.field.is_galois:
        raise ValidationError('field not Galois', f"{curve.fieldlabel} is not Galois over Q")
    group = curve.field.galois_group()
    valid = {}
    for sigma in group:
        units = _units_matching(curve, sigma)
        if not units:
            raise FomNotContainedError(sigma, 'no unit t admits a matching map')
        valid[sigma] = units
    p = curve.p
    for sigma in group:
        for tau in group:
            product = (min(valid[sigma]) * min(valid[tau])) % p
            if product not in valid[group.compose(sigma, tau)]:
                raise InvariantViolation(f"power character is not multiplicative at ({sigma}, {tau})")
    character = PowerCharacter(p, group, {sigma: min(units) for sigma, units in valid.items()}, valid)
    if (p - 1) % character.image_order:
        raise InvariantViolation(f"character image order {character.image_order} does not divide {p - 1}")
    return character
