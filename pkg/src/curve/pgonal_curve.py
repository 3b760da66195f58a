"""
Cyclic p-gonal curves y^p = prod (x - a_j)^{n_j}, stored as a weighted branch divisor
"""

from sympy import isprime

from errors import FieldMismatchError, ValidationError
from projgeom import ProjPoint, WeightedPointSet, match_weighted_sets


def polynomial_multiply(f, g):
    """Product of two low-first coefficient lists of field elements"""
    return f[0].field.poly_mul(f, g)


def branch_polynomial(branch):
    """prod over finite branch points of (x - a)^n, infinity dropped"""
    field = branch.field
    poly = [field.one]
    for point, weight in branch:
        if point.is_infinity:
            continue
        factor = [-point.u, field.one]
        for _ in range(weight):
            poly = polynomial_multiply(poly, factor)
    return poly


class PgonalCurve:
    """A validated cyclic p-gonal curve over a number field.

    The point at infinity, when branched, is stored explicitly with its weight
    so the full divisor always satisfies sum(n_j) = 0 mod p.
    """

    def __init__(self, p, branch):
        self.p = int(p)
        self.branch = branch

    @classmethod
    def from_affine(cls, p, roots, field):
        """Curve of y^p = prod (x - a)^n for roots [(a, n), ...]; adds infinity when needed"""
        p = int(p)
        entries = [(ProjPoint(field.element(a)), int(n)) for a, n in roots]
        total = sum(n for _, n in entries) % p
        if total:
            entries.append((ProjPoint.infinity(field), p - total))
        return curve_validate(p, entries)

    @property
    def field(self):
        return self.branch.field

    @property
    def fieldlabel(self):
        return self.field.label

    @property
    def m(self):
        return len(self.branch)

    def genus(self):
        return (self.m - 2) * (self.p - 1) // 2

    def conjugate(self, sigma):
        return PgonalCurve(self.p, self.branch.conjugate(sigma))

    def embed(self, embedding):
        return PgonalCurve(self.p, self.branch.embed(embedding))

    def affine_polynomial(self):
        return branch_polynomial(self.branch)

    def __eq__(self, other):
        return isinstance(other, PgonalCurve) and self.p == other.p and self.branch == other.branch

    def __hash__(self):
        return hash((self.p, self.branch))

    def __repr__(self):
        return f"PgonalCurve(p={self.p}, field={self.fieldlabel}, branch={self.branch!r})"


def curve_validate(p, branch):
    """Build a PgonalCurve, raising ValidationError naming the violated constraint"""
    p = int(p)
    if not isprime(p):
        raise ValidationError('p not prime', f"p = {p}")
    if not isinstance(branch, WeightedPointSet):
        branch = WeightedPointSet(branch, p)
    elif branch.prime != p:
        raise ValidationError('weight out of range', f"weights given modulo {branch.prime}, curve has p = {p}")
    m = len(branch)
    if m < 3:
        raise ValidationError('m < 3', f"only {m} branch points")
    total = sum(branch.weights)
    if total % p:
        raise ValidationError('congruence failure', f"sum of weights {total} is not 0 mod {p}")
    genus = (m - 2) * (p - 1) // 2
    if genus < 2:
        raise ValidationError('genus < 2', f"genus {genus}")
    return PgonalCurve(p, branch)


def genus(curve):
    return curve.genus()


def conjugate_curve(curve, sigma):
    return curve.conjugate(sigma)


def isomorphic_as_pgonal(c1, c2):
    """All (t, g) with g a Mobius map sending the branch divisor of c1, weights
    multiplied by the unit t, onto the branch divisor of c2"""
    if c1.p != c2.p:
        raise ValidationError('p mismatch', f"p = {c1.p} vs p = {c2.p}")
    if c1.field != c2.field:
        raise FieldMismatchError(f"curves over {c1.fieldlabel} and {c2.fieldlabel}")
    if c1.m != c2.m:
        return []
    results = []
    target_weights = c2.branch.weight_multiset()
    for t in range(1, c1.p):
        source = c1.branch.scale_weights(t)
        if source.weight_multiset() != target_weights:
            continue
        results.extend((t, g) for g in match_weighted_sets(source, c2.branch))
    return results
