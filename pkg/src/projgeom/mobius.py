"""
Mobius transformations: projective 2x2 matrices over a number field
"""

from errors import DegenerateInputError, FieldMismatchError, SingularMatrixError
from .points import ProjPoint


class Mobius:
    """x -> (a x + b) / (c x + d), stored with its first nonzero entry scaled to 1"""

    __slots__ = ('entries',)

    def __init__(self, a, b, c, d):
        entries = (a, b, c, d)
        field = a.field
        if any(e.field != field for e in entries):
            raise FieldMismatchError('Mobius entries over different fields')
        if (a * d - b * c).is_zero():
            raise SingularMatrixError(f"singular matrix (({a}, {b}), ({c}, {d}))")
        lead = next(e for e in entries if not e.is_zero())
        inv = lead.inverse()
        object.__setattr__(self, 'entries', tuple(e * inv for e in entries))

    def __setattr__(self, name, value):
        raise AttributeError("Mobius is immutable")

    @classmethod
    def from_rows(cls, rows, field):
        (a, b), (c, d) = rows
        return cls(*(field.element(v) for v in (a, b, c, d)))

    @classmethod
    def identity(cls, field):
        return cls(field.one, field.zero, field.zero, field.one)

    @property
    def field(self):
        return self.entries[0].field

    @property
    def rows(self):
        a, b, c, d = self.entries
        return ((a, b), (c, d))

    def det(self):
        a, b, c, d = self.entries
        return a * d - b * c

    def is_identity(self):
        a, b, c, d = self.entries
        return b.is_zero() and c.is_zero() and a == d

    def apply(self, point):
        if point.field != self.field:
            raise FieldMismatchError(f"point over {point.field.label}, map over {self.field.label}")
        a, b, c, d = self.entries
        return ProjPoint(a * point.u + b * point.v, c * point.u + d * point.v)

    def compose(self, other):
        """self o other"""
        a, b, c, d = self.entries
        e, f, g, h = other.entries
        return Mobius(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)

    def __matmul__(self, other):
        return self.compose(other)

    def inverse(self):
        a, b, c, d = self.entries
        return Mobius(d, -b, -c, a)

    def conjugate(self, sigma):
        """g^sigma: sigma applied to the matrix entries"""
        return Mobius(*(e.apply(sigma) for e in self.entries))

    def embed(self, embedding):
        return Mobius(*(embedding(e) for e in self.entries))

    def sort_key(self):
        return tuple(e.coords for e in self.entries)

    def __eq__(self, other):
        return isinstance(other, Mobius) and self.entries == other.entries

    def __hash__(self):
        return hash(tuple(e.coords for e in self.entries))

    def __repr__(self):
        a, b, c, d = self.entries
        return f"Mobius(({a}, {b}), ({c}, {d}))"


def mobius_apply(g, point):
    return g.apply(point)


def _from_standard(p1, p2, p3):
    """The map sending 0, 1, infinity to p1, p2, p3"""
    denom = p3.u * p1.v - p1.u * p3.v
    lam = (p2.u * p1.v - p1.u * p2.v) / denom
    mu = (p3.u * p2.v - p2.u * p3.v) / denom
    # columns: image of infinity = lam * p3, image of 0 = mu * p1
    return Mobius(lam * p3.u, mu * p1.u, lam * p3.v, mu * p1.v)


def mobius_through_triples(src, dst):
    """The unique Mobius map sending src[i] to dst[i] for i = 0, 1, 2"""
    for triple in (src, dst):
        if len(triple) != 3 or len(set(triple)) != 3:
            raise DegenerateInputError(f"triple {triple} must consist of three distinct points")
    return _from_standard(*dst).compose(_from_standard(*src).inverse())
