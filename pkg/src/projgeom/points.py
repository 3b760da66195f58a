"""
Points of the projective line over a number field and weighted point sets
"""

from collections import Counter

from errors import FieldMismatchError, ValidationError


class ProjPoint:
    """(u : v) in canonical form: v = 1, or (1 : 0) for infinity"""

    __slots__ = ('u', 'v')

    def __init__(self, u, v=None):
        if v is None:
            v = u.field.one
        if u.field != v.field:
            raise FieldMismatchError(f"point coordinates in {u.field.label} and {v.field.label}")
        if u.is_zero() and v.is_zero():
            raise ValidationError('point (0 : 0) is not projective')
        if v.is_zero():
            u, v = u.field.one, u.field.zero
        else:
            u, v = u / v, u.field.one
        object.__setattr__(self, 'u', u)
        object.__setattr__(self, 'v', v)

    def __setattr__(self, name, value):
        raise AttributeError("ProjPoint is immutable")

    @classmethod
    def infinity(cls, field):
        return cls(field.one, field.zero)

    @classmethod
    def finite(cls, value, field=None):
        if field is not None:
            value = field.element(value)
        return cls(value)

    @property
    def field(self):
        return self.u.field

    @property
    def is_infinity(self):
        return self.v.is_zero()

    @property
    def value(self):
        """Affine coordinate; None at infinity"""
        return None if self.is_infinity else self.u

    def apply(self, sigma):
        if self.is_infinity:
            return self
        return ProjPoint(self.u.apply(sigma))

    def embed(self, embedding):
        if self.is_infinity:
            return ProjPoint.infinity(embedding.target)
        return ProjPoint(embedding(self.u))

    def sort_key(self):
        # lexicographic on coordinates, infinity last
        return (1, ()) if self.is_infinity else (0, self.u.coords)

    def __eq__(self, other):
        return isinstance(other, ProjPoint) and self.u == other.u and self.v == other.v

    def __hash__(self):
        return hash((self.u.coords, self.v.coords))

    def __repr__(self):
        return 'inf' if self.is_infinity else repr(self.u)


class WeightedPointSet:
    """Distinct points of P^1 with weights in {1, ..., p-1}, kept in canonical order"""

    def __init__(self, entries, prime):
        self.prime = int(prime)
        items = [(point, int(weight)) for point, weight in entries]
        for point, weight in items:
            if not 1 <= weight <= self.prime - 1:
                raise ValidationError('weight out of range', f"weight {weight} not in 1..{self.prime - 1}")
        if len({point for point, _ in items}) != len(items):
            raise ValidationError('points pairwise distinct', 'a branch point is repeated')
        fields = {point.field for point, _ in items}
        if len(fields) > 1:
            raise FieldMismatchError('weighted set mixes points over different fields')
        self.entries = tuple(sorted(items, key=lambda item: item[0].sort_key()))
        self._weights = dict(self.entries)

    @property
    def field(self):
        return self.entries[0][0].field

    @property
    def points(self):
        return [point for point, _ in self.entries]

    @property
    def weights(self):
        return [weight for _, weight in self.entries]

    def weight_of(self, point):
        return self._weights.get(point)

    def weight_multiset(self):
        return Counter(self.weights)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __contains__(self, point):
        return point in self._weights

    def __eq__(self, other):
        return isinstance(other, WeightedPointSet) and self.prime == other.prime and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return '{' + ', '.join(f"({point!r}, {weight})" for point, weight in self.entries) + '}'

    def scale_weights(self, t):
        """Multiply every weight by the unit t mod p"""
        return WeightedPointSet([(point, (weight * t) % self.prime) for point, weight in self.entries], self.prime)

    def conjugate(self, sigma):
        return WeightedPointSet([(point.apply(sigma), weight) for point, weight in self.entries], self.prime)

    def map(self, mobius):
        return WeightedPointSet([(mobius.apply(point), weight) for point, weight in self.entries], self.prime)

    def embed(self, embedding):
        return WeightedPointSet([(point.embed(embedding), weight) for point, weight in self.entries], self.prime)
