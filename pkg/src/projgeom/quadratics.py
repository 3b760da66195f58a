"""
Binary quadratic forms q0 x^2 + q1 xy + q2 y^2 and the twisted Galois action on them
"""

from errors import FieldMismatchError, SingularMatrixError
from .mobius import Mobius


class BinaryQuadratic:
    __slots__ = ('coefficients',)

    def __init__(self, q0, q1, q2):
        if not (q0.field == q1.field == q2.field):
            raise FieldMismatchError('quadratic coefficients over different fields')
        object.__setattr__(self, 'coefficients', (q0, q1, q2))

    def __setattr__(self, name, value):
        raise AttributeError("BinaryQuadratic is immutable")

    @classmethod
    def from_values(cls, values, field):
        return cls(*(field.element(v) for v in values))

    @property
    def field(self):
        return self.coefficients[0].field

    def is_zero(self):
        return all(q.is_zero() for q in self.coefficients)

    def __add__(self, other):
        return BinaryQuadratic(*(a + b for a, b in zip(self.coefficients, other.coefficients)))

    def __sub__(self, other):
        return BinaryQuadratic(*(a - b for a, b in zip(self.coefficients, other.coefficients)))

    def scale(self, factor):
        return BinaryQuadratic(*(q * factor for q in self.coefficients))

    def conjugate(self, sigma):
        return BinaryQuadratic(*(q.apply(sigma) for q in self.coefficients))

    def embed(self, embedding):
        return BinaryQuadratic(*(embedding(q) for q in self.coefficients))

    def evaluate(self, x, y):
        q0, q1, q2 = self.coefficients
        return q0 * x * x + q1 * x * y + q2 * y * y

    def substitute(self, rows):
        """Q o A, where A(x, y) = (a x + b y, c x + d y)"""
        (a, b), (c, d) = rows
        q0, q1, q2 = self.coefficients
        return BinaryQuadratic(
            q0 * a * a + q1 * a * c + q2 * c * c,
            2 * q0 * a * b + q1 * (a * d + b * c) + 2 * q2 * c * d,
            q0 * b * b + q1 * b * d + q2 * d * d,
        )

    def times(self, other):
        """Coefficients (x^4, x^3 y, ..., y^4) of the product quartic"""
        p0, p1, p2 = self.coefficients
        r0, r1, r2 = other.coefficients
        return (
            p0 * r0,
            p0 * r1 + p1 * r0,
            p0 * r2 + p1 * r1 + p2 * r0,
            p1 * r2 + p2 * r1,
            p2 * r2,
        )

    def __eq__(self, other):
        return isinstance(other, BinaryQuadratic) and self.coefficients == other.coefficients

    def __hash__(self):
        return hash(tuple(q.coords for q in self.coefficients))

    def __repr__(self):
        q0, q1, q2 = self.coefficients
        return f"({q0})x^2 + ({q1})xy + ({q2})y^2"


def _rows(A):
    if isinstance(A, Mobius):
        return A.rows
    return tuple(tuple(row) for row in A)


def quadratic_twisted_action(sigma, A, Q):
    """det(A) * (sigma(Q) o A^-1).

    Rescaling A by a scalar leaves the result unchanged, so the rule is well
    defined on Mobius maps.
    """
    (a, b), (c, d) = _rows(A)
    det = a * d - b * c
    if det.is_zero():
        raise SingularMatrixError('twisted action needs an invertible matrix')
    inverse = ((d / det, -b / det), (-c / det, a / det))
    return Q.conjugate(sigma).substitute(inverse).scale(det)
