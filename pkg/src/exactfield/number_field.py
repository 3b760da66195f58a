"""
Number fields Q[x]/(f) with exact element arithmetic and explicit automorphisms
"""

from functools import lru_cache

from sympy import CRootOf, Poly, Symbol, field_isomorphism, primitive_element, sqrt
from sympy.polys.densearith import dmp_mul, dup_add, dup_mul, dup_neg, dup_rem, dup_sub
from sympy.polys.densebasic import dmp_strip, dup_strip
from sympy.polys.densetools import dup_compose
from sympy.polys.domains import QQ
from sympy.polys.euclidtools import dup_invert

from errors import FieldMismatchError, InvalidInputError, InvariantViolation, ReducibleMinpolyError
from .rationals import format_rational, rat, rational_sqrt

X = Symbol('x')
DEFAULT_MAX_DEGREE = 6


def _to_dup(coords):
    """Low-first coordinate vector -> sympy dense (high-first) list"""
    return dup_strip(list(reversed(coords)))


def _from_dup(dup, degree):
    coords = list(reversed(dup))
    return tuple(coords + [QQ(0)] * (degree - len(coords)))


def _sympy_poly(minpoly):
    return Poly([QQ.to_sympy(c) for c in reversed(minpoly)], X)


@lru_cache(maxsize=64)
def _automorphism_images(minpoly):
    """Images of the generator under every automorphism, as low-first coordinate tuples.

    The roots of the minimal polynomial that lie in Q(theta) are located with
    sympy's field_isomorphism against a fixed complex embedding of theta, and
    each candidate is then checked exactly by substitution.
    """
    degree = len(minpoly) - 1
    if degree == 1:
        return ((-minpoly[0],),)

    poly = _sympy_poly(minpoly)
    modulus = _to_dup(minpoly)
    theta = CRootOf(poly, 0)
    images = []
    for j in range(degree):
        root = CRootOf(poly, j)
        coeffs = field_isomorphism(root, theta)
        if coeffs is None:
            continue
        image = _from_dup(dup_strip([QQ.convert(c) for c in coeffs]), degree)
        if dup_rem(dup_compose(modulus, _to_dup(image), QQ), modulus, QQ):
            raise InvariantViolation(f"automorphism candidate {image} is not a root of {minpoly}")
        if image not in images:
            images.append(image)
    return tuple(images)


class NumberField:
    """Q[x]/(minpoly) for a monic irreducible minpoly, with its automorphisms enumerated"""

    def __init__(self, minpoly, label=None, max_degree=DEFAULT_MAX_DEGREE):
        coeffs = tuple(rat(c) for c in minpoly)
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        if len(coeffs) < 2:
            raise InvalidInputError("minimal polynomial must have degree >= 1", 'field.minpoly')
        if coeffs[-1] != 1:
            raise InvalidInputError("minimal polynomial must be monic", 'field.minpoly')
        if max_degree is not None and len(coeffs) - 1 > max_degree:
            raise InvalidInputError(
                f"degree {len(coeffs) - 1} exceeds the supported maximum {max_degree}", 'field.minpoly'
            )

        self.minpoly = coeffs
        self.degree = len(coeffs) - 1
        self.label = label or ('Q' if self.degree == 1 else self.polynomial_text())
        self._modulus = _to_dup(coeffs)

        if self.degree > 1:
            self._check_irreducible()

        self._images = _automorphism_images(coeffs)
        self.automorphisms = [FieldElement(self, image) for image in self._images]
        self._group = None

    def _check_irreducible(self):
        poly = _sympy_poly(self.minpoly)
        if not poly.is_irreducible:
            _, factors = poly.factor_list()
            factor = factors[0][0].as_expr()
            raise ReducibleMinpolyError(self.polynomial_text(), str(factor))

    def polynomial_text(self):
        return str(_sympy_poly(self.minpoly).as_expr())

    def __eq__(self, other):
        return isinstance(other, NumberField) and self.minpoly == other.minpoly

    def __hash__(self):
        return hash(self.minpoly)

    def __repr__(self):
        return f"NumberField({self.label})"

    @property
    def is_rational(self):
        return self.degree == 1

    @property
    def is_galois(self):
        return len(self.automorphisms) == self.degree

    def element(self, value):
        """Build an element from a rational scalar or a coordinate sequence"""
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldMismatchError(f"element of {value.field.label} used in {self.label}")
            return value
        if isinstance(value, (list, tuple)):
            if len(value) != self.degree:
                raise InvalidInputError(f"expected {self.degree} coordinates, got {len(value)}")
            return FieldElement(self, tuple(rat(c) for c in value))
        scalar = rat(value)
        if self.degree == 1:
            return FieldElement(self, (scalar,))
        return FieldElement(self, (scalar,) + (QQ(0),) * (self.degree - 1))

    @property
    def zero(self):
        return self.element(0)

    @property
    def one(self):
        return self.element(1)

    @property
    def gen(self):
        """The generator theta"""
        if self.degree == 1:
            return self.element(-self.minpoly[0])
        return FieldElement(self, (QQ(0), QQ(1)) + (QQ(0),) * (self.degree - 2))

    def apply_automorphism(self, sigma, a):
        """sigma(a), substituting the image of theta into the coordinates of a"""
        a = self.element(a)
        if not 0 <= sigma < len(self._images):
            raise IndexError(f"automorphism index {sigma} out of range for {self.label}")
        if self.degree == 1 or sigma == 0:
            return a
        image = _to_dup(self._images[sigma])
        composed = dup_compose(_to_dup(a.coords), image, QQ)
        return FieldElement(self, _from_dup(dup_rem(composed, self._modulus, QQ), self.degree))

    def poly_mul(self, f, g):
        """Product of two polynomials over the field, given as low-first lists of elements"""
        F = dmp_strip([_to_dup(self.element(c).coords) for c in reversed(f)], 1)
        G = dmp_strip([_to_dup(self.element(c).coords) for c in reversed(g)], 1)
        product = dmp_mul(F, G, 1, QQ)
        return [FieldElement(self, _from_dup(dup_rem(c, self._modulus, QQ), self.degree)) for c in reversed(product)]

    def galois_group(self):
        if self._group is None:
            self._group = GaloisGroup(self)
        return self._group

    def contains_sqrt(self, e):
        """Return sqrt(e) as an element of this field, or None when it does not lie here"""
        e = rat(e)
        root = rational_sqrt(e)
        if root is not None:
            return self.element(root)
        if self.degree == 1:
            return None
        coeffs = field_isomorphism(sqrt(QQ.to_sympy(e)), CRootOf(_sympy_poly(self.minpoly), 0))
        if coeffs is None:
            return None
        root = FieldElement(self, _from_dup(dup_strip([QQ.convert(c) for c in coeffs]), self.degree))
        if root * root != self.element(e):
            raise InvariantViolation(f"sqrt({e}) candidate {root} does not square to {e}")
        return root

    def adjoin_sqrt(self, e):
        """Smallest field containing this one and sqrt(e).

        Returns (L, embedding of self into L, sqrt(e) in L).
        """
        e = rat(e)
        root = self.contains_sqrt(e)
        if root is not None:
            return self, FieldEmbedding(self, self, self.gen), root

        if self.degree == 1:
            target = NumberField([-e, 0, 1], label=f"Q(sqrt({format_rational(e)}))", max_degree=None)
            return target, FieldEmbedding(self, target, target.element(-self.minpoly[0])), target.gen

        generators = [CRootOf(_sympy_poly(self.minpoly), 0), sqrt(QQ.to_sympy(e))]
        g, _, reps = primitive_element(generators, X, ex=True, polys=True)
        high_first = [QQ.convert(c) for c in g.all_coeffs()]
        monic = [c / high_first[0] for c in high_first]
        target = NumberField(
            list(reversed(monic)), label=f"{self.label}(sqrt({format_rational(e)}))", max_degree=None
        )

        def _rep(values):
            return FieldElement(target, _from_dup(dup_strip([QQ.convert(c) for c in values]), target.degree))

        embedding = FieldEmbedding(self, target, _rep(reps[0]))
        root = _rep(reps[1])
        if root * root != target.element(e):
            raise InvariantViolation(f"adjoined sqrt({e}) does not square to {e}")
        return target, embedding, root


class FieldEmbedding:
    """Field homomorphism source -> target given by the image of the source generator"""

    def __init__(self, source, target, image_of_gen):
        self.source = source
        self.target = target
        self.image_of_gen = target.element(image_of_gen)
        if source.degree > 1:
            value = target.zero
            for c in reversed(source.minpoly):
                value = value * self.image_of_gen + target.element(c)
            if not value.is_zero():
                raise InvariantViolation("embedding image is not a root of the source minimal polynomial")

    @property
    def is_identity(self):
        return self.source == self.target and self.image_of_gen == self.target.gen

    def __call__(self, a):
        a = self.source.element(a)
        if self.is_identity:
            return a
        if self.source.degree == 1:
            return self.target.element(a.coords[0])
        result = self.target.zero
        for c in reversed(a.coords):
            result = result * self.image_of_gen + self.target.element(c)
        return result


class FieldElement:
    """Element of a number field, stored as its reduced coordinate vector in 1, theta, ..."""

    __slots__ = ('field', 'coords')

    def __init__(self, field, coords):
        object.__setattr__(self, 'field', field)
        object.__setattr__(self, 'coords', tuple(coords))

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatchError(
                    f"cannot combine elements of {self.field.label} and {other.field.label}"
                )
            return other
        return self.field.element(other)

    def _wrap(self, dup):
        return FieldElement(self.field, _from_dup(dup_rem(dup, self.field._modulus, QQ), self.field.degree))

    def __add__(self, other):
        other = self._coerce(other)
        return FieldElement(self.field, tuple(a + b for a, b in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        return FieldElement(self.field, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return FieldElement(self.field, tuple(-a for a in self.coords))

    def __mul__(self, other):
        other = self._coerce(other)
        return self._wrap(dup_mul(_to_dup(self.coords), _to_dup(other.coords), QQ))

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError(f"division by zero in {self.field.label}")
        if self.field.degree == 1:
            return FieldElement(self.field, (1 / self.coords[0],))
        return self._wrap(dup_invert(_to_dup(self.coords), self.field._modulus, QQ))

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, exponent):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result, base = self.field.one, self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.coords == other.coords
        try:
            return self.coords == self.field.element(other).coords
        except Exception:
            return NotImplemented

    def __hash__(self):
        return hash(self.coords)

    def is_zero(self):
        return not any(self.coords)

    def is_rational(self):
        return not any(self.coords[1:])

    def rational_value(self):
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coords[0]

    def apply(self, sigma):
        return self.field.apply_automorphism(sigma, self)

    def sort_key(self):
        return self.coords

    def __repr__(self):
        if self.field.degree == 1:
            return format_rational(self.coords[0])
        terms = []
        for i, c in enumerate(self.coords):
            if c == 0:
                continue
            power = '' if i == 0 else ('t' if i == 1 else f't^{i}')
            coeff = format_rational(c)
            terms.append(coeff if not power else (power if c == 1 else f"{coeff}*{power}"))
        return ' + '.join(terms) if terms else '0'


def field_construct(minpoly, label=None, max_degree=DEFAULT_MAX_DEGREE):
    """Build the field Q[x]/(minpoly) with all automorphisms enumerated"""
    return NumberField(minpoly, label, max_degree)


class GaloisGroup:
    """Automorphism group of a number field, with its multiplication table.

    Element i acts by theta -> field.automorphisms[i]; index 0 is the identity.
    compose(i, j) is the index of sigma_i o sigma_j.
    """

    def __init__(self, field):
        self.field = field
        self.elements = list(range(len(field.automorphisms)))
        index = {image.coords: i for i, image in enumerate(field.automorphisms)}
        self.table = []
        for i in self.elements:
            row = []
            for j in self.elements:
                image = field.automorphisms[j].apply(i)
                if image.coords not in index:
                    raise InvariantViolation(f"automorphisms of {field.label} are not closed under composition")
                row.append(index[image.coords])
            self.table.append(row)
        if field.automorphisms[0] != field.gen:
            raise InvariantViolation("first automorphism must be the identity")
        self._inverse = {}
        for i in self.elements:
            for j in self.elements:
                if self.table[i][j] == 0:
                    self._inverse[i] = j
        if len(self._inverse) != len(self.elements):
            raise InvariantViolation(f"automorphisms of {field.label} lack inverses")

    identity = 0

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def compose(self, i, j):
        return self.table[i][j]

    def inverse(self, i):
        return self._inverse[i]

    def element_order(self, i):
        order, current = 1, i
        while current != 0:
            current = self.compose(i, current)
            order += 1
        return order

    def stabilizer(self, a):
        """Indices of the automorphisms fixing the element a"""
        return [i for i in self.elements if a.apply(i) == a]
