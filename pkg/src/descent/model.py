"""
From a point on the descended conic to a model y^p = q(x) over Q or Q(sqrt(e))
"""

from dataclasses import dataclass, field as dc_field
from typing import Optional

from errors import InvariantViolation
from exactfield import FieldEmbedding, format_rational, linear_solve
from curve import PgonalCurve, branch_polynomial
from projgeom import BinaryQuadratic, Mobius, ProjPoint, WeightedPointSet
from serialization import mobius_to_dict

RATIONAL_MODEL = 'rational-model'
QUADRATIC_MODEL = 'quadratic-model'
FOM_OBSTRUCTION = 'fom-obstruction'
CHARACTER_BOUND = 'character-bound'


@dataclass
class DescentOutcome:
    """Result of descending a curve to Q.

    model holds q(x) low-first: rationals for a rational model, (r, s)
    pairs meaning r + s*sqrt(e) for a quadratic model. witness is the Mobius
    map over `field` sending the input branch divisor onto the model's.
    """
    variant: str
    p: int
    model: Optional[list] = None
    witness: Optional[Mobius] = None
    field: object = None
    extension_disc: Optional[int] = None
    obstruction: object = None
    model_curve: Optional[PgonalCurve] = None
    embedding: Optional[FieldEmbedding] = None
    conic: object = None
    cocycle: object = None
    character: object = None
    reason: Optional[str] = None
    details: dict = dc_field(default_factory=dict)

    @property
    def degree(self):
        """Degree over Q of the field the model is defined over"""
        if self.variant == RATIONAL_MODEL:
            return 1
        if self.variant == QUADRATIC_MODEL:
            return 2
        return None

    @property
    def is_model(self):
        return self.variant in (RATIONAL_MODEL, QUADRATIC_MODEL)

    def to_dict(self):
        if self.variant == QUADRATIC_MODEL:
            e = str(self.extension_disc)
            model_field = {'label': f"Q(sqrt({e}))", 'minpoly': [str(-self.extension_disc), '0', '1'], 'disc': e}
            model = [[format_rational(r), format_rational(s)] for r, s in self.model]
        elif self.variant == RATIONAL_MODEL:
            model_field = {'label': 'Q', 'minpoly': 'Q', 'disc': None}
            model = [format_rational(c) for c in self.model]
        else:
            model_field, model = None, None
        result = {
            'variant': self.variant,
            'p': self.p,
            'field': model_field,
            'model': model,
            'witness': mobius_to_dict(self.witness) if self.witness is not None else None,
            'obstruction': self.obstruction.to_dict() if self.obstruction is not None else None,
        }
        if self.conic is not None:
            result['conic'] = self.conic.to_dict()
        if self.cocycle is not None:
            result['ambiguous_cocycle'] = self.cocycle.ambiguous
        if self.character is not None:
            result['character'] = self.character.to_dict()
        if self.reason:
            result['reason'] = self.reason
        result.update(self.details)
        return result


def remove_common_root(first, second):
    """Write first = l * (a1 x + b1 y), second = l * (a2 x + b2 y) for their common linear factor l.

    Returns the rows ((a1, b1), (a2, b2)).
    """
    f0, f1, f2 = first.coefficients
    h0, h1, h2 = second.coefficients
    rows = []
    if f0.is_zero() and h0.is_zero():
        # common factor y
        for quadric in (first, second):
            _, q1, q2 = quadric.coefficients
            rows.append((q1, q2))
        return tuple(rows)

    # at y = 1, h0 * first - f0 * second is linear and vanishes at the common root
    linear = h0 * f1 - f0 * h1
    constant = h0 * f2 - f0 * h2
    if linear.is_zero():
        raise InvariantViolation('pencil quadrics do not share exactly one root')
    root = -constant / linear
    for quadric in (first, second):
        q0, q1, q2 = quadric.coefficients
        alpha, beta = q0, q1 + root * q0
        if not (q2 + root * beta).is_zero():
            raise InvariantViolation('division by the common linear factor left a remainder')
        rows.append((alpha, beta))
    return tuple(rows)


def _point_in(field, point, sqrt_e):
    """Coordinates of a rational or quadratic conic point inside `field`"""
    if sqrt_e is None:
        return [field.element(v) for v in point]
    return [field.element(r) + field.element(s) * sqrt_e for r, s in point]


def _automorphism_restrictions(field, embedding):
    """For each automorphism tau of `field`, the index sigma of its restriction to the source field"""
    source = embedding.source
    if embedding.is_identity:
        return {tau: tau for tau in field.galois_group()}
    images = {embedding(image).coords: sigma for sigma, image in enumerate(source.automorphisms)}
    gen = embedding.image_of_gen
    restrictions = {}
    for tau in field.galois_group():
        key = gen.apply(tau).coords
        if key not in images:
            raise InvariantViolation(f"automorphism {tau} of {field.label} does not preserve the embedded field")
        restrictions[tau] = images[key]
    return restrictions


def _coefficient_in_k2(value, sqrt_e, mover):
    """(r, s) with value = r + s*sqrt(e); mover is an automorphism sending sqrt(e) to -sqrt(e)"""
    conjugate = value.apply(mover)
    r = (value + conjugate) / 2
    s = (value - conjugate) / (2 * sqrt_e)
    if not (r.is_rational() and s.is_rational()):
        raise InvariantViolation(f"model coefficient {value} does not lie in Q(sqrt(e))")
    return r.rational_value(), s.rational_value()


def parametrize_and_model(curve, cocycle, conic, point_result):
    """Build Phi = rho o psi from the conic point and expand q(x) = prod (x - Phi(a_j))^n_j.

    psi = (N1 : N2 : N3) maps P^1 onto the conic, rho projects from the point.
    Phi^tau o g_tau = Phi is verified for every tau fixing the model field.
    """
    K = curve.field
    if point_result.has_rational_point:
        field, embedding, sqrt_e, e = K, FieldEmbedding(K, K, K.gen), None, None
        point = point_result.point
        quad = None
    else:
        quad = point_result.quadratic_point
        e = quad.e
        field, embedding, sqrt_e = K.adjoin_sqrt(e)
        point = quad.coords

    P0 = _point_in(field, point, sqrt_e)
    lines = linear_solve([P0]).kernel
    if len(lines) != 2:
        raise InvariantViolation('projection point does not determine a pencil of lines')

    normal = [q.embed(embedding) for q in conic.normal_quadrics]
    pencil = []
    for line in lines:
        total = normal[0].scale(line[0])
        for coefficient, q in zip(line[1:], normal[1:]):
            total = total + q.scale(coefficient)
        pencil.append(total)
    (a1, b1), (a2, b2) = remove_common_root(*pencil)
    phi = Mobius(a1, b1, a2, b2)

    restrictions = _automorphism_restrictions(field, embedding)
    if sqrt_e is None:
        stabilizer = list(field.galois_group())
    else:
        stabilizer = field.galois_group().stabilizer(sqrt_e)
    for tau in stabilizer:
        g = cocycle[restrictions[tau]].embed(embedding)
        if phi.conjugate(tau).compose(g) != phi:
            raise InvariantViolation(f"witness identity fails at automorphism {tau}")

    source = curve.branch.embed(embedding)
    image = WeightedPointSet([(phi.apply(point), weight) for point, weight in source], curve.p)
    for tau in stabilizer:
        if image.conjugate(tau) != image:
            raise InvariantViolation(f"model branch divisor is not stable under automorphism {tau}")
    model_curve = PgonalCurve(curve.p, image)
    q = branch_polynomial(image)

    if sqrt_e is None:
        if not all(c.is_rational() for c in q):
            raise InvariantViolation('model coefficients are not rational')
        model = [c.rational_value() for c in q]
        variant = RATIONAL_MODEL
    else:
        mover = next(tau for tau in field.galois_group() if sqrt_e.apply(tau) == -sqrt_e)
        model = [_coefficient_in_k2(c, sqrt_e, mover) for c in q]
        variant = QUADRATIC_MODEL
        if all(s == 0 for _, s in model):
            # q is rational although the witness needs sqrt(e)
            model = [r for r, _ in model]
            variant = RATIONAL_MODEL
            e = None

    return DescentOutcome(
        variant=variant,
        p=curve.p,
        model=model,
        witness=phi,
        field=field,
        extension_disc=e,
        obstruction=point_result.obstruction,
        model_curve=model_curve,
        embedding=embedding,
        conic=conic,
        cocycle=cocycle,
        details={'point': quad.to_dict() if quad else [format_rational(v) for v in point]},
    )
