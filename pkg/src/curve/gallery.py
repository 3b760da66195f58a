"""
The six exceptional (m, p) shapes where the cyclic p-gonal group need not be unique,
each instantiated as a concrete curve over its natural field
"""

from dataclasses import dataclass, field as dc_field

from exactfield import field_construct, rational_field
from projgeom import ProjPoint
from .pgonal_curve import curve_validate
from .uniqueness import uniqueness_classify

GAUSSIAN_MINPOLY = ('1', '0', '1')
SQRT3_SQRTM2_MINPOLY = ('25', '0', '-2', '0', '1')
CYCLOTOMIC5_MINPOLY = ('1', '1', '1', '1', '1')
CYCLOTOMIC3_MINPOLY = ('1', '1', '1')


@dataclass(frozen=True)
class GalleryEntry:
    tag: str
    curve: object
    expected_genus: int
    equation: str
    annotations: dict = dc_field(default_factory=dict)

    def to_dict(self):
        verdict = uniqueness_classify(self.curve.p, self.curve.m)
        return {
            'tag': self.tag,
            'equation': self.equation,
            'p': self.curve.p,
            'm': self.curve.m,
            'field': self.curve.fieldlabel,
            'genus': self.curve.genus(),
            'expected_genus': self.expected_genus,
            'classification': verdict.to_dict(),
            'annotations': self.annotations,
        }


def _curve(p, field, points):
    return curve_validate(p, [(point if isinstance(point, ProjPoint) else ProjPoint(field.element(point)), n)
                              for point, n in points])


def klein_quartic():
    Q = rational_field()
    curve = _curve(7, Q, [(0, 2), (1, 1), (ProjPoint.infinity(Q), 4)])
    return GalleryEntry('(3,7)', curve, 3, 'y^7 = x^2 (x - 1)',
                        {'automorphism_group_order': 168, 'signature': '(0;2,3,7)'})


def genus_two_trigonal():
    K = field_construct(SQRT3_SQRTM2_MINPOLY, 'Q(sqrt(3), sqrt(-2))')
    theta = K.gen
    sqrt_m2 = (theta ** 3 + 3 * theta) / 10
    sqrt3 = theta - sqrt_m2
    r = sqrt_m2 * (3 * sqrt3 - 5) / 2
    curve = _curve(3, K, [(1, 1), (-1, 1), (r, 2), (-r, 2)])
    return GalleryEntry('(4,3)', curve, 2, 'y^3 = (x^2 - 1)(x^2 - 15 sqrt(3) + 26)^2',
                        {'automorphism_group_order': 48, 'signature': '(0;2,4,6)'})


def bring_curve():
    K = field_construct(GAUSSIAN_MINPOLY, 'Q(i)')
    i = K.gen
    curve = _curve(5, K, [(1, 1), (-1, 1), (i, 4), (-i, 4)])
    return GalleryEntry('(4,5)', curve, 4, 'y^5 = (x^2 - 1)(x^2 + 1)^4',
                        {'automorphism_group_order': 120, 'signature': '(0;2,4,5)'})


def trigonal_genus_three():
    K = field_construct(GAUSSIAN_MINPOLY, 'Q(i)')
    i = K.gen
    curve = _curve(3, K, [(0, 2), (1, 1), (-1, 1), (i, 1), (-i, 1)])
    return GalleryEntry('(5,3)', curve, 3, 'y^3 = x^2 (x^4 - 1)',
                        {'automorphism_group_order': 48, 'signature': '(0;2,3,12)'})


def fermat_curve(p=5):
    if p != 5:
        raise ValueError('the Fermat fixture is instantiated at p = 5 only')
    K = field_construct(CYCLOTOMIC5_MINPOLY, 'Q(zeta5)')
    zeta = K.gen
    curve = _curve(5, K, [(-(zeta ** k), 1) for k in range(5)])
    return GalleryEntry('(p,p)', curve, 6, 'y^5 = -1 - x^5',
                        {'automorphism_group_order': 6 * p * p, 'signature': f"(0;2,3,{2 * p})"})


def two_p_family(p=3, a=2):
    if p != 3:
        raise ValueError('the (2p,p) fixture is instantiated at p = 3 only')
    K = field_construct(CYCLOTOMIC3_MINPOLY, 'Q(zeta3)')
    omega = K.gen
    roots = [a * omega ** k for k in range(3)] + [omega ** k / a for k in range(3)]
    curve = _curve(3, K, [(root, 1) for root in roots])
    return GalleryEntry('(2p,p)', curve, 4, f"y^3 = (x^3 - {a}^3)(x^3 - 1/{a}^3)",
                        {'automorphism_group_order': 4 * p * p, 'signature': f"(0;2,2,2,{p})"})


def gallery():
    return [
        klein_quartic(),
        genus_two_trigonal(),
        bring_curve(),
        trigonal_genus_three(),
        fermat_curve(),
        two_p_family(),
    ]
