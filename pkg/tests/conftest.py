import json

import pytest

from curve import curve_validate
from exactfield import field_construct, rational_field
from projgeom import ProjPoint


def make_curve(p, field, entries):
    """Curve from [(value or 'inf', weight), ...]; values are field elements or rationals"""
    branch = []
    for value, weight in entries:
        if value == 'inf':
            branch.append((ProjPoint.infinity(field), weight))
        else:
            branch.append((ProjPoint(field.element(value)), weight))
    return curve_validate(p, branch)


@pytest.fixture
def build_curve():
    return make_curve


@pytest.fixture
def gaussian():
    return field_construct(['1', '0', '1'], 'Q(i)')


@pytest.fixture
def sqrt2_field():
    return field_construct(['-2', '0', '1'], 'Q(sqrt(2))')


@pytest.fixture
def klein_curve():
    return make_curve(7, rational_field(), [(0, 2), (1, 1), ('inf', 4)])


@pytest.fixture
def obstruction_curve(gaussian):
    """Hyperelliptic curve over Q(i) whose cocycle is x -> -1/x; its conic has no real point"""
    i = gaussian.gen
    values = []
    for a, norm in ((1 + i, 2), (2 + i, 5), (1 + 3 * i, 10)):
        values.extend([a, -a / norm])
    return make_curve(2, gaussian, [(value, 1) for value in values])


@pytest.fixture
def character_curve(gaussian):
    """p = 7 over Q(i): conjugation acts on the branch divisor as the weight scaling by 6"""
    i = gaussian.gen
    return make_curve(7, gaussian, [(i, 1), (-i, 6), (1 + i, 2), (1 - i, 5), (2 + i, 3), (2 - i, 4)])


@pytest.fixture
def fom_curve(gaussian):
    """p = 3 over Q(i) whose branch divisor matches no conjugate: field of moduli is Q(i)"""
    i = gaussian.gen
    return make_curve(3, gaussian, [(0, 1), (1, 1), ('inf', 1), (i, 1), (2, 2)])


@pytest.fixture
def translated_curve(sqrt2_field):
    """x -> x + sqrt(2) applied to the rational divisor {0: 1, 1: 2, 3: 3, inf: 4}, p = 5"""
    theta = sqrt2_field.gen
    return make_curve(5, sqrt2_field, [(theta, 1), (1 + theta, 2), (3 + theta, 3), ('inf', 4)])


@pytest.fixture
def curve_file(tmp_path):
    def write(document, name='curve.json'):
        path = tmp_path / name
        text = document if isinstance(document, str) else json.dumps(document)
        path.write_text(text, encoding='utf-8')
        return str(path)
    return write


BRING_DOCUMENT = {
    'p': 5,
    'field': {'minpoly': ['1', '0', '1'], 'label': 'Q(i)'},
    'branch': [
        {'point': ['1', '0'], 'mult': 1},
        {'point': ['-1', '0'], 'mult': 1},
        {'point': ['0', '1'], 'mult': 4},
        {'point': ['0', '-1'], 'mult': 4},
    ],
}

KLEIN_DOCUMENT = {
    'p': 7,
    'field': {'minpoly': ['0', '1'], 'label': 'Q'},
    'branch': [
        {'point': ['0'], 'mult': 2},
        {'point': ['1'], 'mult': 1},
        {'point': 'inf', 'mult': 4},
    ],
}


@pytest.fixture
def bring_document():
    return json.loads(json.dumps(BRING_DOCUMENT))


@pytest.fixture
def klein_document():
    return json.loads(json.dumps(KLEIN_DOCUMENT))
