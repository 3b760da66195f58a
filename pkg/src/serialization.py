"""
Curve file format and JSON views of field elements, points and Mobius maps.

A curve file is one JSON document:
    {"p": 7,
     "field": {"minpoly": ["0", "1"], "label": "Q"},
     "branch": [{"point": ["0"], "mult": 2}, {"point": "inf", "mult": 4}]}
Minimal polynomials and points are coordinate lists low degree first,
rationals written "n" or "n/d".
"""

import json

from curve import curve_validate
from errors import InvalidInputError, PgonalError
from exactfield import NumberField, format_rational, parse_rational
from exactfield.number_field import DEFAULT_MAX_DEGREE
from projgeom import ProjPoint


def element_to_list(element):
    return [format_rational(c) for c in element.coords]


def field_to_dict(field):
    return {'minpoly': [format_rational(c) for c in field.minpoly], 'label': field.label}


def point_to_json(point):
    return 'inf' if point.is_infinity else element_to_list(point.u)


def mobius_to_dict(g):
    return {
        'field': g.field.label,
        'rows': [[element_to_list(entry) for entry in row] for row in g.rows],
    }


def curve_to_dict(curve):
    return {
        'p': curve.p,
        'field': field_to_dict(curve.field),
        'branch': [{'point': point_to_json(point), 'mult': weight} for point, weight in curve.branch],
    }


def dump_json(document):
    return json.dumps(document, indent=2) + '\n'


def dump_curve(curve):
    return dump_json(curve_to_dict(curve))


def _require(data, key, path):
    if not isinstance(data, dict):
        raise InvalidInputError('expected an object', path or '$')
    if key not in data:
        raise InvalidInputError(f"missing field {key!r}", f"{path}.{key}" if path else key)
    return data[key]


def _coordinate_list(value, path):
    if not isinstance(value, list) or not value:
        raise InvalidInputError('expected a non-empty list of rational strings', path)
    for i, c in enumerate(value):
        if isinstance(c, bool) or not isinstance(c, (str, int)):
            raise InvalidInputError(f"expected a rational, got {c!r}", f"{path}[{i}]")
        try:
            parse_rational(str(c))
        except InvalidInputError as e:
            raise InvalidInputError(str(e), f"{path}[{i}]")
    return [str(c) for c in value]


def parse_field(data, max_degree=DEFAULT_MAX_DEGREE):
    minpoly = _coordinate_list(_require(data, 'minpoly', 'field'), 'field.minpoly')
    label = data.get('label')
    if label is not None and not isinstance(label, str):
        raise InvalidInputError('label must be a string', 'field.label')
    try:
        return NumberField(minpoly, label, max_degree)
    except InvalidInputError as e:
        if e.path or type(e) is not InvalidInputError:
            raise
        raise InvalidInputError(str(e), 'field.minpoly')


def parse_point(value, field, path):
    if value == 'inf':
        return ProjPoint.infinity(field)
    if isinstance(value, list) and value and all(isinstance(c, list) for c in value):
        if len(value) != 2:
            raise InvalidInputError('projective point needs two coordinates', path)
        u = field.element(_coordinate_list(value[0], f"{path}[0]"))
        v = field.element(_coordinate_list(value[1], f"{path}[1]"))
        return ProjPoint(u, v)
    coords = _coordinate_list(value, path)
    if len(coords) != field.degree:
        raise InvalidInputError(f"expected {field.degree} coordinates, got {len(coords)}", path)
    return ProjPoint(field.element(coords))


def parse_curve(data, max_degree=DEFAULT_MAX_DEGREE):
    """Build and validate a curve from its decoded JSON document"""
    p = _require(data, 'p', '')
    if isinstance(p, bool) or not isinstance(p, int):
        raise InvalidInputError(f"expected an integer, got {p!r}", 'p')
    field = parse_field(_require(data, 'field', ''), max_degree)
    branch = _require(data, 'branch', '')
    if not isinstance(branch, list):
        raise InvalidInputError('expected a list of branch points', 'branch')

    entries = []
    for i, item in enumerate(branch):
        path = f"branch[{i}]"
        point = parse_point(_require(item, 'point', path), field, f"{path}.point")
        mult = _require(item, 'mult', path)
        if isinstance(mult, bool) or not isinstance(mult, int):
            raise InvalidInputError(f"expected an integer, got {mult!r}", f"{path}.mult")
        entries.append((point, mult))
    return curve_validate(p, entries)


def parse_curve_text(text, max_degree=DEFAULT_MAX_DEGREE, source='<input>'):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise InvalidInputError(f"malformed JSON: {e.msg}", f"{source}:{e.lineno}:{e.colno}")
    return parse_curve(data, max_degree)


def parse_curve_file(path_or_stream, max_degree=DEFAULT_MAX_DEGREE):
    """Read one curve from a path or an open text stream"""
    if hasattr(path_or_stream, 'read'):
        return parse_curve_text(path_or_stream.read(), max_degree, getattr(path_or_stream, 'name', '<stream>'))
    try:
        with open(path_or_stream, encoding='utf-8') as f:
            text = f.read()
    except OSError as e:
        raise InvalidInputError(f"cannot read curve file: {e.strerror}", str(path_or_stream))
    except UnicodeDecodeError:
        raise InvalidInputError('curve file is not UTF-8 text', str(path_or_stream))
    return parse_curve_text(text, max_degree, str(path_or_stream))


def report_error(error):
    """JSON view of a PgonalError"""
    result = {'error': type(error).__name__, 'message': str(error)}
    if isinstance(error, PgonalError) and getattr(error, 'path', None):
        result['path'] = error.path
    if hasattr(error, 'constraint'):
        result['constraint'] = error.constraint
    return result
