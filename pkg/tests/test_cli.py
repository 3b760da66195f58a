import json
import os

import pytest

from curve import PgonalCurve
from errors import InvalidInputError
from main import load_config, main
from projgeom import Mobius
from serialization import dump_curve, parse_curve_file


def _run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_classify_exceptional_klein_shape(capsys):
    code, report = _run(capsys, 'classify', '--p', '7', '--m', '3')
    assert code == 0
    assert report['status'] == 'ok'
    assert report['payload']['unique'] is False
    assert report['payload']['reason'] == 'exceptional-(3,7)'
    assert report['payload']['genus'] == 3


def test_classify_invalid_prime(capsys):
    code, report = _run(capsys, 'classify', '--p', '4', '--m', '5')
    assert code == 2
    assert report['status'] == 'invalid-input'
    assert report['payload']['constraint'] == 'p not prime'


def test_genus_of_bring_curve(capsys, curve_file, bring_document):
    code, report = _run(capsys, 'genus', curve_file(bring_document))
    assert code == 0
    assert report['payload'] == {'p': 5, 'm': 4, 'genus': 4}


def test_missing_multiplicity_is_located(capsys, curve_file, bring_document):
    del bring_document['branch'][1]['mult']
    code, report = _run(capsys, 'validate', curve_file(bring_document))
    assert code == 2
    assert report['payload']['path'] == 'branch[1].mult'


def test_weight_zero_is_out_of_range(capsys, curve_file, klein_document):
    klein_document['branch'][0]['mult'] = 0
    code, report = _run(capsys, 'validate', curve_file(klein_document))
    assert code == 2
    assert report['payload']['constraint'] == 'weight out of range'


def test_reducible_minpoly_is_invalid_input(capsys, curve_file, bring_document):
    bring_document['field']['minpoly'] = ['-1', '0', '1']
    code, report = _run(capsys, 'validate', curve_file(bring_document))
    assert code == 2
    assert report['payload']['error'] == 'ReducibleMinpolyError'


def test_malformed_json_reports_line_and_column(capsys, curve_file):
    path = curve_file('{"p": 7,\n "field": }')
    code, report = _run(capsys, 'validate', path)
    assert code == 2
    assert report['payload']['path'].startswith(f"{path}:2:")


def test_missing_curve_file(capsys, tmp_path):
    code, report = _run(capsys, 'genus', str(tmp_path / 'absent.json'))
    assert code == 2
    assert report['status'] == 'invalid-input'


def test_canonical_round_trip_is_byte_identical(curve_file, bring_document):
    curve = parse_curve_file(curve_file(bring_document))
    text = dump_curve(curve)
    again = parse_curve_file(curve_file(text, 'canonical.json'))
    assert again == curve
    assert dump_curve(again) == text


def test_projective_point_syntax(curve_file, klein_document):
    klein_document['branch'][2]['point'] = [['1'], ['0']]
    klein_document['branch'][1]['point'] = [['3'], ['3']]
    curve = parse_curve_file(curve_file(klein_document))
    assert curve.branch.weights == [2, 1, 4]


def test_validate_reports_affine_polynomial(capsys, curve_file, klein_document):
    code, report = _run(capsys, 'validate', curve_file(klein_document))
    assert code == 0
    assert report['payload']['genus'] == 3
    assert report['payload']['affine_polynomial'] == [['0'], ['0'], ['-1'], ['1']]


def test_isom_finds_the_coordinate_change(capsys, curve_file, klein_curve):
    g = Mobius.from_rows(((2, 1), (1, 1)), klein_curve.field)
    moved = PgonalCurve(7, klein_curve.branch.map(g))
    first = curve_file(dump_curve(klein_curve), 'first.json')
    second = curve_file(dump_curve(moved), 'second.json')
    code, report = _run(capsys, 'isom', first, second)
    assert code == 0
    assert report['payload']['isomorphic'] is True
    assert {'t': 1, 'mobius': {'field': 'Q', 'rows': [[['1'], ['1/2']], [['1/2'], ['1/2']]]}} in report['payload']['maps']


def test_isom_non_isomorphic_is_math_negative(capsys, curve_file, build_curve, klein_curve):
    Q = klein_curve.field
    first = build_curve(3, Q, [(0, 1), (1, 1), (2, 1), ('inf', 1), (5, 2)])
    second = build_curve(3, Q, [(0, 1), (1, 1), (3, 1), ('inf', 1), (5, 2)])
    code, report = _run(capsys, 'isom', curve_file(dump_curve(first), 'a.json'), curve_file(dump_curve(second), 'b.json'))
    assert code == 10
    assert report['status'] == 'math-negative'
    assert report['payload'] == {'isomorphic': False, 'maps': []}


def test_character_command(capsys, curve_file, character_curve):
    code, report = _run(capsys, 'character', curve_file(dump_curve(character_curve)))
    assert code == 0
    assert report['payload']['values'] == {'0': 1, '1': 6}
    assert report['payload']['k1_degree'] == 2


def test_cocycle_command(capsys, curve_file, obstruction_curve):
    code, report = _run(capsys, 'cocycle', curve_file(dump_curve(obstruction_curve)))
    assert code == 0
    assert report['payload']['maps']['1']['rows'] == [[['0', '0'], ['1', '0']], [['-1', '0'], ['0', '0']]]


def test_descend_exit_codes(capsys, curve_file, obstruction_curve, fom_curve):
    code, report = _run(capsys, 'descend', curve_file(dump_curve(obstruction_curve), 'obstruction.json'))
    assert code == 0
    assert report['payload']['variant'] == 'quadratic-model'
    assert report['payload']['field']['disc'] == '-1'

    code, report = _run(capsys, 'descend', curve_file(dump_curve(fom_curve), 'fom.json'))
    assert code == 10
    assert report['payload']['variant'] == 'fom-obstruction'


def test_gallery_command(capsys):
    code, report = _run(capsys, 'gallery')
    assert code == 0
    assert [entry['genus'] for entry in report['payload']] == [3, 2, 4, 3, 6, 4]


def test_text_format(capsys):
    code = main(['classify', '--p', '3', '--m', '9', '--format', 'text'])
    out = capsys.readouterr().out
    assert code == 0
    assert out.startswith('classify: ok')
    assert 'castelnuovo-severi' in out


def test_corpus_then_batch_descend(capsys, tmp_path):
    directory = str(tmp_path / 'corpus')
    code, report = _run(capsys, 'corpus', directory, '--size', '3', '--seed', '5')
    assert code == 0
    assert report['payload']['files'] == ['curve_000.json', 'curve_001.json', 'curve_002.json']
    assert sorted(os.listdir(directory)) == report['payload']['files']

    code, report = _run(capsys, 'descend', directory)
    assert code == 0
    assert [item['file'] for item in report['payload']] == ['curve_000.json', 'curve_001.json', 'curve_002.json']
    statuses = [item['report']['status'] for item in report['payload']]
    assert statuses == ['ok', 'ok', 'ok']


def test_batch_reports_the_most_severe_status(capsys, tmp_path, klein_document):
    directory = tmp_path / 'mixed'
    directory.mkdir()
    (directory / 'a.json').write_text(json.dumps(klein_document), encoding='utf-8')
    klein_document['p'] = 6
    (directory / 'b.json').write_text(json.dumps(klein_document), encoding='utf-8')
    code, report = _run(capsys, 'validate', str(directory))
    assert code == 2
    assert [item['file'] for item in report['payload']] == ['a.json', 'b.json']
    assert [item['report']['status'] for item in report['payload']] == ['ok', 'invalid-input']


def test_explicit_missing_config_is_invalid_input(capsys, tmp_path):
    code, report = _run(capsys, 'gallery', '--config', str(tmp_path / 'none.yaml'))
    assert code == 2
    assert report['status'] == 'invalid-input'


def test_load_config_layers_over_defaults(tmp_path):
    path = tmp_path / 'config.yaml'
    path.write_text('conic:\n  height_bound: 40\n', encoding='utf-8')
    config = load_config(str(path))
    assert config['conic'] == {'strategy': 'descent', 'height_bound': 40}
    assert config['cocycle']['max_selections'] == 2

    path.write_text('- not a mapping\n', encoding='utf-8')
    with pytest.raises(InvalidInputError):
        load_config(str(path))
