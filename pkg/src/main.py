"""
Main entry point for the cyclic p-gonal descent toolkit
"""

import argparse
import copy
import os
import sys
from dataclasses import dataclass, field

import yaml

from batch import BatchRunner
from corpus import CorpusGenerator
from curve import gallery, isomorphic_as_pgonal, power_character, uniqueness_classify
from descent import DescentEngine, compute_cocycle
from errors import InvalidInputError, PgonalError
from reporter import (
    STATUS_INVALID_INPUT,
    STATUS_INVARIANT,
    STATUS_MATH_NEGATIVE,
    STATUS_OK,
    Report,
    Reporter,
)
from serialization import curve_to_dict, element_to_list, mobius_to_dict, parse_curve_file, report_error

DEFAULT_CONFIG = {
    'fields': {'max_degree': 6},
    'conic': {'strategy': 'descent', 'height_bound': None},
    'cocycle': {'max_selections': 2},
    'reporting': {'format': 'json', 'verbose': True, 'save_to_file': False, 'output_dir': './reports'},
    'batch': {'workers': 1},
    'corpus': {'seed': 0, 'size': 50, 'discriminants': [-1, 2, 3, 5], 'primes': [2, 3, 5],
               'max_points': 6, 'coordinate_bound': 9},
}

FILE_COMMANDS = ('validate', 'genus', 'character', 'cocycle', 'descend')


@dataclass
class JobSpec:
    command: str
    inputs: list = field(default_factory=list)
    options: dict = field(default_factory=dict)


def _merge(base, override):
    merged = copy.deepcopy(base)
    for key, value in (override or {}).items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _merge(merged[key], value)
        else:
            merged[key] = value
    return merged


def load_config(config_file='config.yaml', required=True):
    """Load configuration from YAML file, layered over the defaults"""
    try:
        with open(config_file, 'r') as f:
            config = yaml.safe_load(f)
    except FileNotFoundError:
        if required:
            raise InvalidInputError(f"configuration file '{config_file}' not found", config_file)
        return copy.deepcopy(DEFAULT_CONFIG)
    except yaml.YAMLError as e:
        raise InvalidInputError(f"invalid YAML in configuration file: {e}", config_file)
    if config is not None and not isinstance(config, dict):
        raise InvalidInputError('configuration must be a mapping', config_file)
    return _merge(DEFAULT_CONFIG, config)


def _max_degree(config):
    return config['fields']['max_degree']


def _read(path, config):
    return parse_curve_file(path, _max_degree(config))


def _validate(job, config):
    curve = _read(job.inputs[0], config)
    payload = {
        'curve': curve_to_dict(curve),
        'p': curve.p,
        'm': curve.m,
        'genus': curve.genus(),
        'affine_polynomial': [element_to_list(c) for c in curve.affine_polynomial()],
    }
    return STATUS_OK, payload, [f"✅ Valid p={curve.p} curve over {curve.fieldlabel}"]


def _genus(job, config):
    curve = _read(job.inputs[0], config)
    return STATUS_OK, {'p': curve.p, 'm': curve.m, 'genus': curve.genus()}, []


def _isom(job, config):
    first, second = (_read(path, config) for path in job.inputs)
    maps = isomorphic_as_pgonal(first, second)
    payload = {
        'isomorphic': bool(maps),
        'maps': [{'t': t, 'mobius': mobius_to_dict(g)} for t, g in maps],
    }
    if not maps:
        return STATUS_MATH_NEGATIVE, payload, ['⚠️  Not isomorphic as p-gonal curves']
    return STATUS_OK, payload, [f"✅ {len(maps)} isomorphisms found"]


def _character(job, config):
    curve = _read(job.inputs[0], config)
    character = power_character(curve)
    return STATUS_OK, character.to_dict(), [f"✅ [k1:k] = {character.k1_degree}"]


def _cocycle(job, config):
    curve = _read(job.inputs[0], config)
    cocycle = compute_cocycle(curve, 'Q', config['cocycle']['max_selections'])
    log = [f"✅ Cocycle verified on a group of order {len(cocycle.group)}"]
    if cocycle.ambiguous:
        log.append('⚠️  Several relation-consistent cocycles exist')
    return STATUS_OK, cocycle.to_dict(), log


def _descend(job, config):
    curve = _read(job.inputs[0], config)
    engine = DescentEngine(config)
    outcome = engine.descend(curve)
    status = STATUS_OK if outcome.is_model else STATUS_MATH_NEGATIVE
    return status, outcome.to_dict(), list(engine.log)


def _classify(job, config):
    p, m = job.options['p'], job.options['m']
    verdict = uniqueness_classify(p, m)
    payload = {'p': p, 'm': m, 'genus': (m - 2) * (p - 1) // 2, **verdict.to_dict()}
    return STATUS_OK, payload, []


def _gallery(job, config):
    entries = [entry.to_dict() for entry in gallery()]
    return STATUS_OK, entries, [f"✅ {len(entries)} exceptional fixtures"]


def _corpus(job, config):
    generator = CorpusGenerator(config)
    paths = generator.write(job.inputs[0], job.options.get('size'))
    payload = {'directory': job.inputs[0], 'seed': generator.seed, 'files': [os.path.basename(p) for p in paths]}
    return STATUS_OK, payload, []


HANDLERS = {
    'validate': _validate,
    'genus': _genus,
    'isom': _isom,
    'character': _character,
    'cocycle': _cocycle,
    'descend': _descend,
    'classify': _classify,
    'gallery': _gallery,
    'corpus': _corpus,
}


def run(job, config):
    """Dispatch one job; errors become reports, never crashes"""
    try:
        status, payload, log = HANDLERS[job.command](job, config)
        return Report(job.command, status, payload, log)
    except PgonalError as e:
        return Report(job.command, e.status, report_error(e), [f"❌ {e}"])
    except Exception as e:
        return Report(job.command, STATUS_INVARIANT, {'error': type(e).__name__, 'message': str(e)},
                      [f"❌ Unexpected error: {e}"])


def run_job(job, config):
    """Like run, but a directory input becomes a batch over its curve files"""
    if job.command in FILE_COMMANDS and job.inputs and os.path.isdir(job.inputs[0]):
        return BatchRunner(config).run(
            job.command,
            job.inputs[0],
            lambda path, job_config: run(JobSpec(job.command, [path], job.options), job_config),
        )
    return run(job, config)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--config', help='Path to configuration file (default: config.yaml)')
    common.add_argument('--format', choices=['json', 'text'], help='Output format (overrides config.yaml)')
    common.add_argument('--height-bound', type=int, help='Cap for the conic point search (overrides config.yaml)')
    common.add_argument('--seed', type=int, help='Seed for corpus generation (overrides config.yaml)')

    parser = argparse.ArgumentParser(
        description='Cyclic p-gonal descent toolkit - fields of moduli, cocycles and models over Q'
    )
    commands = parser.add_subparsers(dest='command', required=True)

    for name, text in (
        ('validate', 'Validate a curve file'),
        ('genus', 'Genus of a curve'),
        ('character', 'Power character of the p-gonal automorphism'),
        ('cocycle', 'Galois cocycle of Mobius maps'),
        ('descend', 'Descend a curve to Q or a quadratic extension'),
    ):
        sub = commands.add_parser(name, help=text, parents=[common])
        sub.add_argument('file', help='Curve file, or a directory of curve files')

    isom = commands.add_parser('isom', help='Isomorphisms between two curves as p-gonal curves', parents=[common])
    isom.add_argument('file1')
    isom.add_argument('file2')

    classify = commands.add_parser('classify', help='Is the p-gonal group unique for (p, m)?', parents=[common])
    classify.add_argument('--p', type=int, required=True)
    classify.add_argument('--m', type=int, required=True)

    commands.add_parser('gallery', help='The six exceptional fixtures', parents=[common])

    corpus = commands.add_parser('corpus', help='Write a random corpus of twisted curves', parents=[common])
    corpus.add_argument('directory')
    corpus.add_argument('--size', type=int, help='Number of curves (overrides config.yaml)')
    return parser


def _job(args):
    if args.command in FILE_COMMANDS:
        return JobSpec(args.command, [args.file])
    if args.command == 'isom':
        return JobSpec('isom', [args.file1, args.file2])
    if args.command == 'classify':
        return JobSpec('classify', options={'p': args.p, 'm': args.m})
    if args.command == 'corpus':
        return JobSpec('corpus', [args.directory], {'size': args.size})
    return JobSpec(args.command)


def main(argv=None):
    """Main function"""
    args = build_parser().parse_args(argv)

    try:
        if args.config:
            config = load_config(args.config)
        else:
            config = load_config('config.yaml', required=False)
    except InvalidInputError as e:
        report = Report(args.command, STATUS_INVALID_INPUT, report_error(e), [f"❌ Error: {e}"])
        Reporter(DEFAULT_CONFIG).emit(report)
        return report.exit_code

    # Override config with CLI arguments
    if args.format:
        config['reporting']['format'] = args.format
    if args.height_bound is not None:
        config['conic']['height_bound'] = args.height_bound
    if args.seed is not None:
        config['corpus']['seed'] = args.seed

    report = run_job(_job(args), config)
    Reporter(config).emit(report)
    return report.exit_code


if __name__ == '__main__':
    sys.exit(main())
