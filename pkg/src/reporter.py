"""
Reporter - Renders command reports as JSON documents or text tables
"""

import os
import sys
from dataclasses import dataclass, field
from datetime import datetime

from tabulate import tabulate

from errors import EXIT_INVALID_INPUT, EXIT_INVARIANT, EXIT_MATH_NEGATIVE, EXIT_OK
from serialization import dump_json

STATUS_OK = 'ok'
STATUS_MATH_NEGATIVE = 'math-negative'
STATUS_INVALID_INPUT = 'invalid-input'
STATUS_INVARIANT = 'internal-invariant-violation'

EXIT_CODES = {
    STATUS_OK: EXIT_OK,
    STATUS_MATH_NEGATIVE: EXIT_MATH_NEGATIVE,
    STATUS_INVALID_INPUT: EXIT_INVALID_INPUT,
    STATUS_INVARIANT: EXIT_INVARIANT,
}

# batch exit code is the most severe per-file status
SEVERITY = [STATUS_OK, STATUS_MATH_NEGATIVE, STATUS_INVALID_INPUT, STATUS_INVARIANT]


@dataclass
class Report:
    command: str
    status: str
    payload: object
    log: list = field(default_factory=list)

    @property
    def exit_code(self):
        return EXIT_CODES[self.status]

    def to_dict(self):
        return {'command': self.command, 'status': self.status, 'payload': self.payload, 'log': self.log}


def _is_batch(payload):
    return isinstance(payload, list) and bool(payload) and isinstance(payload[0], dict) and 'report' in payload[0]


def most_severe(statuses):
    return max(statuses, key=SEVERITY.index, default=STATUS_OK)


class Reporter:
    def __init__(self, config):
        self.config = config
        reporting = config.get('reporting', {}) or {}
        self.format = reporting.get('format', 'json')
        self.save_to_file = reporting.get('save_to_file', False)
        self.output_dir = reporting.get('output_dir', './reports')

        if self.save_to_file:
            os.makedirs(self.output_dir, exist_ok=True)

    def render(self, report):
        """Report text in the configured format"""
        if self.format == 'text':
            return self._render_text(report)
        return dump_json(report.to_dict())

    def emit(self, report, stream=None):
        """Write the report to standard output (one document) and optionally to a file"""
        text = self.render(report)
        (stream or sys.stdout).write(text)
        if self.save_to_file:
            self._save_report(report, text)

    def _render_text(self, report):
        lines = [f"{report.command}: {report.status}", '']
        renderer = getattr(self, f"_text_{report.command}", None)
        payload = report.payload
        if _is_batch(payload):
            lines.append(self._text_batch(payload))
        elif renderer and report.status == STATUS_OK:
            lines.append(renderer(payload))
        else:
            lines.append(self._key_values(payload))
        if report.log:
            lines.extend(['', *report.log])
        return '\n'.join(lines) + '\n'

    def _key_values(self, payload):
        if not isinstance(payload, dict):
            return str(payload)
        rows = [[key, self._cell(value)] for key, value in payload.items()]
        return tabulate(rows, tablefmt='grid')

    def _cell(self, value):
        if isinstance(value, (dict, list)):
            return dump_json(value).strip()
        return '' if value is None else str(value)

    def _text_gallery(self, payload):
        headers = ['Shape', 'Equation', 'Field', 'p', 'm', 'Genus', 'Unique', 'Reason', '|Aut|']
        rows = [[
            entry['tag'],
            entry['equation'],
            entry['field'],
            entry['p'],
            entry['m'],
            entry['genus'],
            entry['classification']['unique'],
            entry['classification']['reason'],
            entry['annotations'].get('automorphism_group_order', ''),
        ] for entry in payload]
        return tabulate(rows, headers=headers, tablefmt='grid')

    def _text_isom(self, payload):
        headers = ['t', 'Mobius rows']
        rows = [[item['t'], self._cell(item['mobius']['rows'])] for item in payload['maps']]
        return tabulate(rows, headers=headers, tablefmt='grid')

    def _text_character(self, payload):
        headers = ['sigma', 't(sigma)']
        rows = [[sigma, t] for sigma, t in payload['values'].items()]
        summary = (f"image order {payload['image_order']}, kernel {payload['kernel']}, "
                   f"unit subgroup {payload['unit_subgroup']}")
        return tabulate(rows, headers=headers, tablefmt='grid') + '\n' + summary

    def _text_cocycle(self, payload):
        headers = ['sigma', 'g_sigma rows']
        rows = [[sigma, self._cell(g['rows'])] for sigma, g in payload['maps'].items()]
        note = '\nseveral consistent selections exist' if payload['ambiguous'] else ''
        return tabulate(rows, headers=headers, tablefmt='grid') + note

    def _text_batch(self, payload):
        headers = ['File', 'Status', 'Summary']
        rows = []
        for item in payload:
            inner = item['report']['payload']
            summary = ''
            if isinstance(inner, dict):
                summary = inner.get('variant') or inner.get('message') or ''
            rows.append([item['file'], item['report']['status'], summary])
        return tabulate(rows, headers=headers, tablefmt='grid')

    def _save_report(self, report, text):
        timestamp = datetime.now().strftime('%Y%m%d_%H%M%S')
        extension = 'txt' if self.format == 'text' else 'json'
        path = os.path.join(self.output_dir, f"{report.command}_report_{timestamp}.{extension}")
        with open(path, 'w', encoding='utf-8') as f:
            f.write(text)
        print(f"✅ Report saved to: {path}", file=sys.stderr)
