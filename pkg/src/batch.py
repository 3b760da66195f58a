"""
Batch Runner - Runs one command over every curve file of a directory
"""

import copy
import glob
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from reporter import Report, most_severe


def curve_files(directory):
    return sorted(glob.glob(os.path.join(directory, '*.json')))


class BatchRunner:
    def __init__(self, config):
        self.config = config
        batch = config.get('batch', {}) or {}
        reporting = config.get('reporting', {}) or {}

        self.workers = max(1, int(batch.get('workers', 1) or 1))
        self.verbose = reporting.get('verbose', True)

        # per-file jobs stay quiet; the batch prints one line per file
        self.job_config = copy.deepcopy(config)
        self.job_config.setdefault('reporting', {})['verbose'] = False

    def _say(self, message):
        if self.verbose:
            print(message, file=sys.stderr)

    def run(self, command, directory, job):
        """Apply job(path, config) -> Report to every *.json file; results in file order"""
        paths = curve_files(directory)
        self._say(f"🔍 Running {command} on {len(paths)} files in {directory} ({self.workers} workers)...")

        if self.workers == 1:
            reports = [job(path, self.job_config) for path in paths]
        else:
            with ThreadPoolExecutor(max_workers=self.workers) as pool:
                reports = list(pool.map(lambda path: job(path, self.job_config), paths))

        items = []
        log = []
        for path, report in zip(paths, reports):
            name = os.path.basename(path)
            icon = '✅' if report.status == 'ok' else ('⚠️ ' if report.status == 'math-negative' else '❌')
            line = f"   {icon} {name}: {report.status}"
            self._say(line)
            log.append(line)
            items.append({'file': name, 'report': report.to_dict()})

        status = most_severe(report.status for report in reports)
        self._say(f"✅ Processed {len(paths)} files, overall status {status}\n")
        return Report(command, status, items, log)
