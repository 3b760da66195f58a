"""
Corpus Generator - Random curves over Q(sqrt(d)) obtained by twisting rational
branch divisors with a Mobius map; every such curve descends to Q
"""

import os
import sys
from dataclasses import dataclass

import numpy as np

from curve import PgonalCurve, curve_validate
from errors import SingularMatrixError
from exactfield import FieldEmbedding, field_construct, rational_field
from projgeom import Mobius, ProjPoint, WeightedPointSet
from serialization import dump_curve


@dataclass(frozen=True)
class TwistedCurve:
    """curve = twist applied to rational_curve, embedded in Q(sqrt(d))"""
    name: str
    curve: PgonalCurve
    rational_curve: PgonalCurve
    twist: Mobius
    d: int


def quadratic_field(d):
    return field_construct([str(-d), '0', '1'], f"Q(sqrt({d}))")


class CorpusGenerator:
    def __init__(self, config):
        self.config = config
        corpus = config.get('corpus', {}) or {}

        self.seed = corpus.get('seed', 0)
        self.size = corpus.get('size', 50)
        self.discriminants = corpus.get('discriminants', [-1, 2, 3, 5])
        self.primes = corpus.get('primes', [2, 3, 5])
        self.max_points = corpus.get('max_points', 6)
        self.coordinate_bound = corpus.get('coordinate_bound', 9)
        self.rng = np.random.default_rng(self.seed)

    def _weights(self, p, m):
        if p == 2:
            return [1] * m
        while True:
            weights = [int(w) for w in self.rng.integers(1, p, size=m - 1)]
            last = (-sum(weights)) % p
            if last:
                return weights + [last]

    def _branch_size(self, p):
        if p == 2:
            sizes = [m for m in range(6, self.max_points + 1, 2)]
        else:
            sizes = [m for m in range(3, self.max_points + 1) if (m - 2) * (p - 1) // 2 >= 2]
        if not sizes:
            raise ValueError(f"corpus.max_points = {self.max_points} leaves no valid branch size for p = {p}")
        return int(self.rng.choice(sizes))

    def rational_curve(self, p):
        """Random p-gonal curve with all branch points in P^1(Q)"""
        Q = rational_field()
        m = self._branch_size(p)
        bound = self.coordinate_bound
        with_infinity = bool(self.rng.integers(0, 2))
        finite = m - 1 if with_infinity else m
        values = self.rng.choice(np.arange(-bound, bound + 1), size=finite, replace=False)
        points = [ProjPoint(Q.element(int(v))) for v in values]
        if with_infinity:
            points.append(ProjPoint.infinity(Q))
        return curve_validate(p, list(zip(points, self._weights(p, m))))

    def random_twist(self, field):
        """Mobius map with entries r + s*sqrt(d), at least one irrational"""
        root = field.gen
        while True:
            entries = [int(v) for v in self.rng.integers(-3, 4, size=8)]
            if not any(entries[1::2]):
                continue
            values = [field.element(r) + root * s for r, s in zip(entries[0::2], entries[1::2])]
            try:
                return Mobius(*values)
            except SingularMatrixError:
                continue

    def twisted_curve(self, index=0):
        p = int(self.rng.choice(self.primes))
        d = int(self.rng.choice(self.discriminants))
        field = quadratic_field(d)
        base = self.rational_curve(p)
        twist = self.random_twist(field)
        embedded = base.branch.embed(_rational_embedding(field))
        branch = WeightedPointSet([(twist.apply(point), weight) for point, weight in embedded], p)
        return TwistedCurve(f"curve_{index:03d}", curve_validate(p, branch), base, twist, d)

    def generate(self, size=None):
        return [self.twisted_curve(i) for i in range(self.size if size is None else size)]

    def write(self, directory, size=None):
        """Write the corpus as one curve file per twisted curve"""
        os.makedirs(directory, exist_ok=True)
        entries = self.generate(size)
        print(f"🧪 Writing {len(entries)} twisted curves to {directory} (seed {self.seed})...", file=sys.stderr)
        paths = []
        for entry in entries:
            path = os.path.join(directory, f"{entry.name}.json")
            with open(path, 'w', encoding='utf-8') as f:
                f.write(dump_curve(entry.curve))
            paths.append(path)
        print(f"✅ Corpus written: {len(paths)} files", file=sys.stderr)
        return paths


def _rational_embedding(field):
    Q = rational_field()
    return FieldEmbedding(Q, field, field.zero)
