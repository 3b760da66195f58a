"""
Descent Engine - runs character, cocycle, conic and model stages for one curve
"""

import sys

from curve import power_character
from errors import CocycleObstructionError, FomNotContainedError, InvariantViolation
from exactfield import ConicSolver, format_rational, norm_equation
from .cocycle import compute_cocycle, lift_scalar, quadratic_discriminant
from .conic import descend_to_conic
from .model import CHARACTER_BOUND, FOM_OBSTRUCTION, DescentOutcome, parametrize_and_model


class DescentEngine:
    def __init__(self, config=None):
        self.config = config or {}
        reporting = self.config.get('reporting', {}) or {}
        cocycle = self.config.get('cocycle', {}) or {}

        self.verbose = reporting.get('verbose', True)
        self.max_selections = cocycle.get('max_selections', 2)
        self.solver = ConicSolver(self.config)
        self.log = []

    def _say(self, message):
        self.log.append(message)
        if self.verbose:
            print(message, file=sys.stderr)

    def descend(self, curve, k='Q'):
        """Descend `curve` to Q, or to a quadratic extension when the conic has no rational point"""
        self.log = []
        self._say(f"🔍 Descending p={curve.p} curve with {curve.m} branch points over {curve.fieldlabel}...")

        try:
            character = power_character(curve, k)
        except FomNotContainedError as e:
            self._say(f"   ❌ {e}")
            return DescentOutcome(FOM_OBSTRUCTION, curve.p, reason='fom-not-contained',
                                  details={'sigma': e.sigma})

        if not character.is_trivial():
            bound = 2 * character.k1_degree
            self._say(f"   ⚠️  Power character has image of order {character.k1_degree}; "
                      f"definable over an extension of degree at most {bound}")
            return DescentOutcome(CHARACTER_BOUND, curve.p, character=character, reason='nontrivial-character',
                                  details={'k1_degree': character.k1_degree, 'degree_bound': bound,
                                           'bound_limit': 2 * (curve.p - 1)})

        try:
            cocycle = compute_cocycle(curve, k, self.max_selections)
        except FomNotContainedError as e:
            self._say(f"   ❌ {e}")
            return DescentOutcome(FOM_OBSTRUCTION, curve.p, reason='fom-not-contained',
                                  details={'sigma': e.sigma})
        except CocycleObstructionError as e:
            self._say(f"   ❌ {e}")
            return DescentOutcome(FOM_OBSTRUCTION, curve.p, reason='cocycle-obstruction')
        if cocycle.ambiguous:
            self._say('   ⚠️  Several relation-consistent cocycles exist; using the first in canonical order')
        self._say(f"   ✅ Cocycle verified on a group of order {len(cocycle.group)}")

        conic = descend_to_conic(cocycle)
        a, b, c = conic.diag
        self._say(f"   📐 Conic {a}x^2 + {b}y^2 + {c}z^2 = 0")

        point = self.solver.conic_point(conic.diag)
        if point.has_rational_point:
            self._say('   ✅ Conic has a rational point')
        else:
            self._say(f"   ⚠️  No rational point (fails at {point.obstruction.place}); "
                      f"using a point over Q(sqrt({point.quadratic_point.e}))")

        scalar = self._cross_check(cocycle, point)

        outcome = parametrize_and_model(curve, cocycle, conic, point)
        if scalar is not None:
            outcome.details['lift_scalar'] = format_rational(scalar)
        if outcome.degree not in (1, 2):
            raise InvariantViolation(f"descent produced a model of degree {outcome.degree}")
        self._say(f"✅ {outcome.variant} of degree {outcome.degree}\n")
        return outcome

    def _cross_check(self, cocycle, point):
        """For a quadratic group: the conic splits iff the lift scalar is a norm"""
        if len(cocycle.group) != 2:
            return None
        scalar = lift_scalar(cocycle)
        d = quadratic_discriminant(cocycle.field)
        norm = norm_equation(d, scalar, self.config)
        if norm.solvable != point.has_rational_point:
            raise InvariantViolation(
                f"lift scalar {scalar} norm test ({norm.solvable}) disagrees with the conic ({point.has_rational_point})"
            )
        return scalar


def descend(curve, k='Q', config=None):
    return DescentEngine(config).descend(curve, k)
