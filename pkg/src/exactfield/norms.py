"""
Norm equations x^2 - d*y^2 = c over Q
"""

from dataclasses import dataclass
from typing import Optional

from errors import DegenerateInputError, InvariantViolation
from .rationals import format_rational, is_rational_square, rat, rational_sqrt
from .ternary import ConicSolver, LocalObstruction, legendre_normal_form


@dataclass(frozen=True)
class NormEquationResult:
    d: object
    c: object
    solution: Optional[tuple] = None
    obstruction: Optional[LocalObstruction] = None

    @property
    def solvable(self):
        return self.solution is not None

    def to_dict(self):
        return {
            'd': format_rational(self.d),
            'c': format_rational(self.c),
            'solution': None if self.solution is None else [format_rational(v) for v in self.solution],
            'obstruction': None if self.obstruction is None else self.obstruction.to_dict(),
        }


def norm_equation(d, c, config=None):
    """Solve x^2 - d*y^2 = c over Q, or name a place where it is locally unsolvable.

    The equation has a rational solution iff the conic X^2 - d*Y^2 - c*Z^2 = 0
    has a rational point; every such point has Z != 0 because d is not a square.
    """
    d, c = rat(d), rat(c)
    if d == 0 or is_rational_square(d):
        raise DegenerateInputError(f"d = {format_rational(d)} is a rational square; the equation factors")
    if c == 0:
        raise DegenerateInputError("c must be nonzero")
    if is_rational_square(c):
        root = rational_sqrt(c)
        return NormEquationResult(d, c, solution=(root, rat(0)))
    form = legendre_normal_form([1, -d, -c])
    result = ConicSolver(config).conic_point(form.coefficients)
    if not result.has_rational_point:
        return NormEquationResult(d, c, obstruction=result.obstruction)

    X, Y, Z = (v / s for v, s in zip(result.point, form.scales))
    if Z == 0:
        raise InvariantViolation(f"point {result.point} of x^2 - {d}y^2 - {c}z^2 lies at z = 0")
    x, y = X / Z, Y / Z
    if x * x - d * y * y != c:
        raise InvariantViolation(f"norm equation solution ({x}, {y}) fails verification")
    return NormEquationResult(d, c, solution=(x, y))
