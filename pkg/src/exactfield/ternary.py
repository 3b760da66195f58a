"""
Diagonal ternary quadratic forms over Q: Legendre normal form, local
solvability certificates and rational point search
"""

from dataclasses import dataclass
from math import gcd, isqrt
from typing import Optional

from sympy import Symbol, legendre_symbol, primefactors
from sympy.polys.domains import QQ
from sympy.solvers.diophantine.diophantine import HomogeneousTernaryQuadraticNormal, square_factor

from errors import InvariantViolation, NonNormalFormError
from .rationals import format_rational, integer_lcm_denominators, rat

_X, _Y, _Z = Symbol('x'), Symbol('y'), Symbol('z')
LINES = ('z=0', 'y=0', 'x=0')


@dataclass(frozen=True)
class LocalObstruction:
    """A place of Q where the form has no nontrivial zero: a prime, or 'inf' for the real place"""
    place: object

    def to_dict(self):
        return {'place': 'inf' if self.place == 'inf' else str(self.place)}


@dataclass(frozen=True)
class NormalForm:
    """Integers (a, b, c) in Legendre normal form with scales such that
    N_i = scales[i] * u_i turns sum(d_i u_i^2) into a multiple of sum(a_i N_i^2)."""
    coefficients: tuple
    scales: tuple


@dataclass(frozen=True)
class QuadraticPoint:
    """Point whose coordinates are r + s*sqrt(e), stored as (r, s) pairs"""
    line: str
    e: int
    coords: tuple

    def to_dict(self):
        return {
            'line': self.line,
            'disc': str(self.e),
            'coords': [[format_rational(r), format_rational(s)] for r, s in self.coords],
        }


@dataclass(frozen=True)
class ConicPointResult:
    point: Optional[tuple] = None
    obstruction: Optional[LocalObstruction] = None
    quadratic_point: Optional[QuadraticPoint] = None

    @property
    def has_rational_point(self):
        return self.point is not None


def squarefree_split(n):
    """n = s * t^2 with s squarefree (sign kept in s) and t > 0"""
    n = int(n)
    t = int(square_factor(abs(n)))
    return n // (t * t), t


def is_squarefree(n):
    return n != 0 and int(square_factor(abs(int(n)))) == 1


def is_normal_form(a, b, c):
    values = [int(a), int(b), int(c)]
    if not all(is_squarefree(v) for v in values):
        return False
    return gcd(values[0], values[1]) == 1 and gcd(values[1], values[2]) == 1 and gcd(values[0], values[2]) == 1


def legendre_normal_form(coefficients):
    """Reduce a diagonal form with nonzero rational coefficients to Legendre normal form"""
    coefficients = [rat(c) for c in coefficients]
    if len(coefficients) != 3 or any(c == 0 for c in coefficients):
        raise NonNormalFormError(f"need three nonzero coefficients, got {coefficients}")
    lcm = integer_lcm_denominators(coefficients)
    integers = [int(c * lcm) for c in coefficients]

    s, scales = [], []
    for n in integers:
        part, t = squarefree_split(n)
        s.append(part)
        scales.append(QQ(t))
    common = gcd(gcd(s[0], s[1]), s[2])
    s = [v // common for v in s]

    changed = True
    while changed:
        changed = False
        for i, j, k in ((0, 1, 2), (1, 2, 0), (0, 2, 1)):
            g = gcd(s[i], s[j])
            if g > 1:
                s[i] //= g
                s[j] //= g
                s[k] *= g
                scales[i] *= g
                scales[j] *= g
                changed = True
    if not is_normal_form(*s):
        raise InvariantViolation(f"normal form reduction produced {s}")
    return NormalForm(tuple(s), tuple(scales))


def local_obstruction(a, b, c):
    """First place where a x^2 + b y^2 + c z^2 = 0 is not locally solvable, or None.

    For a form in Legendre normal form the real place and the odd primes
    dividing abc decide solvability.
    """
    a, b, c = int(a), int(b), int(c)
    if (a > 0 and b > 0 and c > 0) or (a < 0 and b < 0 and c < 0):
        return LocalObstruction('inf')
    for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
        for p in primefactors(abs(x)):
            if p == 2:
                continue
            if legendre_symbol((-y * z) % p, p) == -1:
                return LocalObstruction(p)
    return None


def holzer_bounds(a, b, c):
    return isqrt(abs(b * c)), isqrt(abs(a * c)), isqrt(abs(a * b))


def bounded_search(a, b, c, bounds):
    """Smallest-first search for a primitive integer zero inside the given box"""
    a, b, c = int(a), int(b), int(c)
    bx, by, _ = bounds
    for x in range(bx + 1):
        for y in range(by + 1):
            if x == 0 and y == 0:
                continue
            num = -(a * x * x + b * y * y)
            if num % c:
                continue
            zz = num // c
            if zz < 0:
                continue
            z = isqrt(zz)
            if z * z == zz and gcd(gcd(x, y), z) == 1:
                return x, y, z
    return None


def _descent_search(a, b, c):
    """Lagrange descent with Holzer reduction, as implemented by sympy"""
    solutions = HomogeneousTernaryQuadraticNormal(a * _X ** 2 + b * _Y ** 2 + c * _Z ** 2).solve()
    for solution in solutions:
        if any(v is None or not v.is_Integer for v in solution):
            continue
        x, y, z = (int(v) for v in solution)
        if a * x * x + b * y * y + c * z * z == 0 and (x, y, z) != (0, 0, 0):
            return x, y, z
    return None


def quadratic_point(a, b, c):
    """Intersection of the conic with a coordinate line, defined over Q(sqrt(e))"""
    a, b, c = int(a), int(b), int(c)
    for line in LINES:
        if line == 'z=0':
            e, s = squarefree_split(-a * b)
            coords = ((QQ(1), QQ(0)), (QQ(0), QQ(s, b)), (QQ(0), QQ(0)))
        elif line == 'y=0':
            e, s = squarefree_split(-a * c)
            coords = ((QQ(1), QQ(0)), (QQ(0), QQ(0)), (QQ(0), QQ(s, c)))
        else:
            e, s = squarefree_split(-b * c)
            coords = ((QQ(0), QQ(0)), (QQ(1), QQ(0)), (QQ(0), QQ(s, c)))
        if e == 1:
            continue
        return QuadraticPoint(line, e, coords)
    raise InvariantViolation(f"every coordinate line meets {a, b, c} in rational points")


class ConicSolver:
    """Decides and solves a x^2 + b y^2 + c z^2 = 0 over Q"""

    def __init__(self, config=None):
        settings = (config or {}).get('conic', {}) or {}
        self.strategy = settings.get('strategy', 'descent')
        self.height_bound = settings.get('height_bound')

    def _bounds(self, a, b, c):
        if self.height_bound:
            h = int(self.height_bound)
            return h, h, h
        return holzer_bounds(a, b, c)

    def find_point(self, a, b, c):
        """A primitive integer zero, assuming local solvability everywhere"""
        point = None
        if self.strategy == 'descent':
            point = _descent_search(a, b, c)
        if point is None:
            point = bounded_search(a, b, c, self._bounds(a, b, c))
        if point is None and self.height_bound:
            point = bounded_search(a, b, c, holzer_bounds(a, b, c))
        if point is None:
            raise InvariantViolation(f"locally solvable conic {a, b, c} without a point inside the Holzer bound")
        return point

    def conic_point(self, diag):
        """Rational point, or a local certificate plus a quadratic point"""
        a, b, c = (int(v) for v in diag)
        if not is_normal_form(a, b, c):
            raise NonNormalFormError(f"{a, b, c} is not in Legendre normal form")
        obstruction = local_obstruction(a, b, c)
        if obstruction is None:
            x, y, z = self.find_point(a, b, c)
            return ConicPointResult(point=(QQ(x), QQ(y), QQ(z)))
        return ConicPointResult(obstruction=obstruction, quadratic_point=quadratic_point(a, b, c))


def conic_point(diag, config=None):
    return ConicSolver(config).conic_point(diag)
