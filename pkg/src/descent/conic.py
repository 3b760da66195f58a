"""
Weil descent of the projective line made explicit: the Q-space of binary quadratics
fixed by the twisted Galois action spans a plane conic over Q
"""

from dataclasses import dataclass

from sympy.polys.domains import QQ

from errors import InvariantViolation
from exactfield import ConicSolver, format_rational, legendre_normal_form, linear_solve
from exactfield.linalg import determinant3
from projgeom import BinaryQuadratic, quadratic_twisted_action


@dataclass(frozen=True)
class DescendedConic:
    """The conic B over Q.

    quadrics span the invariant space; gram is the symmetric relation they
    satisfy; diag is its Legendre normal form and normal_quadrics the
    quadrics N_i with sum(diag[i] * N_i^2) = 0 identically.
    """
    quadrics: tuple
    gram: tuple
    diag: tuple
    normal_quadrics: tuple

    @property
    def field(self):
        return self.quadrics[0].field

    def to_dict(self):
        return {
            'gram': [[format_rational(v) for v in row] for row in self.gram],
            'diag': [str(v) for v in self.diag],
        }


def _flatten(quadric):
    return [c for q in quadric.coefficients for c in q.coords]


def _unflatten(values, field):
    n = field.degree
    return BinaryQuadratic(*(field.element(list(values[i * n:(i + 1) * n])) for i in range(3)))


def invariant_quadrics(cocycle):
    """Q-basis of {Q : det(A) * sigma(Q) o A^-1 = Q for all sigma}, A a lift of g_sigma^-1.

    Each sigma gives a Q-linear map on the 3n rational coordinates of Q;
    the fixed space is the kernel of the stacked (S_sigma - I).
    """
    field = cocycle.field
    n = field.degree
    size = 3 * n
    basis = []
    for index in range(size):
        values = [QQ(0)] * size
        values[index] = QQ(1)
        basis.append(_unflatten(values, field))

    rows = []
    for sigma in cocycle.group:
        if sigma == cocycle.group.identity:
            continue
        inverse = cocycle[sigma].inverse()
        columns = [_flatten(quadratic_twisted_action(sigma, inverse, q) - q) for q in basis]
        rows.extend([columns[c][r] for c in range(size)] for r in range(size))
    if not rows:
        rows = [[QQ(0)] * size]

    fixed = linear_solve(rows).kernel
    if len(fixed) != 3:
        raise InvariantViolation(f"invariant quadrics span dimension {len(fixed)}, expected 3")
    quadrics = tuple(_unflatten(vector, field) for vector in fixed)
    matrix = [list(q.coefficients) for q in quadrics]
    if determinant3(matrix).is_zero():
        raise InvariantViolation('invariant quadrics are linearly dependent over the field')
    return quadrics


_PAIRS = ((0, 0), (1, 1), (2, 2), (0, 1), (0, 2), (1, 2))


def quadric_relation(quadrics):
    """Symmetric rational G with sum G_ij Q_i Q_j = 0, unique up to scale"""
    field = quadrics[0].field
    products = []
    for i, j in _PAIRS:
        quartic = quadrics[i].times(quadrics[j])
        factor = 1 if i == j else 2
        products.append([c * factor for q in quartic for c in q.coords])
    rows = [[products[u][r] for u in range(6)] for r in range(5 * field.degree)]
    solutions = linear_solve(rows).kernel
    if len(solutions) != 1:
        raise InvariantViolation(f"quadric relations form a space of dimension {len(solutions)}, expected 1")
    g = solutions[0]
    return (
        (g[0], g[3], g[4]),
        (g[3], g[1], g[5]),
        (g[4], g[5], g[2]),
    )


def congruence_diagonalize(gram):
    """Diagonal D and P^-1 with P^T G P = D, by symmetric elimination over Q"""
    D = [[QQ.convert(v) for v in row] for row in gram]
    P_inv = [[QQ(int(i == j)) for j in range(3)] for i in range(3)]

    def add_multiple(target, source, factor):
        # column and row target += factor * source
        for i in range(3):
            D[i][target] += factor * D[i][source]
        for j in range(3):
            D[target][j] += factor * D[source][j]
        P_inv[source] = [a - factor * b for a, b in zip(P_inv[source], P_inv[target])]

    def swap(i, j):
        D[i], D[j] = D[j], D[i]
        for row in D:
            row[i], row[j] = row[j], row[i]
        P_inv[i], P_inv[j] = P_inv[j], P_inv[i]

    for k in range(3):
        if D[k][k] == 0:
            j = next((j for j in range(k + 1, 3) if D[j][j] != 0), None)
            if j is not None:
                swap(k, j)
            else:
                j = next((j for j in range(k + 1, 3) if D[k][j] != 0), None)
                if j is None:
                    continue
                add_multiple(k, j, QQ(1))
        for j in range(k + 1, 3):
            if D[k][j] != 0:
                add_multiple(j, k, -D[k][j] / D[k][k])

    diagonal = tuple(D[i][i] for i in range(3))
    if any(v == 0 for v in diagonal):
        raise InvariantViolation('singular conic form')
    return diagonal, P_inv


def _combine(weights, quadrics):
    total = quadrics[0].scale(weights[0])
    for w, q in zip(weights[1:], quadrics[1:]):
        total = total + q.scale(w)
    return total


def veronese_residual(coefficients, quadrics):
    """Quartic sum(coefficients[i] * N_i^2); zero for quadrics lying on the conic"""
    total = None
    for c, q in zip(coefficients, quadrics):
        term = tuple(v * c for v in q.times(q))
        total = term if total is None else tuple(a + b for a, b in zip(total, term))
    return total


def descend_to_conic(cocycle):
    quadrics = invariant_quadrics(cocycle)
    gram = quadric_relation(quadrics)
    if determinant3(gram) == 0:
        raise InvariantViolation('gram matrix of the quadric relation is singular')

    diagonal, P_inv = congruence_diagonalize(gram)
    diagonal_quadrics = [_combine(row, quadrics) for row in P_inv]
    form = legendre_normal_form(diagonal)
    normal_quadrics = tuple(q.scale(s) for q, s in zip(diagonal_quadrics, form.scales))

    if not all(v.is_zero() for v in veronese_residual(form.coefficients, normal_quadrics)):
        raise InvariantViolation('normal quadrics do not satisfy the conic equation')
    return DescendedConic(quadrics, gram, form.coefficients, normal_quadrics)


def find_conic_point(conic, config=None):
    """Rational point of the descended conic, or a local certificate and a quadratic point"""
    return ConicSolver(config).conic_point(conic.diag)
