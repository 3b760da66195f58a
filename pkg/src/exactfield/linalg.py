"""
Exact linear algebra over Q and over number fields
"""

from dataclasses import dataclass
from typing import Optional

from sympy import Matrix
from sympy.polys.domains import QQ

from .number_field import FieldElement


@dataclass(frozen=True)
class SolutionSet:
    """particular + span(kernel); `particular` is None for an inconsistent system"""
    particular: Optional[tuple]
    kernel: tuple

    @property
    def consistent(self):
        return self.particular is not None


def _is_field_matrix(rows, vector):
    for row in rows:
        for entry in row:
            if isinstance(entry, FieldElement):
                return entry.field
    for entry in vector:
        if isinstance(entry, FieldElement):
            return entry.field
    return None


def _rref_rational(augmented):
    """Reduced row echelon form over Q through sympy's exact Matrix.rref"""
    reduced, pivots = Matrix([[QQ.to_sympy(QQ.convert(v)) for v in row] for row in augmented]).rref()
    rows = [[QQ.convert(reduced[i, j]) for j in range(reduced.cols)] for i in range(reduced.rows)]
    return rows, list(pivots)


def _rref_field(augmented, field):
    rows = [[field.element(v) for v in row] for row in augmented]
    pivots = []
    n_rows = len(rows)
    n_cols = len(rows[0]) if rows else 0
    r = 0
    for c in range(n_cols):
        pivot = next((i for i in range(r, n_rows) if not rows[i][c].is_zero()), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [v * inv for v in rows[r]]
        for i in range(n_rows):
            if i != r and not rows[i][c].is_zero():
                factor = rows[i][c]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    return rows, pivots


def linear_solve(matrix, vector=None):
    """Solve M x = v exactly.

    Entries may be rationals (anything QQ accepts) or FieldElements of one
    field. Returns a SolutionSet with a particular solution and a kernel basis;
    an inconsistent system has particular None.
    """
    rows = [list(row) for row in matrix]
    n_rows = len(rows)
    n_cols = len(rows[0]) if rows else 0
    if vector is None:
        vector = [0] * n_rows
    if len(vector) != n_rows or any(len(row) != n_cols for row in rows):
        raise ValueError(f"inconsistent dimensions: {n_rows}x{n_cols} matrix, vector of {len(vector)}")

    field = _is_field_matrix(rows, vector)
    augmented = [row + [vector[i]] for i, row in enumerate(rows)]
    if field is None:
        reduced, pivots = _rref_rational(augmented)
        zero, one = QQ(0), QQ(1)
    else:
        reduced, pivots = _rref_field(augmented, field)
        zero, one = field.zero, field.one

    if n_cols in pivots:
        particular = None
    else:
        solution = [zero] * n_cols
        for r, c in enumerate(pivots):
            solution[c] = reduced[r][n_cols]
        particular = tuple(solution)

    free = [c for c in range(n_cols) if c not in pivots]
    kernel = []
    for f in free:
        vec = [zero] * n_cols
        vec[f] = one
        for r, c in enumerate(pivots):
            vec[c] = -reduced[r][f]
        kernel.append(tuple(vec))
    return SolutionSet(particular, tuple(kernel))


def kernel(matrix):
    return linear_solve(matrix).kernel


def determinant3(m):
    return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))
