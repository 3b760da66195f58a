"""
Exact arithmetic over Q and number fields Q[x]/(f)
"""

from .rationals import Rational, format_rational, is_rational_square, parse_rational, rat, rational_sqrt
from .number_field import FieldElement, FieldEmbedding, GaloisGroup, NumberField, field_construct
from .linalg import SolutionSet, kernel, linear_solve
from .ternary import (
    ConicPointResult,
    ConicSolver,
    LocalObstruction,
    NormalForm,
    QuadraticPoint,
    conic_point,
    legendre_normal_form,
    local_obstruction,
)
from .norms import NormEquationResult, norm_equation

QQ_FIELD_MINPOLY = ('0', '1')


def rational_field():
    return NumberField(QQ_FIELD_MINPOLY, 'Q')


def elem_arith(a, b, op):
    """a op b for op in {add, sub, mul, div}"""
    operations = {
        'add': lambda: a + b,
        'sub': lambda: a - b,
        'mul': lambda: a * b,
        'div': lambda: a / b,
    }
    if op not in operations:
        raise ValueError(f"unknown operation {op!r}")
    return operations[op]()


def apply_automorphism(sigma, a):
    return a.field.apply_automorphism(sigma, a)


__all__ = [
    'Rational', 'rat', 'parse_rational', 'format_rational', 'is_rational_square', 'rational_sqrt',
    'NumberField', 'FieldElement', 'FieldEmbedding', 'GaloisGroup', 'field_construct',
    'rational_field', 'elem_arith', 'apply_automorphism',
    'SolutionSet', 'linear_solve', 'kernel',
    'ConicSolver', 'ConicPointResult', 'LocalObstruction', 'NormalForm', 'QuadraticPoint',
    'conic_point', 'legendre_normal_form', 'local_obstruction',
    'NormEquationResult', 'norm_equation',
]
