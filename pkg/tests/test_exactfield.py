from math import isqrt

import numpy as np
import pytest
from sympy.polys.domains import QQ

from errors import DegenerateInputError, NonNormalFormError, ReducibleMinpolyError
from exactfield import (
    ConicSolver,
    conic_point,
    field_construct,
    format_rational,
    legendre_normal_form,
    linear_solve,
    local_obstruction,
    norm_equation,
    parse_rational,
    rational_field,
    rational_sqrt,
)
from exactfield.ternary import is_normal_form

SQRT2 = ['-2', '0', '1']
GAUSSIAN = ['1', '0', '1']
CYCLIC_CUBIC = ['1', '-3', '0', '1']
CYCLOTOMIC5 = ['1', '1', '1', '1', '1']

FIELDS = [['0', '1'], SQRT2, GAUSSIAN, CYCLIC_CUBIC, CYCLOTOMIC5]


def _random_element(field, rng):
    return field.element([int(v) for v in rng.integers(-9, 10, size=field.degree)])


def _evaluate(coefficients, value):
    result = value.field.zero
    for c in reversed(coefficients):
        result = result * value + c
    return result


def test_parse_and_format_rationals():
    assert parse_rational('6/4') == QQ(3, 2)
    assert parse_rational(' -7 ') == QQ(-7)
    assert format_rational(QQ(0)) == '0'
    assert format_rational(QQ(-3, 6)) == '-1/2'
    assert rational_sqrt(QQ(9, 4)) == QQ(3, 2)
    assert rational_sqrt(2) is None
    assert rational_sqrt(-4) is None


def test_rational_field_has_one_automorphism():
    Q = rational_field()
    assert Q.degree == 1
    assert len(Q.automorphisms) == 1
    assert Q.is_galois


def test_sqrt2_automorphisms_are_plus_minus_theta():
    K = field_construct(SQRT2)
    theta = K.gen
    assert len(K.automorphisms) == 2
    assert set(K.automorphisms) == {theta, -theta}
    assert K.automorphisms[0] == theta


def test_pure_cubic_is_not_galois():
    K = field_construct(['-2', '0', '0', '1'])
    assert len(K.automorphisms) == 1
    assert not K.is_galois


def test_reducible_minpoly_is_rejected_with_factor():
    with pytest.raises(ReducibleMinpolyError) as info:
        field_construct(['-1', '0', '1'])
    assert info.value.factor in ('x - 1', 'x + 1')


def test_arithmetic_in_sqrt2():
    K = field_construct(SQRT2)
    theta = K.gen
    assert (1 + theta) * (1 - theta) == -1
    assert 1 / (1 + theta) == -1 + theta
    assert (3 + 5 * theta) + 0 == 3 + 5 * theta


def test_polynomial_product_over_sqrt2():
    K = field_construct(SQRT2)
    theta = K.gen
    assert K.poly_mul([-theta, K.one], [theta, K.one]) == [K.element(-2), K.zero, K.one]
    # (x + 1 + theta)^2 = x^2 + 2(1 + theta) x + 3 + 2 theta
    square = K.poly_mul([1 + theta, K.one], [1 + theta, K.one])
    assert square == [3 + 2 * theta, 2 + 2 * theta, K.one]
    assert rational_field().poly_mul([1, 1], [1, 1]) == [1, 2, 1]


def test_automorphism_application():
    K = field_construct(SQRT2)
    value = 3 + 5 * K.gen
    assert value.apply(0) == value
    assert value.apply(1) == 3 - 5 * K.gen
    assert value.apply(1).apply(1) == value


@pytest.mark.parametrize('minpoly', FIELDS)
def test_field_axioms_on_random_triples(minpoly):
    K = field_construct(minpoly)
    rng = np.random.default_rng(11)
    for _ in range(100):
        a, b, c = (_random_element(K, rng) for _ in range(3))
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert (a + b) - b == a
        if not a.is_zero():
            assert a * a.inverse() == K.one
            assert (b / a) * a == b


@pytest.mark.parametrize('minpoly', [SQRT2, GAUSSIAN, CYCLIC_CUBIC, CYCLOTOMIC5])
def test_galois_automorphisms_form_a_group_of_roots(minpoly):
    K = field_construct(minpoly)
    assert K.is_galois
    assert len(K.automorphisms) == K.degree
    for image in K.automorphisms:
        assert _evaluate(K.minpoly, image).is_zero()

    group = K.galois_group()
    for i in group:
        assert group.compose(i, group.inverse(i)) == group.identity
        assert K.degree % group.element_order(i) == 0
        for j in group:
            expected = K.gen.apply(j).apply(i)
            assert K.gen.apply(group.compose(i, j)) == expected


def test_contains_and_adjoin_sqrt():
    K = field_construct(GAUSSIAN)
    root = K.contains_sqrt(-1)
    assert root * root == K.element(-1)
    assert K.contains_sqrt(2) is None
    assert K.contains_sqrt(4) == K.element(2)

    L, embedding, sqrt2 = K.adjoin_sqrt(2)
    assert L.degree == 4
    assert sqrt2 * sqrt2 == L.element(2)
    i = embedding(K.gen)
    assert i * i == L.element(-1)


def test_linear_solve_identity_system():
    solution = linear_solve([[1, 0], [0, 1]], [3, 4])
    assert solution.particular == (QQ(3), QQ(4))
    assert solution.kernel == ()


def test_linear_solve_kernel_of_symmetric_row():
    kernel = linear_solve([[1, 1]]).kernel
    assert len(kernel) == 1
    x, y = kernel[0]
    assert x == -y and x != 0


def test_linear_solve_inconsistent_system():
    solution = linear_solve([[1, 1], [2, 2]], [1, 3])
    assert not solution.consistent


def test_linear_solve_random_invertible_systems():
    rng = np.random.default_rng(5)
    solved = 0
    while solved < 20:
        matrix = [[int(v) for v in row] for row in rng.integers(-6, 7, size=(3, 3))]
        vector = [int(v) for v in rng.integers(-6, 7, size=3)]
        result = linear_solve(matrix, vector)
        if result.kernel:
            continue
        for row, target in zip(matrix, vector):
            assert sum(QQ(a) * x for a, x in zip(row, result.particular)) == target
        solved += 1


def test_linear_solve_over_number_field():
    K = field_construct(GAUSSIAN)
    i = K.gen
    matrix = [[1 + i, K.one], [K.one, i]]
    vector = [K.element(2), 1 + i]
    result = linear_solve(matrix, vector)
    x, y = result.particular
    assert (1 + i) * x + y == 2
    assert x + i * y == 1 + i

    kernel = linear_solve([[K.one, i]]).kernel
    assert len(kernel) == 1
    u, v = kernel[0]
    assert (u + i * v).is_zero()


def test_legendre_normal_form_scales():
    form = legendre_normal_form([2, 6, 3])
    assert form.coefficients == (3, 1, 2)
    ratios = {a * s * s / d for a, s, d in zip(form.coefficients, form.scales, [2, 6, 3])}
    assert ratios == {QQ(6)}

    form = legendre_normal_form([QQ(4), QQ(1, 2), QQ(-1, 3)])
    assert is_normal_form(*form.coefficients)
    ratios = {a * s * s / d for a, s, d in zip(form.coefficients, form.scales, [QQ(4), QQ(1, 2), QQ(-1, 3)])}
    assert len(ratios) == 1


def test_legendre_normal_form_rejects_zero_coefficient():
    with pytest.raises(NonNormalFormError):
        legendre_normal_form([1, 0, 2])


def test_local_obstructions():
    assert local_obstruction(1, 1, 1).place == 'inf'
    assert local_obstruction(1, 1, -3).place == 3
    assert local_obstruction(1, 1, -2) is None


def test_conic_point_rejects_non_normal_form():
    with pytest.raises(NonNormalFormError):
        conic_point((4, 1, -1))


def _quadratic_residual(diag, point):
    """(rational, irrational) parts of sum a_i X_i^2 for X_i = r + s*sqrt(e)"""
    rational = irrational = QQ(0)
    for a, (r, s) in zip(diag, point.coords):
        rational += a * (r * r + point.e * s * s)
        irrational += a * 2 * r * s
    return rational, irrational


def _brute_force_conic(a, b, c, bound):
    for x in range(bound + 1):
        for y in range(bound + 1):
            if x == 0 and y == 0:
                continue
            num = -(a * x * x + b * y * y)
            if num % c:
                continue
            zz = num // c
            if zz >= 0 and isqrt(zz) ** 2 == zz:
                return x, y, isqrt(zz)
    return None


def test_conic_decision_agrees_with_brute_force():
    rng = np.random.default_rng(2024)
    checked = 0
    while checked < 200:
        a, b, c = (int(v) for v in rng.integers(-30, 31, size=3))
        if not is_normal_form(a, b, c):
            continue
        result = conic_point((a, b, c))
        oracle = _brute_force_conic(a, b, c, 60)
        assert result.has_rational_point == (oracle is not None), (a, b, c)
        if result.has_rational_point:
            x, y, z = result.point
            assert a * x * x + b * y * y + c * z * z == 0
            assert (x, y, z) != (0, 0, 0)
        else:
            assert result.obstruction is not None
            point = result.quadratic_point
            assert point.e != 1
            assert _quadratic_residual((a, b, c), point) == (0, 0)
        checked += 1


def test_bounded_strategy_matches_descent():
    bounded = ConicSolver({'conic': {'strategy': 'bounded', 'height_bound': None}})
    for diag in [(1, 1, -2), (1, 2, -3), (1, -1, -1), (2, 3, -5)]:
        point = bounded.conic_point(diag).point
        a, b, c = diag
        x, y, z = point
        assert a * x * x + b * y * y + c * z * z == 0


def test_norm_equation_examples():
    assert norm_equation(2, 1).solution == (QQ(1), QQ(0))

    x, y = norm_equation(2, 7).solution
    assert x * x - 2 * y * y == 7

    result = norm_equation(-1, -1)
    assert not result.solvable
    assert result.obstruction.place == 'inf'


def test_norm_equation_rejects_square_d():
    with pytest.raises(DegenerateInputError):
        norm_equation(4, 3)
    with pytest.raises(DegenerateInputError):
        norm_equation(2, 0)


def _brute_force_norm(d, c, bound):
    for z in range(1, bound + 1):
        for y in range(bound + 1):
            xx = c * z * z + d * y * y
            if xx >= 0 and isqrt(xx) ** 2 == xx:
                return isqrt(xx), y, z
    return None


def test_norm_equation_agrees_with_brute_force():
    rng = np.random.default_rng(20)
    checked = 0
    while checked < 100:
        d, c = (int(v) for v in rng.integers(-20, 21, size=2))
        if c == 0 or (d >= 0 and isqrt(d) ** 2 == d):
            continue
        result = norm_equation(d, c)
        found = _brute_force_norm(d, c, 50)
        if result.solvable:
            x, y = result.solution
            assert x * x - d * y * y == c
        else:
            assert found is None, (d, c)
        if found is not None:
            assert result.solvable, (d, c)
        checked += 1
