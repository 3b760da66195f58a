"""
Rational numbers - thin layer over sympy's QQ domain with the text format "n/d"
"""

from sympy import ilcm, integer_nthroot
from sympy.polys.domains import QQ
from sympy.ntheory.primetest import is_square

from errors import InvalidInputError

Rational = QQ.dtype
ZERO = QQ(0)
ONE = QQ(1)


def rat(value, denominator=None):
    """Coerce ints, strings, sympy numbers and QQ elements to a QQ element"""
    if denominator is not None:
        return QQ(int(value), int(denominator))
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, int):
        return QQ(value)
    if isinstance(value, QQ.dtype):
        return value
    try:
        return QQ.convert(value)
    except Exception as e:
        raise InvalidInputError(f"not a rational number: {value!r} ({e})")


def parse_rational(text):
    """Parse "n" or "n/d" into a reduced rational"""
    text = text.strip()
    try:
        if '/' in text:
            num, den = text.split('/', 1)
            if int(den) == 0:
                raise InvalidInputError(f"zero denominator in {text!r}")
            return QQ(int(num), int(den))
        return QQ(int(text))
    except ValueError:
        raise InvalidInputError(f"not a rational number: {text!r}")


def format_rational(value):
    value = rat(value)
    num, den = int(value.numerator), int(value.denominator)
    return str(num) if den == 1 else f"{num}/{den}"


def is_rational_square(value):
    value = rat(value)
    if value < 0:
        return False
    return is_square(int(value.numerator)) and is_square(int(value.denominator))


def integer_lcm_denominators(values):
    """Least common multiple of the denominators of `values`"""
    result = 1
    for value in values:
        result = ilcm(result, int(rat(value).denominator))
    return result


def rational_sqrt(value):
    """The nonnegative square root of a rational square, or None"""
    value = rat(value)
    if not is_rational_square(value):
        return None
    return QQ(integer_nthroot(int(value.numerator), 2)[0], integer_nthroot(int(value.denominator), 2)[0])
