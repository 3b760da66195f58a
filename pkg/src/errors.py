"""
Exception taxonomy shared by the library and the CLI
"""

EXIT_OK = 0
EXIT_INVALID_INPUT = 2
EXIT_MATH_NEGATIVE = 10
EXIT_INVARIANT = 70


class PgonalError(Exception):
    """Base class for every error raised by this package"""
    status = 'invalid-input'
    exit_code = EXIT_INVALID_INPUT


class InvalidInputError(PgonalError):
    """Malformed input; `path` locates the offending field or line"""

    def __init__(self, message, path=None):
        self.path = path
        if path:
            message = f"{path}: {message}"
        super().__init__(message)


class ValidationError(InvalidInputError):
    """A curve constraint is violated"""

    def __init__(self, constraint, detail='', path=None):
        self.constraint = constraint
        message = constraint if not detail else f"{constraint} ({detail})"
        super().__init__(message, path)


class ReducibleMinpolyError(InvalidInputError):
    def __init__(self, minpoly, factor):
        self.factor = factor
        super().__init__(f"minimal polynomial {minpoly} is reducible, factor {factor}")


class FieldMismatchError(PgonalError):
    pass


class MatchContractError(PgonalError):
    """Weighted sets of different size or weight multiset were handed to the matcher"""


class NonNormalFormError(PgonalError):
    pass


class SingularMatrixError(PgonalError):
    pass


class DegenerateInputError(PgonalError):
    pass


class MathNegative(PgonalError):
    """A well-posed question whose answer is negative"""
    status = 'math-negative'
    exit_code = EXIT_MATH_NEGATIVE


class FomNotContainedError(MathNegative):
    """Some automorphism admits no matching map: the field of moduli is not inside k"""

    def __init__(self, sigma, detail=''):
        self.sigma = sigma
        super().__init__(f"field of moduli not contained in k: no match for automorphism {sigma}"
                         + (f" ({detail})" if detail else ''))


class CocycleObstructionError(MathNegative):
    """Matches exist for every automorphism but no selection satisfies the cocycle relation"""


class InvariantViolation(PgonalError):
    """An internal identity failed; signals a bug upstream rather than a math outcome"""
    status = 'internal-invariant-violation'
    exit_code = EXIT_INVARIANT
