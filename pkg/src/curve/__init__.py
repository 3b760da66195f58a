"""
Cyclic p-gonal curves: validation, isomorphism, power character, uniqueness and the exceptional gallery
"""

from .pgonal_curve import (
    PgonalCurve,
    branch_polynomial,
    conjugate_curve,
    curve_validate,
    genus,
    isomorphic_as_pgonal,
    polynomial_multiply,
)
from .character import PowerCharacter, power_character
from .uniqueness import UniquenessVerdict, castelnuovo_severi_holds, exceptional_tag, uniqueness_classify
from .gallery import GalleryEntry, gallery

__all__ = [
    'PgonalCurve', 'curve_validate', 'genus', 'conjugate_curve', 'isomorphic_as_pgonal',
    'branch_polynomial', 'polynomial_multiply',
    'PowerCharacter', 'power_character',
    'UniquenessVerdict', 'uniqueness_classify', 'castelnuovo_severi_holds', 'exceptional_tag',
    'GalleryEntry', 'gallery',
]
