"""
Uniqueness of the cyclic p-gonal group from the branch count m and the prime p
"""

from dataclasses import dataclass

from sympy import isprime

from errors import ValidationError

CASTELNUOVO_SEVERI = 'castelnuovo-severi'
WOOTTON_GENERIC = 'wootton-generic'


@dataclass(frozen=True)
class UniquenessVerdict:
    unique: bool
    reason: str

    def to_dict(self):
        return {'unique': self.unique, 'reason': self.reason}


def pgonal_genus(p, m):
    return (m - 2) * (p - 1) // 2


def castelnuovo_severi_holds(p, m):
    """g > (p-1)^2, which is equivalent to p < m/2"""
    return pgonal_genus(p, m) > (p - 1) ** 2


def exceptional_tag(p, m):
    """Tag of the exceptional shape (m, p) belongs to, or None"""
    fixed = {(3, 7): '(3,7)', (4, 3): '(4,3)', (4, 5): '(4,5)', (5, 3): '(5,3)'}
    if (m, p) in fixed:
        return f"exceptional-{fixed[(m, p)]}"
    if m == p and p >= 5:
        return 'exceptional-(p,p)'
    if m == 2 * p and p >= 3:
        return 'exceptional-(2p,p)'
    return None


def uniqueness_classify(p, m):
    p, m = int(p), int(m)
    if not isprime(p):
        raise ValidationError('p not prime', f"p = {p}")
    if m < 3:
        raise ValidationError('m < 3', f"m = {m}")
    if ((m - 2) * (p - 1)) % 2:
        raise ValidationError('congruence failure', f"no curve with p = {p} has {m} branch points")
    if pgonal_genus(p, m) < 2:
        raise ValidationError('genus < 2', f"genus {pgonal_genus(p, m)}")
    if 2 * p < m:
        return UniquenessVerdict(True, CASTELNUOVO_SEVERI)
    tag = exceptional_tag(p, m)
    if tag:
        return UniquenessVerdict(False, tag)
    return UniquenessVerdict(True, WOOTTON_GENERIC)
