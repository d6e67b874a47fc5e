"""Decision procedures for membership in S(alpha) = {floor(alpha n^2)} and
Sbar(alpha) = {ceil(alpha n^2)}, and seven-sum verification of triples."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .exact import DomainError, ceil_mul_sq, floor_mul_sq, square_in_range

FLOOR = "floor"
CEIL = "ceil"

SUM_LABELS = ("k", "l", "m", "k+l", "l+m", "m+k", "k+l+m")


@dataclass(frozen=True)
class MembershipWitness:
    member: bool
    witness_n: Optional[int] = None

    def __bool__(self):
        return self.member


@dataclass
class VerificationRecord:
    alpha: Fraction
    bracket: str
    idx: Optional[tuple]
    values: tuple
    checks: dict = field(default_factory=dict)

    @property
    def verified(self) -> bool:
        return len(self.checks) == 7 and all(w.member for w in self.checks.values())

    @property
    def failing(self) -> list:
        return [lab for lab in SUM_LABELS if not self.checks[lab].member]

    def to_dict(self) -> dict:
        return {
            "alpha": f"{self.alpha.numerator}/{self.alpha.denominator}",
            "bracket": self.bracket,
            "idx": None if self.idx is None else [str(v) for v in self.idx],
            "values": [str(v) for v in self.values],
            "verified": self.verified,
            "checks": {
                lab: {
                    "member": w.member,
                    "witness": None if w.witness_n is None else str(w.witness_n),
                }
                for lab, w in self.checks.items()
            },
        }


def _check_alpha(alpha: Fraction) -> None:
    if not 0 < alpha <= 1:
        raise DomainError(f"alpha must lie in (0, 1], got {alpha}")


def in_S(alpha: Fraction, m: int) -> MembershipWitness:
    """Is m = floor(alpha n^2) for some n >= alpha^(-1/2)?

    For m >= 1 the lower bound on n is automatic, so it suffices to look
    for a square in [ceil(q m / p), floor((q (m + 1) - 1) / p)].
    """
    _check_alpha(alpha)
    if m <= 0:
        raise DomainError("S(alpha) only holds positive integers")
    p, q = alpha.numerator, alpha.denominator
    lo = -((-q * m) // p)
    hi = (q * (m + 1) - 1) // p
    n = square_in_range(lo, hi)
    return MembershipWitness(n is not None, n)


def in_Sbar(alpha: Fraction, m: int) -> MembershipWitness:
    """Is m = ceil(alpha n^2) for some n >= 1?"""
    _check_alpha(alpha)
    if m <= 0:
        raise DomainError("Sbar(alpha) only holds positive integers")
    p, q = alpha.numerator, alpha.denominator
    lo = (q * (m - 1)) // p + 1
    hi = (q * m) // p
    n = square_in_range(max(lo, 1), hi)
    return MembershipWitness(n is not None, n)


def _member(alpha, m, bracket):
    # value 0 (an index below alpha^(-1/2)) can never be a member
    if m <= 0:
        return MembershipWitness(False, None)
    return in_S(alpha, m) if bracket == FLOOR else in_Sbar(alpha, m)


def verify_values(alpha: Fraction, values, bracket: str = FLOOR, idx=None) -> VerificationRecord:
    """Check the seven sums k, l, m, k+l, l+m, m+k, k+l+m of a value triple."""
    k, l, m = values
    sums = (k, l, m, k + l, l + m, m + k, k + l + m)
    rec = VerificationRecord(alpha, bracket, idx, tuple(values))
    for lab, s in zip(SUM_LABELS, sums):
        rec.checks[lab] = _member(alpha, s, bracket)
    return rec


def bracket_values(alpha: Fraction, idx, bracket: str = FLOOR) -> tuple:
    f = floor_mul_sq if bracket == FLOOR else ceil_mul_sq
    return tuple(f(alpha, n) for n in idx)


def verify_index_triple(alpha: Fraction, idx, bracket: str = FLOOR) -> VerificationRecord:
    """Non-raising verification; indices are sorted, low indices simply fail."""
    idx = tuple(sorted(int(n) for n in idx))
    return verify_values(alpha, bracket_values(alpha, idx, bracket), bracket, idx)


def verify_T_tuple(alpha: Fraction, idx) -> VerificationRecord:
    _check_alpha(alpha)
    p, q = alpha.numerator, alpha.denominator
    for n in idx:
        if n * n * p < q:
            raise DomainError(f"index {n} is below alpha^(-1/2)")
    return verify_index_triple(alpha, idx, FLOOR)


def verify_Tbar_tuple(alpha: Fraction, idx) -> VerificationRecord:
    _check_alpha(alpha)
    if any(n < 1 for n in idx):
        raise DomainError("indices must be positive")
    return verify_index_triple(alpha, idx, CEIL)
