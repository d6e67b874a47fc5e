"""Explicit tuple families built from Pell numbers.

Every generator hands its triple to the membership oracle and returns the
resulting :class:`VerificationRecord`; nothing is trusted unverified.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .exact import DomainError, frac_part
from .membership import CEIL, FLOOR, VerificationRecord, bracket_values, verify_index_triple
from .pell import ceil_sqrt2_times, pell, r_of


class PreconditionError(DomainError):
    """A construction was asked for parameters its guarantee does not cover."""


@dataclass
class CandidateTuple:
    alpha: Fraction
    source: dict
    idx: tuple
    values: tuple
    record: VerificationRecord

    @property
    def verified(self) -> bool:
        return self.record.verified

    def to_dict(self) -> dict:
        return {
            "alpha": f"{self.alpha.numerator}/{self.alpha.denominator}",
            "source": {k: (str(v) if isinstance(v, Fraction) else v) for k, v in self.source.items()},
            "idx": [str(v) for v in self.idx],
            "values": [str(v) for v in self.values],
            "verified": self.verified,
            "failing": self.record.failing,
        }


def _candidate(alpha, source, idx, bracket) -> CandidateTuple:
    idx = tuple(sorted(idx))
    rec = verify_index_triple(alpha, idx, bracket)
    return CandidateTuple(alpha, source, idx, bracket_values(alpha, idx, bracket), rec)


def floor_family(alpha: Fraction, n: int) -> CandidateTuple:
    """(y, y, y^2/2 - 1) with y = P_{2 r n}, r = r(den alpha)."""
    alpha = Fraction(alpha)
    if not 0 < alpha < 1:
        raise DomainError("floor_family needs alpha in (0, 1)")
    if n < 1:
        raise DomainError("n must be >= 1")
    r = r_of(alpha.denominator)
    y = pell(2 * r * n)
    src = {"family": "floor", "q": alpha.denominator, "p": alpha.numerator, "r": r, "n": n}
    return _candidate(alpha, src, (y, y, y * y // 2 - 1), FLOOR)


def lower_bound_formula(q: int, x) -> int:
    """floor(log(16 x) / (4 ceil(sqrt 2 q) log(1 + sqrt 2))).

    Evaluated at 128 bits; when the quotient sits within 2^-64 of an
    integer the precision is doubled until the floor is unambiguous.
    """
    x = Fraction(x)
    if x <= 1:
        raise DomainError("x must exceed 1")
    c = ceil_sqrt2_times(q)
    prec = 128
    while True:
        with mpmath.workprec(prec):
            val = mpmath.log(16 * mpmath.mpf(x.numerator) / x.denominator) / (
                4 * c * mpmath.log(1 + mpmath.sqrt(2))
            )
            k = int(mpmath.floor(val))
            gap = mpmath.mpf(2) ** -64
            if (val - k > gap and k + 1 - val > gap) or prec >= 1 << 14:
                return k
        prec *= 2


def stability_delta(alpha: Fraction, W: int) -> Fraction:
    """(1 - {alpha W}) / W: floor(beta W) == floor(alpha W) on [alpha, alpha + delta)."""
    alpha = Fraction(alpha)
    if alpha <= 0 or W <= 0:
        raise DomainError("alpha and W must be positive")
    return (1 - frac_part(alpha, W)) / W


@dataclass(frozen=True)
class RegionSpec:
    s: Fraction
    t: Fraction

    def __post_init__(self):
        object.__setattr__(self, "s", Fraction(self.s))
        object.__setattr__(self, "t", Fraction(self.t))
        if not 0 < self.s < self.t < 1:
            raise DomainError("region needs 0 < s < t < 1")

    @property
    def a(self) -> Fraction:
        return max(Fraction(0), (1 - self.t) / 2 - self.s)

    def contains(self, alpha: Fraction) -> bool:
        return self.s <= alpha <= self.t


def _frac_pair(alpha: Fraction, n: int) -> tuple[Fraction, Fraction]:
    """({alpha P_{2n}^4 / 4}, {alpha P_{2n}^2}); P_{2n} is even so both are exact."""
    y2 = pell(2 * n) ** 2
    return frac_part(alpha, y2 * y2 // 4), frac_part(alpha, y2)


def a_set_member(alpha: Fraction, region: RegionSpec, n: int) -> bool:
    alpha = Fraction(alpha)
    if not region.contains(alpha):
        raise DomainError(f"alpha={alpha} is outside [{region.s}, {region.t}]")
    u, v = _frac_pair(alpha, n)
    top = (1 - region.t) / 2
    return region.a <= u <= top and 0 <= v <= top


def floor_family_A(alpha: Fraction, region: RegionSpec, n: int) -> CandidateTuple:
    alpha = Fraction(alpha)
    if not a_set_member(alpha, region, n):
        raise PreconditionError(f"n={n} is not in the A-set for alpha={alpha}")
    y = pell(2 * n)
    src = {"family": "floor_A", "s": region.s, "t": region.t, "n": n}
    return _candidate(alpha, src, (y, y, y * y // 2 - 1), FLOOR)


def ceil_family_odd(q: int, p: int, n: int) -> CandidateTuple:
    """Ceiling triple (y, y, y^2/2 - 1), y = P_{qn-1}, at alpha = p / P_q.

    Always verified by the oracle; small parameters are known to fail.
    """
    if q < 1 or q % 2 == 0:
        raise DomainError("q must be an odd positive integer")
    if n < 1 or n % 2 == 0:
        raise DomainError("n must be an odd positive integer")
    Pq = pell(q)
    if not (0 < p and 9 * p < 4 * Pq):
        raise DomainError(f"p must satisfy 0 < p < (4/9) P_q = (4/9)*{Pq}")
    alpha = Fraction(p, Pq)
    y = pell(q * n - 1)
    src = {"family": "ceil_odd", "q": q, "p": p, "n": n}
    return _candidate(alpha, src, (y, y, y * y // 2 - 1), CEIL)


CEIL_UNION = (
    (Fraction(1, 8), Fraction(3, 16)),
    (Fraction(1, 3), Fraction(3, 8)),
    (Fraction(5, 9), Fraction(9, 16)),
)


def in_ceil_union(alpha: Fraction) -> bool:
    """alpha in (1/8, 3/16] u (1/3, 3/8] u (5/9, 9/16]."""
    return any(lo < alpha <= hi for lo, hi in CEIL_UNION)


def _delta(x: Fraction) -> Fraction:
    # {x} off the integers, 1 on them: ceil(x) = x + 1 - delta(x)
    f = x - (x.numerator // x.denominator)
    return f if f else Fraction(1)


def delta_conditions(alpha: Fraction) -> tuple[Fraction, Fraction]:
    alpha = Fraction(alpha)
    d4, d9, d16 = _delta(4 * alpha), _delta(9 * alpha), _delta(16 * alpha)
    return 1 - alpha + d9 - 2 * d4, 1 - 3 * alpha + d16 - d9 - d4


def ceil_family_intervals(alpha: Fraction, n: int) -> CandidateTuple:
    """Ceiling triple (y, y, y^2/2) with y = P_{rn-2}; note no ``- 1``."""
    alpha = Fraction(alpha)
    if not in_ceil_union(alpha):
        raise DomainError(f"alpha={alpha} is outside (1/8,3/16] u (1/3,3/8] u (5/9,9/16]")
    if n < 1 or n % 4:
        raise DomainError("n must be a positive multiple of 4")
    r = r_of(alpha.denominator)
    y = pell(r * n - 2)
    src = {"family": "ceil_intervals", "r": r, "n": n}
    return _candidate(alpha, src, (y, y, y * y // 2), CEIL)


def region_b(region: RegionSpec, u: Fraction, v: Fraction) -> bool:
    """(u, v) in B1 n B2 n B3 n (0,1)^2; all inequalities strict."""
    s, t = region.s, region.t
    return (
        0 < u < 1
        and 0 < v < 1
        and (1 - s) / 2 < u < (2 - t) / 2
        and 1 - s < u + v < 2 - t
        and t < u - v < 1 + s
    )


def ceil_family_region(alpha: Fraction, region: RegionSpec, n: int) -> CandidateTuple:
    alpha = Fraction(alpha)
    if not region.contains(alpha):
        raise PreconditionError(f"alpha={alpha} is outside [{region.s}, {region.t}]")
    v, u = _frac_pair(alpha, n)
    if not region_b(region, u, v):
        raise PreconditionError(f"n={n}: ({u}, {v}) is outside the region")
    y = pell(2 * n)
    src = {"family": "ceil_region", "s": region.s, "t": region.t, "n": n}
    return _candidate(alpha, src, (y, y, y * y // 2 - 1), CEIL)
