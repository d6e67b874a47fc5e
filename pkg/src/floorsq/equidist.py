"""Exact fractional-part sequences ({alpha P_2n^4 / 4}, {alpha P_2n^2}) and
the empirical equidistribution statistics computed from them."""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .construct import RegionSpec, a_set_member
from .exact import DomainError, frac_part
from .pell import pell

WEYL_PREC = 128


@dataclass(frozen=True)
class FracPoint2:
    u: Fraction
    v: Fraction
    n: int


def frac_point(alpha: Fraction, n: int) -> FracPoint2:
    y2 = pell(2 * n) ** 2
    return FracPoint2(frac_part(alpha, y2 * y2 // 4), frac_part(alpha, y2), n)


def frac_sequence(alpha: Fraction, N: int) -> list[FracPoint2]:
    alpha = Fraction(alpha)
    if N < 1:
        raise DomainError("N must be >= 1")
    return [frac_point(alpha, n) for n in range(1, N + 1)]


def frac_point_modular(alpha: Fraction, n: int) -> FracPoint2:
    """Same point via residues modulo 4 * den(alpha), never forming P^4."""
    p, q = alpha.numerator, alpha.denominator
    mod = 4 * q
    y2 = pow(pell(2 * n), 2, mod)  # P_2n^2 mod 4q; divisible by 4
    u = (p * ((y2 * y2 // 4) % q)) % q  # y2*y2/4 = P^4/4 (mod q) since 4 | y2
    v = (p * y2) % q
    return FracPoint2(Fraction(u, q), Fraction(v, q), n)


def weyl_sum(h1: int, h2: int, alpha: Fraction, N: int, points=None) -> float:
    """|N^-1 sum_n e(h1 u_n + h2 v_n)| at 128-bit working precision."""
    if h1 == 0 and h2 == 0:
        raise DomainError("(h1, h2) must be nonzero")
    pts = points if points is not None else frac_sequence(alpha, N)
    with mpmath.workprec(WEYL_PREC):
        acc = mpmath.mpc(0)
        for pt in pts[:N]:
            phase = (h1 * pt.u + h2 * pt.v) % 1
            acc += mpmath.expjpi(2 * mpmath.mpf(phase.numerator) / phase.denominator)
        return float(abs(acc) / N)


def box_frequency(alpha: Fraction, N: int, box, points=None) -> Fraction:
    """Exact share of the first N points inside ``[u0, u1) x [v0, v1)``."""
    (u0, u1), (v0, v1) = box
    if not (0 <= u0 <= u1 <= 1 and 0 <= v0 <= v1 <= 1):
        raise DomainError("box must lie in [0, 1]^2")
    pts = points if points is not None else frac_sequence(alpha, N)
    hits = sum(1 for pt in pts[:N] if u0 <= pt.u < u1 and v0 <= pt.v < v1)
    return Fraction(hits, N)


def density_A(alpha: Fraction, region: RegionSpec, N: int) -> tuple[Fraction, Fraction]:
    """(empirical share of n <= N in the A-set, predicted ((1-t)/2)((1-t)/2 - a))."""
    hits = sum(1 for n in range(1, N + 1) if a_set_member(alpha, region, n))
    top = (1 - region.t) / 2
    return Fraction(hits, N), top * (top - region.a)


def random_alpha(rng: random.Random, lo: Fraction, hi: Fraction, bits: int = 64) -> Fraction:
    """Uniform rational in (lo, hi) whose reduced denominator has exactly
    ``bits`` bits; numerators sharing a factor with it are redrawn."""
    q = rng.getrandbits(bits) | (1 << (bits - 1)) | 1
    while True:
        p = rng.randrange(int(lo * q) + 1, int(hi * q))
        if math.gcd(p, q) == 1:
            return Fraction(p, q)
