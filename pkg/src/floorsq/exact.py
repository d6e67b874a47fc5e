"""Exact arithmetic substrate: rationals, integer square roots, and
floor/ceiling/fractional parts of ``alpha * n**2``.

Every scalar ``alpha`` in the package is a :class:`fractions.Fraction`.
Irrational values are modelled by a caller-supplied rational approximant;
see :func:`approximant_ok` for the precision rule.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Optional

Rational = Fraction


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


def mk_rational(p: int, q: int = 1) -> Fraction:
    if q == 0:
        raise DomainError("denominator must be nonzero")
    return Fraction(int(p), int(q))


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or an exact decimal such as ``"0.55"``.

    Decimals are read digit by digit, so ``"0.55"`` is exactly 11/20.
    """
    text = text.strip()
    try:
        if "/" in text:
            p, q = text.split("/", 1)
            return mk_rational(int(p), int(q))
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"not an exact rational: {text!r}") from exc


def format_rational(a: Fraction) -> str:
    return f"{a.numerator}/{a.denominator}"


def isqrt(n: int) -> int:
    if n < 0:
        raise DomainError("isqrt of a negative number")
    return math.isqrt(n)


def is_square(n: int) -> bool:
    return n >= 0 and math.isqrt(n) ** 2 == n


def _check_positive(alpha: Fraction) -> None:
    if alpha <= 0:
        raise DomainError(f"alpha must be positive, got {alpha}")


def floor_mul_sq(alpha: Fraction, n: int) -> int:
    _check_positive(alpha)
    return (alpha.numerator * n * n) // alpha.denominator


def ceil_mul_sq(alpha: Fraction, n: int) -> int:
    _check_positive(alpha)
    return -((-alpha.numerator * n * n) // alpha.denominator)


def floor_q(x: Fraction) -> int:
    return x.numerator // x.denominator


def ceil_q(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


def frac_part(alpha: Fraction, N: int = 1) -> Fraction:
    """Exact ``{alpha * N}`` in ``[0, 1)``."""
    num = alpha.numerator * N
    return Fraction(num % alpha.denominator, alpha.denominator)


def square_in_range(lo: int, hi: int) -> Optional[int]:
    """Smallest ``n >= 0`` with ``lo <= n*n <= hi``, or ``None``."""
    if hi < 0 or lo > hi:
        return None
    if lo <= 0:
        return 0
    s = math.isqrt(lo - 1) + 1  # ceil(sqrt(lo))
    return s if s * s <= hi else None


def min_admissible_index(alpha: Fraction) -> int:
    """Smallest integer ``n`` with ``n >= alpha**(-1/2)``, i.e. ``p n^2 >= q``."""
    _check_positive(alpha)
    p, q = alpha.numerator, alpha.denominator
    n = math.isqrt(q // p) if q >= p else 1
    while p * n * n < q:
        n += 1
    while n > 1 and p * (n - 1) ** 2 >= q:
        n -= 1
    return max(n, 1)


SAFETY_BITS = 32


def approximant_ok(alpha_hat: Fraction, max_index: int) -> bool:
    """Whether a rational approximant may stand in for an irrational alpha
    when fractional parts ``{alpha N}`` with ``N <= max_index`` are consumed.

    The denominator must exceed ``max_index * 2**32``.
    """
    return alpha_hat.denominator > max_index << SAFETY_BITS
