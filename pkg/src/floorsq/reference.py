"""Slow, independent oracles used to check the fast paths.

Nothing here calls the enumeration kernels; the only shared piece is the
seven-sum membership check.
"""
from __future__ import annotations

import math
from fractions import Fraction

from .enumerate import EnumReport
from .exact import DomainError
from .membership import CEIL, FLOOR, in_S, in_Sbar, verify_T_tuple, verify_Tbar_tuple

REFERENCE_MAX_X = 300


def reference_enum(alpha: Fraction, x: int, bracket: str = FLOOR) -> EnumReport:
    """Triple loop over n1 <= n2 <= n3 <= x; a pair whose sum is not a member
    is skipped before its inner loop runs."""
    alpha = Fraction(alpha)
    if x > REFERENCE_MAX_X:
        raise DomainError(f"reference enumeration is capped at x = {REFERENCE_MAX_X}")
    p, q = alpha.numerator, alpha.denominator
    if bracket == FLOOR:
        member, verify = in_S, verify_T_tuple
        ns = [n for n in range(1, x + 1) if p * n * n >= q]
        val = lambda n: p * n * n // q
    else:
        member, verify = in_Sbar, verify_Tbar_tuple
        ns = list(range(1, x + 1))
        val = lambda n: -((-p * n * n) // q)
    index_triples, first_x = [], {}
    for a, n1 in enumerate(ns):
        for b in range(a, len(ns)):
            n2 = ns[b]
            if not member(alpha, val(n1) + val(n2)).member:
                continue
            for n3 in ns[b:]:
                rec = verify(alpha, (n1, n2, n3))
                if rec.verified:
                    index_triples.append((n1, n2, n3))
                    v = rec.values
                    first_x[v] = min(first_x.get(v, n3), n3)
    return EnumReport(alpha, x, bracket, sorted(index_triples), sorted(first_x), first_x, {"backend": "reference"})


def reference_enum_T(alpha: Fraction, x: int) -> EnumReport:
    return reference_enum(alpha, x, FLOOR)


def reference_enum_Tbar(alpha: Fraction, x: int) -> EnumReport:
    return reference_enum(alpha, x, CEIL)


def scan_S(alpha: Fraction, m_max: int, bracket: str = FLOOR) -> dict[int, int]:
    """value -> smallest witness, for every member <= m_max, by listing
    bracket(alpha n^2) for all n up to ceil(sqrt((m_max + 1) / alpha))."""
    alpha = Fraction(alpha)
    p, q = alpha.numerator, alpha.denominator
    n_max = math.isqrt(((m_max + 1) * q) // p) + 2
    out = {}
    for n in range(1, n_max + 1):
        if bracket == FLOOR:
            if p * n * n < q:
                continue
            v = p * n * n // q
        else:
            v = -((-p * n * n) // q)
        if 1 <= v <= m_max and v not in out:
            out[v] = n
    return out


def brute_V(x: int) -> list[tuple[int, int, int]]:
    sq = lambda v: math.isqrt(v) ** 2 == v
    out = []
    for n1 in range(2, x + 1):
        for n2 in range(n1, x + 1):
            if not sq(n1 * n1 + n2 * n2 - 1):
                continue
            for n3 in range(n2, x + 1):
                if (sq(n1 * n1 + n3 * n3 - 1) and sq(n2 * n2 + n3 * n3 - 1)
                        and sq(n1 * n1 + n2 * n2 + n3 * n3 - 2)):
                    out.append((n1, n2, n3))
    return out


def brute_A_box(x: int, a1: int, a2: int, a3: int) -> list[tuple[int, int, int]]:
    def ok(v):
        return v >= 1 and math.isqrt(v) ** 2 == v
    return [
        (k, l, m)
        for k in range(1, x + 1)
        for l in range(1, x + 1)
        if ok(k * k + l * l - a1)
        for m in range(1, x + 1)
        if ok(k * k + m * m - a2) and ok(m * m + l * l - a3)
    ]
