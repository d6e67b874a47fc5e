"""Pell numbers P_n (0, 1, 2, 5, 12, 29, ...) and their companions."""
from __future__ import annotations

import math
import threading

from .exact import DomainError

# phi_P = 1 + sqrt(2), stored as the pair (a, b) meaning a + b*sqrt(2).
PHI_P = (1, 1)


class PellTable:
    """Growable memo of Pell numbers; extension is lock-guarded."""

    def __init__(self):
        self.values = [0, 1]
        self._lock = threading.Lock()

    def get(self, n: int) -> int:
        if n < 0:
            raise DomainError("Pell index must be nonnegative")
        vals = self.values
        if n < len(vals):
            return vals[n]
        with self._lock:
            vals = self.values
            while len(vals) <= n:
                vals.append(2 * vals[-1] + vals[-2])
            return vals[n]

    def __len__(self):
        return len(self.values)


_TABLE = PellTable()


def pell(n: int) -> int:
    return _TABLE.get(n)


def half_companion(n: int) -> int:
    """G_n = P_{n+1} - P_n, the numerator of the n-th convergent of sqrt(2)."""
    return pell(n + 1) - pell(n)


def addition_law(m: int, n: int) -> int:
    """P_{m+1} P_n + P_m P_{n-1}, which equals P_{m+n}."""
    if m < 0 or n < 1:
        raise DomainError("addition law needs m >= 0 and n >= 1")
    return pell(m + 1) * pell(n) + pell(m) * pell(n - 1)


def ceil_sqrt2_times(q: int) -> int:
    """Exact ceil(sqrt(2) * q) for integer q >= 0."""
    s = math.isqrt(2 * q * q)
    return s if s * s == 2 * q * q else s + 1


def r_of(q: int) -> int:
    """Smallest r >= 2 with q | P_r.

    Runs the recurrence modulo q; the result never exceeds ceil(sqrt(2) q).
    """
    if q < 1:
        raise DomainError("q must be a positive integer")
    bound = ceil_sqrt2_times(q)
    if q == 1:
        return 2
    prev, cur = 1 % q, 2 % q  # P_1, P_2
    r = 2
    while cur != 0:
        prev, cur = cur, (2 * cur + prev) % q
        r += 1
        if r > bound:
            raise AssertionError(f"r({q}) exceeded ceil(sqrt(2)*q) = {bound}")
    return r


def phi_power(m: int) -> tuple[int, int]:
    """(a, b) with (1 + sqrt 2)**m = a + b sqrt 2, i.e. (P_m + P_{m-1}, P_m)."""
    if m == 0:
        return 1, 0
    return pell(m) + pell(m - 1), pell(m)
