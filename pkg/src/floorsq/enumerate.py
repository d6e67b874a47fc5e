"""Exhaustive searches: T_{<=x}(alpha) and its ceiling twin, the variant
brick set V(x), the shifted box sets A(x, a1, a2, a3), and divisor-sum
profiles."""
from __future__ import annotations

import math
import time
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import _kernels
from .divisors import divisors, factor_counts, divisors_from_counts, tau
from .exact import DomainError, format_rational, min_admissible_index
from .membership import CEIL, FLOOR, verify_index_triple

DEFAULT_MAX_PAIRS = 300_000_000
DEFAULT_SHIFT_CAP = 64


class ResourceError(RuntimeError):
    """An enumeration would exceed its memory or word-size budget."""


@dataclass
class EnumReport:
    alpha: Fraction
    x: int
    bracket: str
    index_triples: list
    value_triples: list
    first_x: dict
    stats: dict = field(default_factory=dict)

    def step_points(self) -> list[tuple[int, int]]:
        """(x, #T_{<=x}) at each jump of the counting function."""
        jumps = sorted(self.first_x.values())
        pts = []
        for i, xv in enumerate(jumps, 1):
            if pts and pts[-1][0] == xv:
                pts[-1] = (xv, i)
            else:
                pts.append((xv, i))
        return pts

    def count_at(self, x: int) -> int:
        return sum(1 for v in self.first_x.values() if v <= x)

    def to_dict(self) -> dict:
        return {
            "alpha": format_rational(self.alpha),
            "x": self.x,
            "bracket": self.bracket,
            "count_index_triples": len(self.index_triples),
            "count_value_triples": len(self.value_triples),
            "index_triples": [[str(n) for n in t] for t in self.index_triples],
            "value_triples": [
                {"values": [str(v) for v in t], "first_x": self.first_x[t]} for t in self.value_triples
            ],
        }


def _bracket_array(alpha: Fraction, ns: np.ndarray, bracket: str) -> np.ndarray:
    p, q = alpha.numerator, alpha.denominator
    sq = p * ns * ns
    return sq // q if bracket == FLOOR else -((-sq) // q)


def _enum(alpha, x, bracket, workers=1, max_pairs=DEFAULT_MAX_PAIRS, recheck=False) -> EnumReport:
    alpha = Fraction(alpha)
    if not 0 < alpha <= 1:
        raise DomainError(f"alpha must lie in (0, 1], got {alpha}")
    x = int(x)
    if x < 2:
        raise DomainError("x must be >= 2")
    p, q = alpha.numerator, alpha.denominator
    n0 = min_admissible_index(alpha) if bracket == FLOOR else 1
    stats = {"backend": _kernels.backend(), "n_min": n0}
    if x < n0:
        return EnumReport(alpha, x, bracket, [], [], {}, stats)
    if p * x * x >= _kernels.INT64_LIMIT or not _kernels.int64_safe(p, q, 3 * (p * x * x // q + 1)):
        raise ResourceError(f"alpha={alpha}, x={x} overflows the int64 kernels")
    _kernels.set_workers(workers)

    t0 = time.perf_counter()
    ns = np.arange(n0, x + 1, dtype=np.int64)
    vals = _bracket_array(alpha, ns, bracket)
    mode = _kernels.FLOOR_MODE if bracket == FLOOR else _kernels.CEIL_MODE
    try:
        ii, jj = _kernels.pair_scan(vals, p, q, mode, workers=workers, max_pairs=max_pairs)
    except MemoryError as exc:
        raise ResourceError(f"pair relation has {exc.args[0]} edges, over the {max_pairs} guard") from None
    t1 = time.perf_counter()
    indptr, indices = _kernels.symmetric_csr(len(vals), ii, jj)
    tri = _kernels.triangle_scan(indptr, indices, vals, p, q, mode)
    t2 = time.perf_counter()

    index_triples = sorted(tuple(int(n0 + t) for t in row) for row in tri)
    first_x = {}
    for idx in index_triples:
        v = tuple(int(vals[n - n0]) for n in idx)
        if v not in first_x or idx[2] < first_x[v]:
            first_x[v] = idx[2]
    if recheck:
        for idx in index_triples:
            if not verify_index_triple(alpha, idx, bracket).verified:
                raise AssertionError(f"enumerator emitted unverified triple {idx}")
    stats.update(pairs=int(len(ii)), pair_seconds=t1 - t0, triangle_seconds=t2 - t1)
    return EnumReport(alpha, x, bracket, index_triples, sorted(first_x), first_x, stats)


def enum_T(alpha, x, workers=1, max_pairs=DEFAULT_MAX_PAIRS, recheck=False) -> EnumReport:
    """All of T_{<=x}(alpha) together with its witness-index view U_{<=x}(alpha).

    Pairs (n1, n2) whose values sum into S(alpha) are found by an all-pairs
    scan; triples are triangles of that graph passing the triple-sum test.
    """
    return _enum(alpha, x, FLOOR, workers, max_pairs, recheck)


def enum_Tbar(alpha, x, workers=1, max_pairs=DEFAULT_MAX_PAIRS, recheck=False) -> EnumReport:
    return _enum(alpha, x, CEIL, workers, max_pairs, recheck)


def _square_difference_pairs(N: int, counts=None):
    """All (u, v) with u*v = N > 0, u <= v, u = v (mod 2): then
    ((v - u)/2)**2 + N == ((v + u)/2)**2."""
    if counts is None:
        counts = factor_counts(N)
    out = []
    for d in divisors_from_counts(counts):
        e = N // d
        if d > e:
            break
        if (d - e) % 2 == 0:
            out.append((d, e))
    return out


def partners_V(n3: int) -> list[int]:
    """All n in [2, n3] with n^2 + n3^2 - 1 a perfect square."""
    if n3 < 2:
        return []
    counts = factor_counts(n3 - 1) + factor_counts(n3 + 1)
    res = []
    for d, e in _square_difference_pairs(n3 * n3 - 1, counts):
        n = (e - d) // 2
        if 2 <= n <= n3:
            res.append(n)
    return sorted(res)


def enum_V(x: int) -> list[tuple[int, int, int]]:
    """V(x): n1 <= n2 <= n3 <= x, all >= 2, with n_i^2 + n_j^2 - 1 square for
    each pair and n1^2 + n2^2 + n3^2 - 2 square."""
    if x < 2:
        raise DomainError("x must be >= 2")
    adj = defaultdict(set)
    for n3 in range(2, x + 1):
        for n in partners_V(n3):
            adj[n].add(n3)
            adj[n3].add(n)
    out = []
    for n1 in sorted(adj):
        for n2 in sorted(v for v in adj[n1] if v >= n1):
            for n3 in sorted(adj[n1] & adj[n2]):
                if n3 < n2:
                    continue
                s = n1 * n1 + n2 * n2 + n3 * n3 - 2
                if math.isqrt(s) ** 2 == s:
                    out.append((n1, n2, n3))
    return sorted(out)


def _shift_partners(N: int, x: int) -> list[int]:
    """All l in [1, x] with l**2 + N = y**2 for some y >= 1."""
    if N == 0:
        return list(range(1, x + 1))
    M = abs(N)
    res = set()
    for u in divisors(M):
        v = M // u
        if (v - u) % 2:
            continue
        if N > 0 and u < v:
            l = (v - u) // 2
        elif N < 0 and v > u:
            l = (v + u) // 2  # d = -u, e = v gives l = (v + u)/2, y = (v - u)/2
            if (v - u) // 2 < 1:
                continue
        else:
            continue
        if 1 <= l <= x:
            res.add(l)
    return sorted(res)


def enum_A_box(x: int, a1: int, a2: int, a3: int, cap: int = DEFAULT_SHIFT_CAP):
    """(count, tuples) for A(x, a1, a2, a3): ordered (k, l, m) in [1, x]^3 with
    k^2 + l^2 - a1, k^2 + m^2 - a2, m^2 + l^2 - a3 all squares of positive
    integers."""
    if max(abs(a1), abs(a2), abs(a3)) > cap:
        raise DomainError(f"|a_i| must not exceed {cap}")
    out = []
    for k in range(1, x + 1):
        ls = _shift_partners(k * k - a1, x)
        if not ls:
            continue
        ms = _shift_partners(k * k - a2, x)
        for l in ls:
            for m in ms:
                w2 = m * m + l * l - a3
                if w2 >= 1 and math.isqrt(w2) ** 2 == w2:
                    out.append((k, l, m))
    return len(out), out


def _log_grid(x: int, per_octave: int = 4) -> list[int]:
    pts = {x}
    j = 0
    while True:
        v = int(round(2 ** (j / per_octave)))
        if v > x:
            break
        if v >= 2:
            pts.add(v)
        j += 1
    return sorted(pts)


def divisor_sum_profile(x: int, a1: int, a2: int, grid=None) -> list[dict]:
    """Partial sums of tau(k^2 - a1) tau(k^2 - a2) over 2 <= k <= X (k^2 not
    in {a1, a2}) on a log-spaced grid of X, with the ratio to X (log X)^15.

    tau counts signed divisors, so tau(4) = 6.
    """
    if x < 2:
        raise DomainError("x must be >= 2")
    grid = sorted(set(grid)) if grid else _log_grid(x)
    rows, total, gi = [], 0, 0
    for k in range(2, x + 1):
        k2 = k * k
        if k2 != a1 and k2 != a2:
            total += tau(k2 - a1) * tau(k2 - a2)
        while gi < len(grid) and grid[gi] == k:
            X = grid[gi]
            bound = X * math.log(X) ** 15 if X > 1 else float("nan")
            rows.append({"X": X, "sum": total, "ratio": total / bound if X > 1 else None})
            gi += 1
    return rows
