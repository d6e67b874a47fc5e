"""Integer factorization and divisor counting.

Trial division by the primes below 2**16, a Miller-Rabin test that is
deterministic below 3.3e24, and Brent's variant of Pollard rho for what
remains.
"""
from __future__ import annotations

import math
import random
from collections import Counter

from .exact import DomainError

TRIAL_LIMIT = 1 << 16
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_DETERMINISTIC_BELOW = 3317044064679887385961981


def _small_primes(limit: int) -> list[int]:
    sieve = bytearray([1]) * limit
    sieve[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(limit - 1) + 1):
        if sieve[i]:
            sieve[i * i::i] = bytearray(len(range(i * i, limit, i)))
    return [i for i in range(limit) if sieve[i]]


SMALL_PRIMES = _small_primes(TRIAL_LIMIT)


def is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    bases = list(_MR_BASES)
    if n >= _MR_DETERMINISTIC_BELOW:
        rng = random.Random(n)
        bases += [rng.randrange(2, n - 1) for _ in range(24)]
    for a in bases:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def pollard_brent(n: int, seed: int = 1) -> int:
    """A nontrivial factor of the odd composite n."""
    if n % 2 == 0:
        return 2
    rng = random.Random(seed)
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def _split(n: int, out: list[int]) -> None:
    if n == 1:
        return
    if is_probable_prime(n):
        out.append(n)
        return
    d = pollard_brent(n)
    _split(d, out)
    _split(n // d, out)


def factorize(n: int) -> list[int]:
    """Sorted prime factors of n >= 2, with multiplicity."""
    if n < 2:
        raise DomainError("factorize needs n >= 2")
    out = []
    m = n
    for p in SMALL_PRIMES:
        if p * p > m:
            break
        while m % p == 0:
            out.append(p)
            m //= p
    if m > 1:
        if m < TRIAL_LIMIT * TRIAL_LIMIT:
            out.append(m)
        else:
            _split(m, out)
    out.sort()
    assert math.prod(out) == n
    return out


def factor_counts(n: int) -> Counter:
    n = abs(n)
    return Counter(factorize(n)) if n > 1 else Counter()


def divisors_from_counts(counts) -> list[int]:
    divs = [1]
    for p, e in counts.items():
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def divisors(n: int) -> list[int]:
    if n == 0:
        raise DomainError("0 has infinitely many divisors")
    return divisors_from_counts(factor_counts(n))


def tau_plus(n: int) -> int:
    """Number of positive divisors of n != 0."""
    if n == 0:
        raise DomainError("tau is undefined at 0")
    return math.prod(e + 1 for e in factor_counts(n).values())


def tau(n: int) -> int:
    """Number of positive and negative divisors; always 2 * tau_plus(n)."""
    return 2 * tau_plus(n)
