import math
import threading

import mpmath
import pytest
from hypothesis import given, strategies as st

from floorsq.pell import (
    PellTable, addition_law, ceil_sqrt2_times, half_companion, pell, phi_power, r_of,
)


def _pell_list(n):
    out = [0, 1]
    while len(out) <= n:
        out.append(2 * out[-1] + out[-2])
    return out


PL = _pell_list(260)


@pytest.mark.parametrize("n,want", [(0, 0), (4, 12), (8, 408)])
def test_pell_examples(n, want):
    assert pell(n) == want


def test_pell_matches_independent_list():
    assert [pell(n) for n in range(261)] == PL


@pytest.mark.parametrize("n,want", [(1, 1), (4, 17), (0, 1)])
def test_half_companion_examples(n, want):
    assert half_companion(n) == want


@pytest.mark.parametrize("m,n,want", [(2, 3, 29), (0, 5, 29), (3, 1, 12)])
def test_addition_law_examples(m, n, want):
    assert addition_law(m, n) == want


@given(st.integers(0, 120), st.integers(1, 120))
def test_addition_law_contract(m, n):
    assert addition_law(m, n) == pell(m + n)


def test_parity_law():
    assert all((pell(n) % 2 == 0) == (n % 2 == 0) for n in range(201))


def test_recurrence_and_cassini():
    for n in range(1, 201):
        assert pell(n + 1) == 2 * pell(n) + pell(n - 1)
        assert pell(n + 1) * pell(n - 1) - pell(n) ** 2 == (-1) ** n


def test_companion_identity():
    for n in range(201):
        g = pell(n + 1) - pell(n)
        assert g == half_companion(n)
        assert g * g - 2 * pell(n) ** 2 == (-1) ** n


def test_divisibility_sequence():
    for a in range(1, 61):
        for b in range(a, 61, a):
            assert pell(b) % pell(a) == 0


def test_binet_at_high_precision():
    with mpmath.workprec(256):
        phi = 1 + mpmath.sqrt(2)
        for n in range(101):
            approx = (phi**n - (-phi) ** (-n)) / (2 * mpmath.sqrt(2))
            assert abs(approx - pell(n)) < mpmath.mpf(2) ** -200 * max(1, pell(n))


def test_phi_power():
    for m in range(1, 40):
        a, b = phi_power(m)
        assert (a, b) == (pell(m) + pell(m - 1), pell(m))


@pytest.mark.parametrize("q,want", [(1, 2), (3, 4), (5, 3)])
def test_r_of_examples(q, want):
    assert r_of(q) == want


def test_r_of_bound_and_minimality():
    for q in range(1, 501):
        r = r_of(q)
        assert pell(r) % q == 0
        assert 2 <= r <= ceil_sqrt2_times(q)
        assert all(pell(j) % q for j in range(2, r))


def test_ceil_sqrt2_times():
    for q in range(1, 2000):
        c = ceil_sqrt2_times(q)
        assert (c - 1) ** 2 < 2 * q * q <= c * c
        assert c == math.ceil(math.sqrt(2) * q)


def test_table_is_thread_safe():
    table = PellTable()
    results = []

    def work(n):
        results.append(table.get(n))

    threads = [threading.Thread(target=work, args=(n,)) for n in range(150, 250)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert sorted(results) == [PL[n] for n in range(150, 250)]
