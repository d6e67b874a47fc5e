from fractions import Fraction as F
import itertools
import math

import pytest
from hypothesis import given, strategies as st

from floorsq.exact import DomainError
from floorsq.membership import (
    SUM_LABELS, bracket_values, in_S, in_Sbar, verify_index_triple, verify_T_tuple,
    verify_Tbar_tuple, verify_values,
)


def scan_member(alpha, m, ceil=False):
    """Linear scan over n; independent of the isqrt-interval route."""
    n = 1
    while True:
        v = alpha * n * n
        val = math.ceil(v) if ceil else math.floor(v)
        if val == m:
            return n
        if val > m:
            return None
        n += 1


@pytest.mark.parametrize("a,m,want", [(F(1, 2), 24, 7), (F(1, 2), 3, None), (F(1), 25, 5)])
def test_in_S_examples(a, m, want):
    w = in_S(a, m)
    assert w.member == (want is not None) and w.witness_n == want


@pytest.mark.parametrize("a,m,want", [(F(1, 5), 2, 3), (F(1, 5), 3, None), (F(4, 29), 716, 72)])
def test_in_Sbar_examples(a, m, want):
    w = in_Sbar(a, m)
    assert w.member == (want is not None) and w.witness_n == want


@pytest.mark.parametrize("f", [in_S, in_Sbar])
def test_nonpositive_m_rejected(f):
    with pytest.raises(DomainError):
        f(F(1, 2), 0)
    with pytest.raises(DomainError):
        f(F(1, 2), -3)


@pytest.mark.parametrize("a", [F(0), F(3, 2), F(-1, 2)])
def test_alpha_out_of_range(a):
    with pytest.raises(DomainError):
        in_S(a, 5)


alphas = st.fractions(min_value=F(1, 50), max_value=1).filter(lambda a: a > 0)


@given(alphas, st.integers(1, 3000))
def test_in_S_matches_scan_with_minimal_witness(a, m):
    assert in_S(a, m).witness_n == scan_member(a, m)


@given(alphas, st.integers(1, 3000))
def test_in_Sbar_matches_scan_with_minimal_witness(a, m):
    assert in_Sbar(a, m).witness_n == scan_member(a, m, ceil=True)


@given(alphas, st.integers(1, 3000))
def test_witness_satisfies_definition(a, m):
    w = in_S(a, m)
    if w.member:
        assert math.floor(a * w.witness_n**2) == m and a * w.witness_n**2 >= 1


@pytest.mark.parametrize("idx,ok", [((3, 3, 3), True), ((12, 12, 71), True), ((3, 3, 4), False)])
def test_verify_T_examples(idx, ok):
    rec = verify_T_tuple(F(1, 2), idx)
    assert rec.verified is ok
    assert set(rec.checks) == set(SUM_LABELS)


def test_verify_T_below_admissible_index():
    with pytest.raises(DomainError):
        verify_T_tuple(F(1, 10), (2, 5, 5))


@pytest.mark.parametrize("a,idx,ok", [(F(4, 29), (12, 12, 71), True), (F(1, 5), (2, 2, 1), False),
                                      (F(1), (3, 4, 12), False)])
def test_verify_Tbar_examples(a, idx, ok):
    assert verify_Tbar_tuple(a, idx).verified is ok


def test_verify_Tbar_records_witnesses():
    rec = verify_Tbar_tuple(F(4, 29), (12, 12, 71))
    assert rec.values == (20, 20, 696)
    assert sorted({c.witness_n for c in rec.checks.values()}) == [12, 17, 71, 72, 73]


def test_failing_sum_reported():
    # ceil(n^2/5) runs 1, 1, 2, 4, 5, ...: pair sums 2 are members, 3 is not
    rec = verify_Tbar_tuple(F(1, 5), (2, 2, 1))
    assert rec.values == (1, 1, 1)
    assert rec.failing == ["k+l+m"]


def test_one_is_a_failing_sum_for_alpha_one():
    rec = verify_T_tuple(F(1), (3, 4, 12))
    assert rec.checks["k+l"].member and not rec.checks["l+m"].member


@given(st.sampled_from([F(1, 2), F(11, 20), F(3, 4), F(1, 10)]),
       st.lists(st.integers(4, 400), min_size=3, max_size=3))
def test_verification_is_permutation_invariant(a, idx):
    outcomes = {verify_T_tuple(a, p).verified for p in itertools.permutations(idx)}
    assert len(outcomes) == 1


def test_verify_values_counts_seven_sums():
    rec = verify_values(F(1, 2), (72, 72, 2520))
    assert rec.verified and len(rec.checks) == 7
    assert bracket_values(F(1, 2), (12, 12, 71)) == (72, 72, 2520)


def test_verify_index_triple_never_raises_on_small_indices():
    rec = verify_index_triple(F(1, 10), (1, 1, 1))
    assert not rec.verified


def test_record_to_dict_is_json_ready():
    import json
    d = verify_T_tuple(F(1, 2), (12, 12, 71)).to_dict()
    json.dumps(d)
    assert d["verified"] is True
