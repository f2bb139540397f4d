from collections import Counter

from hypothesis import given, settings, strategies as st
import pytest

from yflattice import (
    ResidueHistogram,
    enumerate_rank,
    f_mod,
    f_valued_row,
    is_equidistributed,
    is_odd_word,
    multiplicative_shift,
    pi_multiset,
    residue_histogram_dp,
    residue_histogram_enum,
    verify_main_theorem,
    verify_one_step,
)


def test_enum_known_histograms():
    assert residue_histogram_enum(6, 3).counts == {1: 2, 3: 2, 5: 2, 7: 2}
    assert residue_histogram_enum(5, 3).counts == {1: 2, 3: 2, 5: 0, 7: 0}
    assert residue_histogram_enum(0, 2).counts == {1: 1, 3: 0}


def test_dp_known_histograms():
    assert residue_histogram_dp(6, 3).counts == {1: 2, 3: 2, 5: 2, 7: 2}
    assert residue_histogram_dp(4, 2).counts == {1: 2, 3: 2}
    assert residue_histogram_dp(1, 1).counts == {1: 1}


def test_histogram_guards():
    with pytest.raises(ValueError):
        residue_histogram_enum(41, 3)
    with pytest.raises(ValueError):
        residue_histogram_enum(4, 0)
    with pytest.raises(ValueError):
        residue_histogram_dp(4, 0)
    with pytest.raises(ValueError):
        residue_histogram_dp(-1, 3)


@given(st.integers(min_value=0, max_value=24), st.integers(min_value=1, max_value=8))
@settings(max_examples=60)
def test_dp_equals_enum(n, k):
    assert residue_histogram_dp(n, k) == residue_histogram_enum(n, k)


@given(st.integers(min_value=0, max_value=24), st.integers(min_value=1, max_value=8))
@settings(max_examples=60)
def test_histogram_shape(n, k):
    h = residue_histogram_dp(n, k)
    assert h.modulus == 1 << k
    assert sorted(h.counts) == list(range(1, h.modulus, 2))
    assert sum(h.counts.values()) == 1 << (n // 2)


def test_histogram_matches_word_enumeration():
    for n in range(11):
        for k in (1, 2, 3):
            m = 1 << k
            oracle = Counter(f_mod(w, m) for w in enumerate_rank(n) if is_odd_word(w))
            got = residue_histogram_enum(n, k).counts
            assert {r: c for r, c in got.items() if c} == dict(oracle)


def test_is_equidistributed():
    assert is_equidistributed(ResidueHistogram(8, {1: 2, 3: 2, 5: 2, 7: 2}))
    assert not is_equidistributed(ResidueHistogram(8, {1: 2, 3: 2, 5: 0, 7: 0}))
    assert is_equidistributed(ResidueHistogram(2, {1: 1}))


def test_multiplicative_shift():
    h = residue_histogram_enum(5, 3)
    assert multiplicative_shift(h, 5).counts == {1: 0, 3: 0, 5: 2, 7: 2}
    assert multiplicative_shift(h, 1).counts == h.counts
    with pytest.raises(ValueError):
        multiplicative_shift(h, 4)


@given(st.integers(min_value=0, max_value=20), st.integers(min_value=1, max_value=6), st.integers(min_value=0, max_value=40))
@settings(max_examples=40)
def test_shift_preserves_mass(n, k, c):
    h = residue_histogram_dp(n, k)
    shifted = multiplicative_shift(h, 2 * c + 1)
    assert sum(shifted.counts.values()) == sum(h.counts.values())


def test_verify_main_theorem_known():
    assert [(v.n, v.flat) for v in verify_main_theorem(3, 2)] == [(6, True), (7, True), (8, True)]
    assert [(v.n, v.flat) for v in verify_main_theorem(2, 4)] == [(n, True) for n in range(4, 9)]
    assert all(v.flat for v in verify_main_theorem(1, 3))


def test_verify_main_theorem_guards():
    with pytest.raises(ValueError):
        verify_main_theorem(0, 2)
    with pytest.raises(ValueError):
        verify_main_theorem(3, -1)


def test_verify_one_step_scan():
    verdicts = verify_one_step(3, 12)
    assert len(verdicts) == 13
    assert all(v.ok for v in verdicts)
    by_n = {v.n: v for v in verdicts}
    # rows 5 and 6: not flat yet at 5, flat from 6 on
    assert not by_n[5].flat_before
    assert by_n[6].flat_before and by_n[6].flat_after


def test_one_step_even_identity():
    assert residue_histogram_dp(7, 3) == residue_histogram_dp(6, 3)


def test_one_step_odd_decomposition():
    before = residue_histogram_enum(5, 3)
    shifted = multiplicative_shift(before, 5)
    combined = {r: before.counts[r] + shifted.counts[r] for r in before.counts}
    assert combined == residue_histogram_enum(6, 3).counts


def test_pi_multiset_known():
    assert pi_multiset(6) == Counter({1: 2, 3: 2, 5: 2, 15: 2})
    assert pi_multiset(0) == Counter({1: 1})
    assert pi_multiset(2) == Counter({1: 2})


def test_pi_multiset_matches_row():
    for n in range(17):
        products = pi_multiset(n)
        assert products == f_valued_row(n)
        assert sum(products.values()) == 1 << (n // 2)


def test_pi_multiset_strict_reading_breaks_at_odd_ranks():
    strict = pi_multiset(7, strict=True)
    assert sum(strict.values()) == 16
    assert strict != f_valued_row(7)
    # at even ranks the two readings coincide
    assert pi_multiset(6, strict=True) == pi_multiset(6)


def test_pi_multiset_guards():
    with pytest.raises(ValueError):
        pi_multiset(-1)
    with pytest.raises(ValueError):
        pi_multiset(41)
