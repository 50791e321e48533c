from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from necklace_periods.errors import DomainError
from necklace_periods.residues import (
    PeriodDecomposition,
    ResidueSubset,
    as_binary_word,
    decompose,
    exact_period,
    from_binary_word,
    period_class_of,
    residue_class_chain,
    shift,
)

R = ResidueSubset.of


def all_nonempty(k):
    for r in range(1, k + 1):
        for combo in combinations(range(k), r):
            yield R(combo, k)


subsets = st.integers(min_value=1, max_value=40).flatmap(
    lambda k: st.builds(ResidueSubset, st.just(k), st.integers(min_value=0, max_value=(1 << k) - 1))
)


def test_construction_validates_members():
    with pytest.raises(DomainError):
        R([0, 2, 4], 3)
    with pytest.raises(DomainError):
        ResidueSubset(3, 0b1000)
    with pytest.raises(DomainError):
        ResidueSubset(0, 0)
    assert R([2, 0, 2], 4).members == (0, 2)


def test_shift_examples():
    assert shift(R([0, 2], 3), 1) == R([1, 0], 3)
    a = R([1, 4, 5], 7)
    assert shift(a, 0) == a
    assert shift(R([0, 2], 4), 2) == R([2, 0], 4)


@given(subsets, st.integers(-50, 50), st.integers(-50, 50))
def test_shift_composes_and_wraps(a, s, t):
    assert shift(shift(a, s), t) == shift(a, s + t)
    assert shift(a, a.modulus) == a
    assert len(shift(a, s)) == len(a)


def test_exact_period_examples():
    assert exact_period(R([0, 2], 3)) == 3
    assert exact_period(R([0, 2], 4)) == 2
    for i in range(1, 9):
        assert exact_period(ResidueSubset.full(i)) == 1
    with pytest.raises(DomainError):
        exact_period(ResidueSubset(5, 0))


def test_decompose_examples():
    d = decompose(R([0, 2], 4))
    assert (d.k, d.r, d.n, d.d, d.m) == (4, 2, 2, 2, 1)
    d = decompose(R([0], 5))
    assert (d.k, d.r, d.n, d.d, d.m) == (5, 1, 5, 1, 1)
    d = decompose(ResidueSubset.full(4))
    assert (d.k, d.r, d.n, d.d, d.m) == (4, 4, 1, 4, 1)
    with pytest.raises(DomainError):
        decompose(ResidueSubset(4, 0))


def test_decomposition_type_checks_arithmetic():
    with pytest.raises(AssertionError):
        PeriodDecomposition(k=6, r=2, n=4, d=2, m=1)


def test_period_decomposition_exhaustive_k12():
    # the k <= 14 sweep lives in the acceptance suite
    for k in range(1, 13):
        for a in all_nonempty(k):
            n = exact_period(a)
            assert k % n == 0
            dec = decompose(a)
            assert dec.r % dec.d == 0
            assert len({x % n for x in a}) == dec.m
            rebuilt = {x + j * n for x in dec.representatives for j in range(dec.d)}
            assert rebuilt == set(a.members)


def test_residue_class_chain_examples():
    assert residue_class_chain(0, 2, 4) == R([0, 2], 4)
    assert residue_class_chain(1, 2, 6) == R([1, 3, 5], 6)
    assert residue_class_chain(0, 7, 7) == R([0], 7)
    with pytest.raises(DomainError):
        residue_class_chain(0, 4, 6)
    with pytest.raises(DomainError):
        residue_class_chain(6, 3, 6)


@pytest.mark.parametrize("k", range(1, 25))
def test_chains_partition_zk(k):
    for n in (n for n in range(1, k + 1) if k % n == 0):
        chains = [residue_class_chain(i, n, k) for i in range(n)]
        assert all(len(c) == k // n for c in chains)
        union = 0
        for c in chains:
            assert union & c.mask == 0
            union |= c.mask
        assert union == (1 << k) - 1
        # i and i + n give the same chain
        for i in range(k):
            assert residue_class_chain(i, n, k) == chains[i % n]


def test_period_class_examples():
    cls = period_class_of(R([1, 3], 4))
    assert cls.length == 2
    assert cls.representative == R([0, 2], 4)
    cls = period_class_of(R([0], 3))
    assert cls.length == 3
    assert set(cls.members()) == {R([0], 3), R([1], 3), R([2], 3)}
    assert len(period_class_of(ResidueSubset.full(4)).members()) == 1


@pytest.mark.parametrize("k", range(1, 11))
def test_period_class_constant_on_classes(k):
    for a in all_nonempty(k):
        cls = period_class_of(a)
        members = cls.members()
        assert len(set(members)) == cls.length
        assert a in members
        assert cls.representative == min(members, key=lambda b: b.mask)
        for b in members:
            assert period_class_of(b) == cls


def test_binary_word_examples():
    assert as_binary_word(R([0, 2], 4)) == "1010"
    assert as_binary_word(ResidueSubset(3, 0)) == "000"
    assert as_binary_word(ResidueSubset.full(6)) == "111111"
    with pytest.raises(DomainError):
        from_binary_word("10a")
    with pytest.raises(DomainError):
        from_binary_word("")


@given(subsets)
def test_binary_word_round_trip(a):
    assert from_binary_word(as_binary_word(a)) == a


@pytest.mark.parametrize("k", range(2, 13))
def test_complement_keeps_full_period(k):
    for a in all_nonempty(k):
        if len(a) < k and exact_period(a) == k:
            assert exact_period(a.complement()) == k
