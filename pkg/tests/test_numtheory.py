from fractions import Fraction
from itertools import product
from math import gcd

import pytest
from hypothesis import given, strategies as st

from necklace_periods.errors import DomainError
from necklace_periods.numtheory import (
    binomial,
    divisors,
    factorize,
    lemma2_lhs,
    lemma3_lhs,
    mobius,
    ordered_factorizations,
    totient,
)

PRIMES = [2, 3, 5, 7, 11, 13, 97, 101]


def brute_divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def brute_totient(n):
    return sum(1 for j in range(1, n + 1) if gcd(j, n) == 1)


def pascal(rows):
    tri = [[1]]
    for n in range(1, rows + 1):
        prev = tri[-1]
        tri.append([1] + [prev[i - 1] + prev[i] for i in range(1, n)] + [1])
    return tri


def tuples_with_product(a, t):
    """Every ordered t-tuple of factors >= 2 with product a, listed explicitly."""
    candidates = [q for q in range(2, a + 1) if a % q == 0]
    return [tup for tup in product(candidates, repeat=t) if _prod(tup) == a]


def _prod(xs):
    out = 1
    for x in xs:
        out *= x
    return out


@pytest.mark.parametrize("n, expected", [(1, 1), (2, -1), (12, 0), (30, -1), (6, 1)])
def test_mobius_examples(n, expected):
    assert mobius(n) == expected


def test_totient_examples():
    assert brute_totient(6) == 2
    assert totient(6) == 2
    assert totient(1) == 1


@pytest.mark.parametrize("p", PRIMES)
def test_prime_values(p):
    assert totient(p) == p - 1
    assert divisors(p) == [1, p]
    assert mobius(p) == -1
    assert lemma3_lhs(p) == Fraction(p - 1, p)


def test_divisors_examples():
    assert divisors(1) == [1]
    assert divisors(12) == brute_divisors(12) == [1, 2, 3, 4, 6, 12]


@pytest.mark.parametrize("fn", [mobius, totient, divisors, factorize])
def test_zero_rejected(fn):
    with pytest.raises(DomainError):
        fn(0)


def test_binomial_examples():
    assert binomial(4, 2) == 6
    assert binomial(2, 4) == 0
    assert binomial(20, 10) == pascal(20)[20][10] == 184756
    assert binomial(120, 60) == pascal(120)[120][60]


def test_binomial_pascal_identity():
    for n in range(1, 61):
        for k in range(1, n + 1):
            assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)
        assert binomial(n, 0) == binomial(n, n) == 1


def test_ordered_factorizations_examples():
    assert ordered_factorizations(2, 1) == 1
    assert tuples_with_product(12, 2) == [(2, 6), (3, 4), (4, 3), (6, 2)]
    assert ordered_factorizations(12, 2) == 4
    assert ordered_factorizations(4, 3) == 0


@pytest.mark.parametrize("a, t", [(1, 1), (0, 2), (5, 0)])
def test_ordered_factorizations_rejects(a, t):
    with pytest.raises(DomainError):
        ordered_factorizations(a, t)


def test_ordered_factorizations_match_tuple_listing():
    for a in range(2, 41):
        for t in range(1, 6):
            assert ordered_factorizations(a, t) == len(tuples_with_product(a, t)), (a, t)


def test_ordered_factorizations_recursion_to_60():
    for a in range(2, 61):
        assert ordered_factorizations(a, 1) == 1
        for t in range(2, a + 1):
            rec = sum(
                ordered_factorizations(a // q, t - 1) if a // q >= 2 else 0
                for q in brute_divisors(a)
                if q > 1
            )
            assert ordered_factorizations(a, t) == rec, (a, t)


def test_lemma2_examples():
    assert lemma2_lhs(2) == -1
    assert lemma2_lhs(4) == 0
    assert lemma2_lhs(6) == 1
    with pytest.raises(DomainError):
        lemma2_lhs(1)


def test_lemma3_examples():
    assert lemma3_lhs(2) == Fraction(1, 2)
    assert lemma3_lhs(6) == Fraction(1, 3)
    assert lemma3_lhs(6) == Fraction(brute_totient(6), 6)
    with pytest.raises(DomainError):
        lemma3_lhs(1)


def test_mobius_divisor_sum_and_gauss():
    for n in range(1, 501):
        assert sum(mobius(d) for d in divisors(n)) == (1 if n == 1 else 0)
        assert sum(totient(d) for d in divisors(n)) == n


@given(st.integers(min_value=1, max_value=5000))
def test_divisors_and_totient_match_brute_force(n):
    assert divisors(n) == brute_divisors(n)
    assert totient(n) == brute_totient(n)


@given(st.integers(min_value=1, max_value=10**6))
def test_factorization_round_trip(n):
    f = factorize(n)
    assert _prod(p ** e for p, e in f.items()) == n
    assert all(len(divisors(p)) == 2 for p in f)
