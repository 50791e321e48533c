"""Exact integer arithmetic used by every counting formula.

Everything works on plain Python ints (arbitrary precision); rationals are
:class:`fractions.Fraction`, which keeps lowest terms with a positive
denominator.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

from .errors import DomainError

__all__ = [
    "factorize",
    "mobius",
    "totient",
    "divisors",
    "binomial",
    "ordered_factorizations",
    "lemma2_lhs",
    "lemma3_lhs",
]


def _require_positive(n: int, name: str = "n") -> None:
    if n < 1:
        raise DomainError(f"{name} must be >= 1, got {n}")


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of ``n`` by trial division, as ``{prime: exponent}``."""
    _require_positive(n)
    factors: dict[int, int] = {}
    while n % 2 == 0:
        factors[2] = factors.get(2, 0) + 1
        n //= 2
    p = 3
    while p * p <= n:
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
        p += 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def mobius(n: int) -> int:
    _require_positive(n)
    exps = factorize(n)
    if any(e > 1 for e in exps.values()):
        return 0
    return -1 if len(exps) % 2 else 1


def totient(n: int) -> int:
    _require_positive(n)
    result = n
    for p in factorize(n):
        result -= result // p
    return result


def divisors(n: int) -> list[int]:
    """Positive divisors of ``n`` in ascending order."""
    _require_positive(n)
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i * i != n:
                large.append(n // i)
        i += 1
    return small + large[::-1]


def binomial(n: int, k: int) -> int:
    """Exact C(n, k); zero when ``k > n``."""
    if n < 0 or k < 0:
        raise DomainError(f"binomial needs nonnegative arguments, got ({n}, {k})")
    return comb(n, k)


def ordered_factorizations(a: int, t: int) -> int:
    """Number of ordered ``t``-tuples of integers >= 2 whose product is ``a``.

    Computed by peeling off the first factor ``q``::

        tau(a, t) = sum over q | a, q > 1 of tau(a / q, t - 1)

    with ``tau(1, 0) = 1``. Zero whenever ``t >= a``.
    """
    if a < 2:
        raise DomainError(f"a must be >= 2, got {a}")
    if t < 1:
        raise DomainError(f"t must be >= 1, got {t}")
    if t >= a:
        return 0

    @lru_cache(maxsize=None)
    def tau(b: int, s: int) -> int:
        if s == 0:
            return 1 if b == 1 else 0
        if b == 1:
            return 0
        return sum(tau(b // q, s - 1) for q in divisors(b)[1:])

    return tau(a, t)


def lemma2_lhs(a: int) -> int:
    """Alternating sum of ordered factorization counts, ``sum_t (-1)^t tau(a, t)``.

    Equals ``mobius(a)``; the point of computing it separately is to check that.
    """
    if a < 2:
        raise DomainError(f"a must be >= 2, got {a}")
    return sum((-1) ** t * ordered_factorizations(a, t) for t in range(1, a))


def lemma3_lhs(q: int) -> Fraction:
    """``sum over s | q of mobius(s) / s`` as an exact fraction (equals phi(q)/q)."""
    if q < 2:
        raise DomainError(f"q must be >= 2, got {q}")
    return sum((Fraction(mobius(s), s) for s in divisors(q)), Fraction(0))
