"""Closed-form counts of periodic subsets, rotation classes and necklaces.

Binary fixed-density quantities are indexed the same way throughout: ``k`` is
the modulus (word length), ``r`` the number of members (ones), ``n`` an exact
period. Every division is exact and checked.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from math import gcd
from typing import Callable, Iterable, Sequence

from . import oracle
from .errors import DomainError, InvariantViolation
from .numtheory import binomial, divisors, mobius, totient

__all__ = [
    "exact_period_subset_count",
    "period_class_count",
    "fixed_density_necklace_count",
    "fixed_density_definitional",
    "aperiodic_binary_count",
    "aperiodic_definitional",
    "binary_necklace_closed_form",
    "nonzero_density_total",
    "moreau",
    "macmahon",
    "CountTable",
    "build_table",
    "density_table",
    "period_table",
    "single_table",
    "alphabet_table",
]


def _exact_div(num: int, den: int, what: str) -> int:
    q, rem = divmod(num, den)
    if rem:
        raise InvariantViolation(f"{what}: {num} is not divisible by {den}")
    return q


def _check_density(r: int, k: int) -> None:
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    if not 1 <= r <= k:
        raise DomainError(f"need 1 <= r <= k, got r={r}, k={k}")


def _mobius_binomial_sum(n: int, m: int) -> int:
    return sum(binomial(n // s, m // s) * mobius(s) for s in divisors(gcd(n, m)))


def exact_period_subset_count(n: int, r: int, k: int) -> int:
    """How many r-subsets of Z_k have exact period ``n``.

    Zero unless ``n | k`` and ``d = k/n`` divides ``r``; otherwise the
    Mobius-weighted sum of C(n/s, m/s) over ``s | gcd(n, m)`` with ``m = r/d``.
    """
    _check_density(r, k)
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if k % n:
        return 0
    d = k // n
    if r % d:
        return 0
    return _mobius_binomial_sum(n, r // d)


def period_class_count(n: int, r: int, k: int) -> int:
    """Number of rotation classes of r-subsets of Z_k with exact period ``n``."""
    return _exact_div(exact_period_subset_count(n, r, k), n, f"classes of period {n} in ({r},{k})")


def fixed_density_necklace_count(r: int, k: int) -> int:
    """Rotation classes of r-subsets of Z_k (necklaces of length k with r ones)."""
    _check_density(r, k)
    total = sum(binomial(k // s, r // s) * totient(s) for s in divisors(gcd(k, r)))
    return _exact_div(total, k, f"fixed-density sum for ({r},{k})")


def fixed_density_definitional(r: int, k: int) -> int:
    """Same count as :func:`fixed_density_necklace_count`, summed period by period."""
    _check_density(r, k)
    return sum(period_class_count(n, r, k) for n in divisors(k) if r % (k // n) == 0)


def aperiodic_definitional(k: int) -> int:
    """Full-period classes summed over every nonzero density."""
    return sum(period_class_count(k, r, k) for r in range(1, k + 1))


def moreau(n: int, alphabet: int) -> int:
    """Aperiodic necklaces (Lyndon words) of length ``n`` over ``alphabet`` letters."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if alphabet < 1:
        raise DomainError(f"alphabet must be >= 1, got {alphabet}")
    total = sum(mobius(d) * alphabet ** (n // d) for d in divisors(n))
    return _exact_div(total, n, f"aperiodic necklaces ({n},{alphabet})")


def macmahon(n: int, alphabet: int) -> int:
    """All necklaces of length ``n`` over ``alphabet`` letters."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if alphabet < 1:
        raise DomainError(f"alphabet must be >= 1, got {alphabet}")
    total = sum(totient(d) * alphabet ** (n // d) for d in divisors(n))
    value = _exact_div(total, n, f"necklaces ({n},{alphabet})")
    burnside = oracle.burnside_orbit_count(n, alphabet)
    if value != burnside:
        raise InvariantViolation(f"necklaces({n},{alphabet}) = {value}, Burnside gives {burnside}")
    return value


def aperiodic_binary_count(k: int) -> int:
    if k < 2:
        raise DomainError(f"k must be >= 2 (use moreau(1, 2) for k=1), got {k}")
    value = moreau(k, 2)
    summed = aperiodic_definitional(k)
    if value != summed:
        raise InvariantViolation(f"aperiodic count {value} != per-density sum {summed} at k={k}")
    return value


def binary_necklace_closed_form(k: int) -> int:
    if k < 2:
        raise DomainError(f"k must be >= 2 (use macmahon(1, 2) for k=1), got {k}")
    return macmahon(k, 2)


def nonzero_density_total(k: int) -> int:
    """Sum of fixed-density necklace counts over densities 1..k.

    The all-zero necklace is not part of this sum.
    """
    if k < 2:
        raise DomainError(f"k must be >= 2, got {k}")
    return sum(fixed_density_necklace_count(r, k) for r in range(1, k + 1))


@dataclass
class CountTable:
    schema: tuple[str, ...]
    rows: list[tuple[tuple[int, ...], int]] = field(default_factory=list)
    _keys: set[tuple[int, ...]] = field(default_factory=set, init=False, repr=False, compare=False)

    def __post_init__(self):
        self.schema = tuple(self.schema)
        for params, _ in self.rows:
            if params in self._keys:
                raise ValueError(f"duplicate row {params}")
            self._keys.add(params)

    def add(self, params: Sequence[int], count: int) -> None:
        params = tuple(params)
        if len(params) != len(self.schema):
            raise ValueError(f"expected {len(self.schema)} parameters, got {params}")
        if count < 0:
            raise InvariantViolation(f"negative count {count} at {params}")
        if params in self._keys:
            raise ValueError(f"duplicate row {params}")
        self._keys.add(params)
        self.rows.append((params, count))

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow([*self.schema, "count"])
        for params, count in self.rows:
            writer.writerow([*params, count])
        return buf.getvalue()

    def to_records(self) -> list[dict[str, int]]:
        return [dict(zip(self.schema, params), count=count) for params, count in self.rows]

    def to_json(self) -> str:
        # counts can exceed 2**53; JSON integers are written exactly
        return json.dumps(self.to_records(), indent=2)


def build_table(schema: Sequence[str], rows: Iterable[tuple[tuple[int, ...], int]]) -> CountTable:
    table = CountTable(tuple(schema))
    for params, count in rows:
        table.add(params, count)
    return table


def density_table(fn: Callable[[int, int], int], ks: Iterable[int]) -> CountTable:
    return build_table(("k", "r"), (((k, r), fn(r, k)) for k in ks for r in range(1, k + 1)))


def period_table(fn: Callable[[int, int, int], int], ks: Iterable[int]) -> CountTable:
    return build_table(
        ("k", "r", "n"),
        (((k, r, n), fn(n, r, k)) for k in ks for r in range(1, k + 1) for n in divisors(k)),
    )


def single_table(name: str, fn: Callable[[int], int], ks: Iterable[int]) -> CountTable:
    return build_table((name,), (((k,), fn(k)) for k in ks))


def alphabet_table(fn: Callable[[int, int], int], ns: Iterable[int], alphabet: int) -> CountTable:
    return build_table(("n", "alphabet"), (((n, alphabet), fn(n, alphabet)) for n in ns))

