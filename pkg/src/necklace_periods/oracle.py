"""Brute-force ground truth: exhaustive censuses, orbit counts, Lyndon words.

Nothing here uses a closed-form count; results come from walking the whole
search space (through :mod:`kernels`) or from Burnside's fixed-point average,
and are compared against :mod:`counting` elsewhere.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import NamedTuple

from . import kernels
from .errors import DomainError, EnumerationLimitError, InvariantViolation
from .numtheory import binomial
from .residues import PeriodClass, ResidueSubset

SUBSET_LIMIT = 20
WORD_LIMIT = 16

__all__ = [
    "SUBSET_LIMIT",
    "WORD_LIMIT",
    "PeriodCount",
    "PeriodCensus",
    "census",
    "burnside_orbit_count",
    "rotation_orbits",
    "enumerate_lyndon",
    "enumerate_necklace_classes",
    "least_rotation",
]


class PeriodCount(NamedTuple):
    subset_count: int
    class_count: int


@dataclass(frozen=True)
class PeriodCensus:
    k: int
    r: int
    by_period: dict[int, PeriodCount] = field(default_factory=dict)

    def subset_count(self, n: int) -> int:
        return self.by_period.get(n, PeriodCount(0, 0)).subset_count

    def class_count(self, n: int) -> int:
        return self.by_period.get(n, PeriodCount(0, 0)).class_count

    @property
    def total_classes(self) -> int:
        return sum(c.class_count for c in self.by_period.values())


def _check_limit(what: str, value: int, limit: int | None, default: int) -> None:
    bound = default if limit is None else limit
    if value > bound:
        raise EnumerationLimitError(what, value, bound)


def census(k: int, r: int, limit: int | None = None) -> PeriodCensus:
    """Classify every r-subset of Z_k by exact period and count its classes."""
    if k < 1 or not 1 <= r <= k:
        raise DomainError(f"census needs 1 <= r <= k, got k={k}, r={r}")
    _check_limit("k", k, limit, SUBSET_LIMIT)
    raw = kernels.census(k, r)
    by_period = {n: PeriodCount(int(s), int(c)) for n, (s, c) in sorted(raw.items())}
    for n, cnt in by_period.items():
        if cnt.subset_count != n * cnt.class_count:
            raise InvariantViolation(f"census({k},{r}): period {n} has {cnt}")
    if sum(c.subset_count for c in by_period.values()) != binomial(k, r):
        raise InvariantViolation(f"census({k},{r}) does not cover all subsets")
    return PeriodCensus(k, r, by_period)


def burnside_orbit_count(length: int, alphabet_size: int) -> int:
    """Rotation orbits of words via the average number of fixed words.

    Rotation by ``j`` fixes exactly ``q**gcd(j, n)`` words, so no word set is
    ever built.
    """
    if length < 1:
        raise DomainError(f"length must be >= 1, got {length}")
    if alphabet_size < 1:
        raise DomainError(f"alphabet_size must be >= 1, got {alphabet_size}")
    total = sum(alphabet_size ** gcd(j, length) for j in range(length))
    orbits, rem = divmod(total, length)
    if rem:
        raise InvariantViolation(f"fixed-point total {total} not divisible by {length}")
    return orbits


def rotation_orbits(length: int, alphabet_size: int, limit: int | None = None) -> tuple[int, int]:
    """``(orbits, aperiodic_orbits)`` of q-ary words, counted one word at a time."""
    if length < 1:
        raise DomainError(f"length must be >= 1, got {length}")
    if alphabet_size < 1:
        raise DomainError(f"alphabet_size must be >= 1, got {alphabet_size}")
    _check_limit("length", length, limit, WORD_LIMIT)
    return kernels.rotation_orbit_counts(length, alphabet_size)


def _duval(length: int):
    # Duval's successor rule; yields every Lyndon word of length <= `length`
    w = [-1]
    while w:
        w[-1] += 1
        if len(w) == length:
            yield "".join(map(str, w))
        m = len(w)
        while len(w) < length:
            w.append(w[-m])
        while w and w[-1] == 1:
            w.pop()


def enumerate_lyndon(
    length: int,
    density: int | None = None,
    *,
    strategy: str = "filter",
    limit: int | None = None,
) -> list[str]:
    """Binary Lyndon words of ``length``, sorted, optionally with ``density`` ones.

    ``strategy="filter"`` tests every word against all its rotations;
    ``strategy="duval"`` walks Duval's successor sequence. Both must agree.
    """
    if length < 1:
        raise DomainError(f"length must be >= 1, got {length}")
    _check_limit("length", length, limit, WORD_LIMIT)
    if strategy == "filter":
        codes = kernels.lyndon_codes(length, -1 if density is None else density)
        return [format(c, f"0{length}b") for c in codes]
    if strategy == "duval":
        words = list(_duval(length))
        if density is not None:
            words = [w for w in words if w.count("1") == density]
        return words
    raise ValueError(f"unknown strategy {strategy!r}")


def enumerate_necklace_classes(
    length: int, density: int | None = None, limit: int | None = None
) -> list[PeriodClass]:
    """One :class:`PeriodClass` per rotation class of binary words of ``length``.

    Periodic classes are included, as is the all-zero class (period 1). Classes
    come back ordered by their canonical mask.
    """
    if length < 1:
        raise DomainError(f"length must be >= 1, got {length}")
    _check_limit("length", length, limit, WORD_LIMIT)
    masks = kernels.necklace_masks(length, -1 if density is None else density)
    return [
        PeriodClass(kernels.mask_period(m, length), ResidueSubset(length, m))
        for m in masks
    ]


def least_rotation(word: str) -> str:
    """Lexicographically smallest rotation; the usual printed name of a necklace."""
    return min(word[i:] + word[:i] for i in range(len(word)))
