"""Subsets of Z_k, their translations, exact periods and rotation classes.

A :class:`ResidueSubset` is stored as a bitmask (bit ``p`` set iff residue
``p`` is a member), so translating by ``t`` is a ``k``-bit rotation. The
binary-word view puts residue 0 leftmost: ``{0, 2}`` mod 4 is ``"1010"``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from . import kernels
from .errors import DomainError, InvariantViolation

__all__ = [
    "ResidueSubset",
    "PeriodDecomposition",
    "PeriodClass",
    "shift",
    "exact_period",
    "decompose",
    "residue_class_chain",
    "period_class_of",
    "as_binary_word",
    "from_binary_word",
]


@dataclass(frozen=True, order=True)
class ResidueSubset:
    modulus: int
    mask: int

    def __post_init__(self):
        if self.modulus < 1:
            raise DomainError(f"modulus must be >= 1, got {self.modulus}")
        if self.mask < 0 or self.mask >> self.modulus:
            raise DomainError(f"mask {self.mask:#x} has bits outside Z_{self.modulus}")

    @classmethod
    def of(cls, members: Iterable[int], modulus: int) -> "ResidueSubset":
        """Build from explicit residues; each must already lie in ``0..modulus-1``."""
        mask = 0
        for a in members:
            if not 0 <= a < modulus:
                raise DomainError(f"residue {a} is not in 0..{modulus - 1}")
            mask |= 1 << a
        return cls(modulus, mask)

    @classmethod
    def full(cls, modulus: int) -> "ResidueSubset":
        return cls(modulus, (1 << modulus) - 1)

    @property
    def members(self) -> tuple[int, ...]:
        return tuple(p for p in range(self.modulus) if self.mask >> p & 1)

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __contains__(self, a: object) -> bool:
        return isinstance(a, int) and 0 <= a < self.modulus and bool(self.mask >> a & 1)

    def complement(self) -> "ResidueSubset":
        return ResidueSubset(self.modulus, self.mask ^ ((1 << self.modulus) - 1))

    def __repr__(self) -> str:
        body = ", ".join(map(str, self.members))
        return f"ResidueSubset({{{body}}} mod {self.modulus})"


@dataclass(frozen=True)
class PeriodDecomposition:
    """Arithmetic skeleton of a subset: ``k = n*d`` and ``r = m*d``.

    ``representatives`` are the ``m`` residues picked mod ``n`` (smallest
    member of each class); translating them by multiples of ``n`` rebuilds
    the subset.
    """

    k: int
    r: int
    n: int
    d: int
    m: int
    representatives: tuple[int, ...] = ()

    def __post_init__(self):
        if self.k != self.n * self.d or self.r != self.m * self.d:
            raise InvariantViolation(f"inconsistent decomposition {self}")


@dataclass(frozen=True)
class PeriodClass:
    """A rotation class of subsets, kept as its canonical member and its size."""

    length: int
    representative: ResidueSubset

    @property
    def modulus(self) -> int:
        return self.representative.modulus

    def members(self) -> list[ResidueSubset]:
        return [shift(self.representative, j) for j in range(self.length)]


def _require_nonempty(a: ResidueSubset) -> None:
    if a.mask == 0:
        raise DomainError("operation is undefined for the empty subset")


def shift(a: ResidueSubset, t: int) -> ResidueSubset:
    """``{x + t mod k : x in a}``."""
    return ResidueSubset(a.modulus, kernels.rotate(a.mask, t, a.modulus))


def exact_period(a: ResidueSubset) -> int:
    """Smallest ``l >= 1`` such that shifting ``a`` by ``l`` gives ``a`` back."""
    _require_nonempty(a)
    n = kernels.mask_period(a.mask, a.modulus)
    if a.modulus % n:
        raise InvariantViolation(f"period {n} of {a!r} does not divide the modulus")
    return n


def decompose(a: ResidueSubset) -> PeriodDecomposition:
    _require_nonempty(a)
    k, r = a.modulus, len(a)
    n = exact_period(a)
    d = k // n
    if r % d:
        raise InvariantViolation(f"d={d} does not divide r={r} for {a!r}")
    seen: dict[int, int] = {}
    for x in a.members:
        seen.setdefault(x % n, x)
    reps = tuple(sorted(seen.values()))
    rebuilt = {x + j * n for x in reps for j in range(d)}
    if len(reps) != r // d or rebuilt != set(a.members):
        raise InvariantViolation(f"{a!r} is not rebuilt from representatives {reps} mod {n}")
    return PeriodDecomposition(k=k, r=r, n=n, d=d, m=r // d, representatives=reps)


def residue_class_chain(i: int, n: int, k: int) -> ResidueSubset:
    """The progression ``{i, i+n, ..., i+(d-1)n}`` mod ``k``, with ``d = k/n``."""
    if n < 1 or k % n:
        raise DomainError(f"n={n} must divide k={k}")
    if not 0 <= i < k:
        raise DomainError(f"i={i} must lie in 0..{k - 1}")
    return ResidueSubset.of({(i + j * n) % k for j in range(k // n)}, k)


def period_class_of(a: ResidueSubset) -> PeriodClass:
    _require_nonempty(a)
    rep = ResidueSubset(a.modulus, kernels.canonical(a.mask, a.modulus))
    return PeriodClass(length=exact_period(a), representative=rep)


def as_binary_word(a: ResidueSubset) -> str:
    return "".join("1" if a.mask >> p & 1 else "0" for p in range(a.modulus))


def from_binary_word(word: str) -> ResidueSubset:
    if not word or set(word) - {"0", "1"}:
        raise DomainError(f"not a nonempty binary word: {word!r}")
    return ResidueSubset.of((p for p, c in enumerate(word) if c == "1"), len(word))
