"""Backend selection for the enumeration kernels.

The compiled extension is used when it imported successfully and the input
fits in 63 bits; everything else goes through the pure-Python code. Set
``NECKLACE_PERIODS_PURE=1`` to force the fallback for the whole process.
"""

from __future__ import annotations

import os

from . import _pykernels

try:
    if os.environ.get("NECKLACE_PERIODS_PURE", "") not in ("", "0"):
        raise ImportError("pure-Python kernels forced by environment")
    from . import _ckernels
except ImportError:
    _ckernels = None

BACKEND = "cython" if _ckernels is not None else "python"
_MAX_BITS = 63

__all__ = [
    "BACKEND",
    "rotate",
    "mask_period",
    "canonical",
    "census",
    "necklace_masks",
    "lyndon_codes",
    "rotation_orbit_counts",
    "use_backend",
]

_forced: str | None = None


def use_backend(name: str | None) -> None:
    """Pin the backend ("cython" or "python"); ``None`` restores automatic choice."""
    global _forced
    if name not in (None, "cython", "python"):
        raise ValueError(f"unknown backend {name!r}")
    if name == "cython" and _ckernels is None:
        raise RuntimeError("compiled kernels are not available in this build")
    _forced = name


def _impl(bits: int):
    if _forced == "python" or _ckernels is None:
        return _pykernels
    if bits <= _MAX_BITS:
        return _ckernels
    if _forced == "cython":
        raise ValueError(f"compiled kernels support at most {_MAX_BITS} bits, got {bits}")
    return _pykernels


def rotate(mask: int, t: int, k: int) -> int:
    return _impl(k).rotate(mask, t, k)


def mask_period(mask: int, k: int) -> int:
    return _impl(k).mask_period(mask, k)


def canonical(mask: int, k: int) -> int:
    return _impl(k).canonical(mask, k)


def census(k: int, r: int) -> dict[int, list[int]]:
    return _impl(k).census(k, r)


def necklace_masks(k: int, density: int = -1) -> list[int]:
    return _impl(k).necklace_masks(k, density)


def lyndon_codes(n: int, density: int = -1) -> list[int]:
    return _impl(n).lyndon_codes(n, density)


def rotation_orbit_counts(n: int, q: int) -> tuple[int, int]:
    bits = (q ** n).bit_length()
    return _impl(bits).rotation_orbit_counts(n, q)
