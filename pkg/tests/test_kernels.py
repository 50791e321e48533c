"""Both kernel backends against set-based brute force and against each other."""

from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from necklace_periods import _pykernels, kernels

from .conftest import BACKENDS

BACKEND_IDS = [m.__name__.rsplit(".", 1)[-1] for m in BACKENDS]


def members(mask, k):
    return {p for p in range(k) if mask >> p & 1}


def set_period(s, k):
    return next(t for t in range(1, k + 1) if {(x + t) % k for x in s} == s)


def set_rotations(mask, k):
    s = members(mask, k)
    return [sum(1 << ((x + t) % k) for x in s) for t in range(k)]


masks_and_k = st.integers(min_value=1, max_value=63).flatmap(
    lambda k: st.tuples(st.integers(min_value=0, max_value=(1 << k) - 1), st.just(k))
)


@pytest.mark.parametrize("backend", BACKENDS, ids=BACKEND_IDS)
@given(masks_and_k, st.integers(min_value=-200, max_value=200))
def test_rotate_matches_set_translation(backend, mk, t):
    mask, k = mk
    expected = sum(1 << ((x + t) % k) for x in members(mask, k))
    assert backend.rotate(mask, t, k) == expected


@pytest.mark.parametrize("backend", BACKENDS, ids=BACKEND_IDS)
@given(masks_and_k)
@settings(max_examples=200)
def test_period_and_canonical(backend, mk):
    mask, k = mk
    s = members(mask, k)
    if s:
        assert backend.mask_period(mask, k) == set_period(s, k)
    assert backend.canonical(mask, k) == min(set_rotations(mask, k))


@pytest.mark.parametrize("k", range(1, 11))
def test_census_against_sets(backend, k):
    for r in range(1, k + 1):
        expected = {}
        for combo in combinations(range(k), r):
            mask = sum(1 << p for p in combo)
            n = set_period(set(combo), k)
            bucket = expected.setdefault(n, [0, 0])
            bucket[0] += 1
            bucket[1] += mask == min(set_rotations(mask, k))
        got = {n: list(v) for n, v in backend.census(k, r).items()}
        assert got == expected


def test_census_four_two(backend):
    got = {n: list(v) for n, v in backend.census(4, 2).items()}
    assert got == {4: [4, 1], 2: [2, 1]}


@pytest.mark.parametrize("k", range(1, 11))
def test_necklace_masks_against_sets(backend, k):
    reps = sorted({min(set_rotations(m, k)) for m in range(1 << k)})
    assert backend.necklace_masks(k) == reps
    for r in range(k + 1):
        assert backend.necklace_masks(k, r) == [m for m in reps if bin(m).count("1") == r]


@pytest.mark.parametrize("n", range(1, 11))
def test_lyndon_codes_against_strings(backend, n):
    words = [format(w, f"0{n}b") for w in range(1 << n)]
    lyndon = [w for w in words if all(w < w[i:] + w[:i] for i in range(1, n))]
    assert [format(c, f"0{n}b") for c in backend.lyndon_codes(n)] == lyndon
    for r in range(n + 1):
        got = [format(c, f"0{n}b") for c in backend.lyndon_codes(n, r)]
        assert got == [w for w in lyndon if w.count("1") == r]


@pytest.mark.parametrize("n, q", [(1, 1), (1, 3), (2, 2), (4, 2), (5, 3), (6, 2), (4, 4)])
def test_rotation_orbit_counts_against_tuples(backend, n, q):
    from itertools import product

    seen = set()
    orbits = aperiodic = 0
    for w in product(range(q), repeat=n):
        if w in seen:
            continue
        orbit = {w[i:] + w[:i] for i in range(n)}
        seen |= orbit
        orbits += 1
        aperiodic += len(orbit) == n
    assert tuple(backend.rotation_orbit_counts(n, q)) == (orbits, aperiodic)


@pytest.mark.skipif(len(BACKENDS) < 2, reason="compiled kernels not built")
def test_backends_agree_at_larger_sizes():
    py, cy = BACKENDS
    for k in (14, 15):
        for r in (1, 5, 7, k):
            assert py.census(k, r) == {n: list(v) for n, v in cy.census(k, r).items()}
        assert py.necklace_masks(k, 6) == cy.necklace_masks(k, 6)
        assert py.lyndon_codes(k, 7) == cy.lyndon_codes(k, 7)
    assert py.rotation_orbit_counts(9, 3) == tuple(cy.rotation_orbit_counts(9, 3))


def test_dispatch_falls_back_for_wide_moduli():
    mask = (1 << 70) | 1
    assert kernels.rotate(mask, 1, 80) == _pykernels.rotate(mask, 1, 80)
    assert kernels.mask_period(mask, 80) == 80
    assert kernels.canonical((1 << 79) | (1 << 40), 80) == (1 << 39) | 1


def test_pure_python_fixture_routes_calls(pure_python):
    assert kernels._impl(10) is _pykernels


def test_use_backend_rejects_unknown():
    with pytest.raises(ValueError):
        kernels.use_backend("fortran")
