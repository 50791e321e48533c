"""Pure-Python enumeration kernels.

Reference implementation of the hot loops; ``_ckernels.pyx`` mirrors these
signatures for moduli below 64. Subsets of Z_k are ints with bit ``p`` set
iff residue ``p`` is a member. Words of length n are ints read with
position 0 as the most significant digit, so numeric order of word codes is
lexicographic order of the words.
"""


def rotate(mask, t, k):
    """Translate every residue of ``mask`` by ``t`` modulo ``k``."""
    t %= k
    if t == 0:
        return mask
    full = (1 << k) - 1
    return ((mask << t) | (mask >> (k - t))) & full


def mask_period(mask, k):
    """Smallest l >= 1 with rotate(mask, l, k) == mask (tries every l)."""
    full = (1 << k) - 1
    for l in range(1, k):
        if ((mask << l) | (mask >> (k - l))) & full == mask:
            return l
    return k


def canonical(mask, k):
    """Numerically smallest rotation of ``mask``."""
    full = (1 << k) - 1
    best = mask
    for l in range(1, k):
        rot = ((mask << l) | (mask >> (k - l))) & full
        if rot < best:
            best = rot
    return best


def _period_and_is_min(mask, k, full):
    # rotations past the period repeat, so the min check can stop there
    is_min = True
    for l in range(1, k):
        rot = ((mask << l) | (mask >> (k - l))) & full
        if rot == mask:
            return l, is_min
        if rot < mask:
            is_min = False
    return k, is_min


def _masks_with_density(k, r):
    """All k-bit masks with exactly r bits set, ascending (Gosper's hack)."""
    if r == 0:
        yield 0
        return
    if r > k:
        return
    mask = (1 << r) - 1
    limit = 1 << k
    while mask < limit:
        yield mask
        low = mask & -mask
        ripple = mask + low
        mask = (((ripple ^ mask) >> 2) // low) | ripple


def census(k, r):
    """Bucket every r-subset of Z_k by exact period.

    Returns ``{period: [subset_count, class_count]}`` where a class is counted
    once, at its numerically smallest member.
    """
    full = (1 << k) - 1
    out = {}
    for mask in _masks_with_density(k, r):
        n, is_min = _period_and_is_min(mask, k, full)
        bucket = out.setdefault(n, [0, 0])
        bucket[0] += 1
        if is_min:
            bucket[1] += 1
    return out


def necklace_masks(k, density=-1):
    """Canonical masks of every rotation class of subsets of Z_k, ascending."""
    full = (1 << k) - 1
    if density < 0:
        candidates = range(1 << k)
    else:
        candidates = _masks_with_density(k, density)
    return [m for m in candidates if _period_and_is_min(m, k, full)[1]]


def lyndon_codes(n, density=-1):
    """Word codes of all binary Lyndon words of length n, ascending.

    Brute force: a word qualifies when every nontrivial rotation is strictly
    larger.
    """
    full = (1 << n) - 1
    out = []
    if density < 0:
        candidates = range(1 << n)
    else:
        candidates = _masks_with_density(n, density)
    for w in candidates:
        for j in range(1, n):
            if (((w << j) | (w >> (n - j))) & full) <= w:
                break
        else:
            out.append(w)
    return out


def rotation_orbit_counts(n, q):
    """Count rotation orbits of all q-ary words of length n by enumeration.

    Returns ``(orbits, aperiodic_orbits)``. Each orbit is counted at its
    smallest word code; it is aperiodic when no nontrivial rotation fixes it.
    """
    top = q ** (n - 1)
    orbits = 0
    aperiodic = 0
    for w in range(q ** n):
        rot = w
        is_min = True
        periodic = False
        for _ in range(1, n):
            high, rest = divmod(rot, top)
            rot = rest * q + high
            if rot < w:
                is_min = False
                break
            if rot == w:
                periodic = True
                break
        if is_min:
            orbits += 1
            if not periodic:
                aperiodic += 1
    return orbits, aperiodic
