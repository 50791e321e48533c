# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the enumeration kernels in ``_pykernels``.

Masks are held in unsigned 64-bit words, so every entry point here requires
k < 64 (and q**n < 2**63 for ``rotation_orbit_counts``); ``kernels`` routes
larger inputs to the Python fallback.
"""

ctypedef unsigned long long u64

MAX_BITS = 63


cdef inline u64 _rot(u64 mask, int t, int k, u64 full) nogil:
    return ((mask << t) | (mask >> (k - t))) & full


cdef inline u64 _full(int k) nogil:
    return ((<u64>1) << k) - 1


cdef inline int _period_and_is_min(u64 mask, int k, u64 full, bint* is_min) nogil:
    cdef int l
    cdef u64 rot
    is_min[0] = True
    for l in range(1, k):
        rot = _rot(mask, l, k, full)
        if rot == mask:
            return l
        if rot < mask:
            is_min[0] = False
    return k


cdef inline u64 _next_same_weight(u64 mask) nogil:
    cdef u64 low = mask & (~mask + 1)
    cdef u64 ripple = mask + low
    return (((ripple ^ mask) >> 2) // low) | ripple


def rotate(u64 mask, long long t, int k):
    t %= k
    if t < 0:
        t += k
    if t == 0:
        return mask
    return _rot(mask, <int>t, k, _full(k))


def mask_period(u64 mask, int k):
    cdef u64 full = _full(k)
    cdef int l
    for l in range(1, k):
        if _rot(mask, l, k, full) == mask:
            return l
    return k


def canonical(u64 mask, int k):
    cdef u64 full = _full(k)
    cdef u64 best = mask, rot
    cdef int l
    for l in range(1, k):
        rot = _rot(mask, l, k, full)
        if rot < best:
            best = rot
    return best


def census(int k, int r):
    cdef u64 full = _full(k)
    cdef u64 mask, limit = (<u64>1) << k
    cdef long long subsets[64]
    cdef long long classes[64]
    cdef int n
    cdef bint is_min
    for n in range(64):
        subsets[n] = 0
        classes[n] = 0
    if r == 0:
        mask = 0
        n = _period_and_is_min(mask, k, full, &is_min)
        return {n: [1, 1]}
    if r > k:
        return {}
    with nogil:
        mask = ((<u64>1) << r) - 1
        while mask < limit:
            n = _period_and_is_min(mask, k, full, &is_min)
            subsets[n] += 1
            if is_min:
                classes[n] += 1
            if mask == full:
                break
            mask = _next_same_weight(mask)
    return {n: [subsets[n], classes[n]] for n in range(1, k + 1) if subsets[n]}


def necklace_masks(int k, int density=-1):
    cdef u64 full = _full(k)
    cdef u64 mask, limit = (<u64>1) << k
    cdef bint is_min
    out = []
    if density < 0:
        mask = 0
        while mask < limit:
            _period_and_is_min(mask, k, full, &is_min)
            if is_min:
                out.append(mask)
            mask += 1
        return out
    if density == 0:
        return [0]
    if density > k:
        return out
    mask = ((<u64>1) << density) - 1
    while mask < limit:
        _period_and_is_min(mask, k, full, &is_min)
        if is_min:
            out.append(mask)
        if mask == full:
            break
        mask = _next_same_weight(mask)
    return out


cdef inline bint _is_lyndon(u64 w, int n, u64 full) nogil:
    cdef int j
    for j in range(1, n):
        if _rot(w, j, n, full) <= w:
            return False
    return True


def lyndon_codes(int n, int density=-1):
    cdef u64 full = _full(n)
    cdef u64 w, limit = (<u64>1) << n
    out = []
    if density < 0:
        w = 0
        while w < limit:
            if _is_lyndon(w, n, full):
                out.append(w)
            w += 1
        return out
    if density == 0:
        return [0] if n == 1 else []
    if density > n:
        return out
    w = ((<u64>1) << density) - 1
    while w < limit:
        if _is_lyndon(w, n, full):
            out.append(w)
        if w == full:
            break
        w = _next_same_weight(w)
    return out


def rotation_orbit_counts(int n, int q):
    cdef u64 top = 1, total, w, rot, high
    cdef long long orbits = 0, aperiodic = 0
    cdef int i
    cdef bint is_min, periodic
    for i in range(n - 1):
        top *= q
    total = top * q
    with nogil:
        w = 0
        while w < total:
            rot = w
            is_min = True
            periodic = False
            for i in range(1, n):
                high = rot // top
                rot = (rot - high * top) * q + high
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
            w += 1
    return orbits, aperiodic
