"""Time the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat N]

Each case runs on both backends, checks the results agree, and reports the
best wall time of N runs plus the speedup.
"""
import argparse
import time

from necklace_periods import _pykernels

try:
    from necklace_periods import _ckernels
except ImportError:
    _ckernels = None

CASES = [
    ("census k=16 r=8", lambda m: m.census(16, 8)),
    ("census k=18 r=6", lambda m: m.census(18, 6)),
    ("lyndon_codes n=16", lambda m: m.lyndon_codes(16)),
    ("necklace_masks k=16", lambda m: m.necklace_masks(16)),
    ("rotation_orbit_counts n=12 q=3", lambda m: m.rotation_orbit_counts(12, 3)),
]


def best_time(fn, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - start)
    return best, result


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)

    if _ckernels is None:
        print("compiled kernels not built; only the fallback is timed")
    print(f"{'case':32} {'python (s)':>11} {'cython (s)':>11} {'speedup':>8}")
    for name, call in CASES:
        py_t, py_res = best_time(lambda: call(_pykernels), args.repeat)
        if _ckernels is None:
            print(f"{name:32} {py_t:11.4f} {'-':>11} {'-':>8}")
            continue
        c_t, c_res = best_time(lambda: call(_ckernels), args.repeat)
        if c_res != py_res:
            raise SystemExit(f"backends disagree on {name}")
        print(f"{name:32} {py_t:11.4f} {c_t:11.4f} {py_t / c_t:7.1f}x")


if __name__ == "__main__":
    main()
