"""Timing comparison of the pure-numpy and compiled kernel backends.

Run from the repository root:

    python3 benchmarks/bench_kernels.py [--hi N]

The compiled backend is what normal installs use; the pure backend is the
fallback selected by TORSIONFREE_PURE=1 or when the extension fails to build.
"""
import argparse
import time

import torsionfree._kernels as kernels
from torsionfree._kernels import pure


def bench(label, fn, *args, repeat=3):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    print(f"  {label:<34} {best * 1000:10.2f} ms   -> {result}")
    return best


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--hi", type=int, default=10**7,
                    help="upper end of the prime scan (default 1e7)")
    args = ap.parse_args()
    hi = args.hi

    impls = [("pure", pure)]
    if kernels.COMPILED:
        from torsionfree._kernels import _fast
        impls.append(("compiled", _fast))
    else:
        print("compiled backend not available; timing pure only")

    cos13 = (-1, 6, 5, -9, -5, 1, 1)  # defining poly of Q(2cos 2pi/13)

    for name, impl in impls:
        print(f"{name}:")
        bench("prime_count_range(2, hi)",
              impl.prime_count_range, 2, hi)
        bench("prime_count_in_classes mod 13",
              impl.prime_count_in_classes, 2, hi, 13, (1, 12))
        bench("poly_root_count_over_primes deg 6",
              impl.poly_root_count_over_primes, cos13, 2, min(hi, 10**6))
        bench("totient_min_violation(10^6)",
              impl.totient_min_violation, 10**6)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
