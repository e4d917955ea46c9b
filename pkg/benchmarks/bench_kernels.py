"""Compare the compiled and NumPy kernels on full idempotent scans.

    python benchmarks/bench_kernels.py            # default cases
    python benchmarks/bench_kernels.py --big      # include M_4(F_3) and M_5(F_2)
"""

import argparse
import time

from nilclean import _pykernels

try:
    from nilclean import _ckernels
except ImportError:
    _ckernels = None


def timed(fn, *args):
    start = time.perf_counter()
    out = fn(*args)
    return out, time.perf_counter() - start


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--big", action="store_true")
    args = parser.parse_args()

    cases = [(2, 3), (3, 3), (5, 2), (2, 4)]
    if args.big:
        cases += [(3, 4), (2, 5)]
    backends = [("numpy", _pykernels)]
    if _ckernels is not None:
        backends.insert(0, ("cython", _ckernels))
    else:
        print("compiled kernels not built; only the NumPy fallback is timed")

    print(f"{'case':>10} {'space':>12} {'idem':>7} " + " ".join(f"{name + ' s':>10}" for name, _ in backends))
    for p, n in cases:
        total = p ** (n * n)
        results = []
        times = []
        for _, mod in backends:
            codes, dt = timed(mod.scan_idempotents, p, n, 0, total)
            results.append(codes)
            times.append(dt)
        assert all(r == results[0] for r in results), "backends disagree"
        codes = results[0]
        print(f"{'F_%d n=%d' % (p, n):>10} {total:>12} {len(codes):>7} " + " ".join(f"{t:>10.3f}" for t in times))

        a = [(i * 7 + 3) % p for i in range(n * n)]
        wt = []
        for _, mod in backends:
            _, dt = timed(mod.first_nilpotent_difference, a, codes, p, n)
            wt.append(dt)
        print(f"{'  witness':>10} {'':>12} {'':>7} " + " ".join(f"{t:>10.3f}" for t in wt))


if __name__ == "__main__":
    main()
