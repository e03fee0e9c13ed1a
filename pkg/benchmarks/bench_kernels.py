"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py --order 2000 --repeat 3
"""
import argparse
import time

from stairs import _pykernels, kernels
from stairs.steps import ALL, ODD, PRIMES, enumerate_upto

CASES = [
    ("all, unbounded", ALL, None),
    ("all, M=1", ALL, 1),
    ("odd, M=2", ODD, 2),
    ("primes, unbounded", PRIMES, None),
]


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--order", type=int, default=2000)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    backends = [("python", _pykernels)]
    if kernels.compiled is not None:
        backends.append(("cython", kernels.compiled))
    else:
        print("compiled extension not built; timing the fallback only")

    n = args.order
    print(f"{'case':<22}" + "".join(f"{name:>12}" for name, _ in backends) + "     speedup")
    rows = [(label, enumerate_upto(spec, n), cap) for label, spec, cap in CASES]
    for label, steps, cap in rows:
        times, results = [], []
        for _, mod in backends:
            def job(mod=mod):
                c = [1] + [0] * n
                mod.apply_factors(c, steps, cap)
                results.append(c)
            times.append(best_of(job, args.repeat))
        assert all(r == results[0] for r in results)
        speedup = f"{times[0] / times[-1]:10.1f}x" if len(times) > 1 else ""
        print(f"{label:<22}" + "".join(f"{t:11.4f}s" for t in times) + speedup)

    times = []
    for _, mod in backends:
        times.append(best_of(lambda mod=mod: mod.compositions(n, list(range(1, n + 1))),
                             args.repeat))
    speedup = f"{times[0] / times[-1]:10.1f}x" if len(times) > 1 else ""
    print(f"{'compositions, all':<22}" + "".join(f"{t:11.4f}s" for t in times) + speedup)


if __name__ == "__main__":
    main()
