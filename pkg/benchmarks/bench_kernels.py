"""Time the compiled kernels against the pure-Python fallback.

Run from the repository root:

    python3 benchmarks/bench_kernels.py [--repeats N]

Each row reports the best of N timed passes for one workload.  The
fold and reduce workloads replay a fixed batch of pseudorandom words;
the brute workload scans every forward word of 14 turns once.
"""

import argparse
import random
import time

from pullcalc import _purekernel as pure

try:
    from pullcalc import _speedups as compiled
except ImportError:
    compiled = None


def make_words(count, length, seed=20260815):
    rng = random.Random(seed)
    return [tuple(rng.randrange(4) for _ in range(length)) for _ in range(count)]


def best_of(repeats, fn):
    times = []
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    short = make_words(2000, 30)
    long_words = make_words(50, 4000)
    alternating = (0, 1) * 250  # forces the big-integer path

    workloads = [
        ("fold 2000x30", lambda impl: [impl.fold_turns(w) for w in short]),
        ("fold 50x4000", lambda impl: [impl.fold_turns(w) for w in long_words]),
        ("fold big-int x200", lambda impl: [impl.fold_turns(alternating) for _ in range(200)]),
        ("reduce 2000x30", lambda impl: [impl.reduce_turns(w) for w in short]),
        ("reduce 50x4000", lambda impl: [impl.reduce_turns(w) for w in long_words]),
        ("brute n=14", lambda impl: impl.brute_max_total(14)),
    ]

    print("%-20s %12s %12s %8s" % ("workload", "pure (s)", "compiled (s)", "speedup"))
    for name, job in workloads:
        t_pure = best_of(args.repeats, lambda: job(pure))
        if compiled is None:
            print("%-20s %12.4f %12s %8s" % (name, t_pure, "-", "-"))
            continue
        got_pure = job(pure)
        got_fast = job(compiled)
        if got_pure != got_fast:
            raise SystemExit("kernel mismatch on %r" % name)
        t_fast = best_of(args.repeats, lambda: job(compiled))
        print("%-20s %12.4f %12.4f %7.1fx" % (name, t_pure, t_fast, t_pure / t_fast))
    if compiled is None:
        print("extension not built; showing the fallback alone")


if __name__ == "__main__":
    main()
