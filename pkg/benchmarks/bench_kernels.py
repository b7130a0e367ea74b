"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat N]

Every kernel is run on identical inputs under each backend and the results
are compared before anything is timed.
"""

import argparse
import random
import timeit

from asmproj.kernels import available_backends


def _random_row_increasing(rng, n):
    return [x for i in range(1, n + 1) for x in sorted(rng.sample(range(1, n + 1), i))]


def cases():
    rng = random.Random(7)
    tri6 = [_random_row_increasing(rng, 6) for _ in range(200)]
    tri9 = [_random_row_increasing(rng, 9) for _ in range(200)]
    return [
        ("count_asms(7)", lambda m: m.count_asms(7)),
        ("asm_entries(6)", lambda m: sum(1 for _ in m.asm_entries(6))),
        ("potential x200 n=9", lambda m: [m.potential(t, 9) for t in tri9]),
        ("inverted_pairs x200 n=9", lambda m: [m.inverted_pairs(t, 9) for t in tri9]),
        ("monotonize_flat x200 n=6", lambda m: [m.monotonize_flat(t, 6) for t in tri6]),
        ("sweep_row_increasing(5)", lambda m: m.sweep_row_increasing(5)),
    ]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    backends = available_backends()
    if "cython" not in backends:
        print("compiled extension not built; timing the pure-Python backend only")
    names = list(backends)
    print(f"{'kernel':28}" + "".join(f"{n:>12}" for n in names) + ("    speedup" if len(names) > 1 else ""))
    for label, fn in cases():
        results = [fn(backends[n]) for n in names]
        if any(r != results[0] for r in results[1:]):
            raise SystemExit(f"{label}: backends disagree")
        times = [min(timeit.repeat(lambda m=backends[n]: fn(m), number=1, repeat=args.repeat)) for n in names]
        line = f"{label:28}" + "".join(f"{t * 1e3:10.1f}ms" for t in times)
        if len(times) > 1:
            line += f"   {times[0] / times[1]:8.1f}x"
        print(line)


if __name__ == "__main__":
    main()
