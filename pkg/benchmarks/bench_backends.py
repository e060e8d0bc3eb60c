"""Time the compiled kernel against the pure-Python engine.

    python benchmarks/bench_backends.py [--reps 5]
"""
import argparse
import statistics
import time

from gendijkstra import HAVE_COMPILED, GenSpec, generate, generic_dijkstra

SIZES = [
    (50, 200, 8),
    (100, 500, 16),
    (200, 1000, 32),
    (200, 1000, 80),
]


def _median_time(g, backend, reps):
    times = []
    for _ in range(reps):
        t0 = time.perf_counter()
        tree = generic_dijkstra(g, 0, backend=backend)
        times.append(time.perf_counter() - t0)
    return statistics.median(times), tree


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--reps", type=int, default=5)
    ap.add_argument("--fill", type=float, default=0.7)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()
    if not HAVE_COMPILED:
        raise SystemExit("compiled kernel not built; run `pip install -e . --no-build-isolation`")
    print(f"{'V':>5} {'E':>6} {'U':>4} {'popped':>8} {'python_s':>10} {'compiled_s':>11} {'speedup':>8}")
    for v, e, u in SIZES:
        g = generate(GenSpec(v, e, u, 20, args.fill, args.seed))
        tp, a = _median_time(g, "python", args.reps)
        tc, b = _median_time(g, "compiled", args.reps)
        assert a.label_sets() == b.label_sets()
        print(f"{v:>5} {e:>6} {u:>4} {a.stats.popped:>8} {tp:>10.4f} {tc:>11.4f} {tp / tc:>7.1f}x")


if __name__ == "__main__":
    main()
