"""Benchmark the compiled elimination kernel against the pure-Python twin.

Runs the same greatest-fixed-point eliminations through both kernels,
asserts the results are identical, and reports wall times.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""
from __future__ import annotations

import argparse
import time

from ekdom._kernel import pure
from ekdom.closed_forms import cycle_graph, path_graph
from ekdom.configs import enumerate_dominating_configs
from ekdom.graph import all_pairs_distances
from ekdom.mary import build_perfect_mary

try:
    from ekdom._kernel import _speedups
except ImportError:
    _speedups = None


def instances():
    cases = [
        ("P12 k=1 q=6", path_graph(12), 1, 6),
        ("P14 k=1 q=7", path_graph(14), 1, 7),
        ("P14 k=2 q=5", path_graph(14), 2, 5),
        ("C14 k=1 q=5", cycle_graph(14), 1, 5),
        ("C12 k=2 q=3", cycle_graph(12), 2, 3),
        ("binary d=3 k=2 q=3", build_perfect_mary(2, 3), 2, 3),
    ]
    for name, g, k, q in cases:
        dist = all_pairs_distances(g)
        flat = [d for row in dist for d in row]
        states = enumerate_dominating_configs(dist, k, q)
        yield name, g.n, k, flat, states


def time_one(fn, repeat, *args):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    if _speedups is None:
        print("compiled kernel not built; run: python3 setup.py build_ext --inplace")
        return 1

    header = f"{'instance':<22}{'configs':>9}{'pure':>12}{'compiled':>12}{'speedup':>9}"
    print(header)
    print("-" * len(header))
    budget = 50_000_000
    for name, n, k, flat, states in instances():
        t_py, r_py = time_one(pure.run_elimination, args.repeat,
                              n, k, flat, states, "forward", budget)
        t_c, r_c = time_one(_speedups.run_elimination, args.repeat,
                            n, k, flat, states, "forward", budget)
        assert bytes(r_py[0]) == bytes(r_c[0]) and r_py[1:] == r_c[1:], name
        print(f"{name:<22}{len(states):>9}{t_py:>11.4f}s{t_c:>11.4f}s"
              f"{t_py / t_c:>8.1f}x")
    print("results identical across kernels on every instance")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
