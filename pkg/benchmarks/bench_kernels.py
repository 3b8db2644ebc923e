"""Compare the compiled and pure-Python integer kernels.

    python3 benchmarks/bench_kernels.py [--repeat 5] [--seed 0]

Workloads mirror what the package actually sends to the kernels: ranks of
small integer matrices and Phase I feasibility tests from the intersection
oracle on Weyl-fan cones.
"""

import argparse
import random
import sys
import timeit

from beltpoly import _kernels_py, kernels
from beltpoly.combinatorics import enumerate_signed_ordered_partitions
from beltpoly.cones import _restrict, weyl_face_cone_b
from beltpoly.exact_linalg import random_rational_matrix


def rank_workload(rng, count=400):
    out = []
    for _ in range(count):
        r, c = rng.randint(2, 6), rng.randint(3, 7)
        out.append([[rng.randint(-1000, 1000) for _ in range(c)] for _ in range(r)])
    return out


def lp_workload(seed):
    # the Gordan systems built for every 4-dimensional cone of the B_4 fan against a random plane
    g = random_rational_matrix(2, 4, seed, 1000)
    basis = [[int(x) for x in row] for row in g.entries]
    out = []
    for part in enumerate_signed_ordered_partitions(4, 4):
        _, m = _restrict(weyl_face_cone_b(part), basis)
        mt = [list(col) for col in zip(*m)]
        out.append((mt, [-sum(r) for r in mt]))
    return out


def bench(label, fn, items, repeat):
    best = min(timeit.repeat(lambda: [fn(*it) for it in items], number=1, repeat=repeat))
    print(f"  {label:<10} {best * 1e3:9.2f} ms  ({len(items)} calls)")
    return best


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    if kernels.compiled is None:
        print("compiled kernels are not built; only the pure backend is available")
        sys.exit(1)
    rng = random.Random(args.seed)
    ranks = [(m,) for m in rank_workload(rng)]
    lps = lp_workload(args.seed)

    for name, items, attr in (("int_rank", ranks, "int_rank"), ("phase1_feasible", lps, "phase1_feasible")):
        pure_fn, fast_fn = getattr(_kernels_py, attr), getattr(kernels.compiled, attr)
        assert [pure_fn(*it) for it in items] == [fast_fn(*it) for it in items]
        print(name)
        t_pure = bench("python", pure_fn, items, args.repeat)
        t_fast = bench("compiled", fast_fn, items, args.repeat)
        print(f"  speedup    {t_pure / t_fast:9.1f}x")


if __name__ == "__main__":
    main()
