"""Time the compiled and pure-Python enumeration kernels on all of S_n.

    python3 benchmarks/bench_kernels.py --n 6
"""

import argparse
import time

from bruhatpipes.kernels import available_backends
from bruhatpipes.perm import all_perms


def _time(fn, perms, repeat):
    best = float("inf")
    total = 0
    for _ in range(repeat):
        t0 = time.perf_counter()
        total = sum(fn(w) for w in perms)
        best = min(best, time.perf_counter() - t0)
    return best, total


def main(argv=None):
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=6)
    ap.add_argument("--repeat", type=int, default=1)
    args = ap.parse_args(argv)

    perms = list(all_perms(args.n))
    backends = available_backends()
    tasks = {
        "pd_cross_sets": lambda k: lambda w: len(k.pd_cross_sets(w)),
        "bpd_grids": lambda k: lambda w: len(k.bpd_grids(w)),
        "increasing_chain_ends": lambda k: lambda w: sum(len(k.increasing_chain_ends(w, j)) for j in range(1, args.n)),
    }
    print(f"n={args.n}, {len(perms)} permutations, backends: {', '.join(backends)}")
    for name, make in tasks.items():
        row = {}
        counts = set()
        for bname, mod in backends.items():
            secs, total = _time(make(mod), perms, args.repeat)
            row[bname] = secs
            counts.add(total)
        assert len(counts) == 1, f"{name}: backends disagree {counts}"
        line = "  ".join(f"{b}={s:.3f}s" for b, s in row.items())
        if "cython" in row and row["cython"] > 0:
            line += f"  speedup={row['python'] / row['cython']:.1f}x"
        print(f"{name:<24}{line}  (objects={counts.pop()})")


if __name__ == "__main__":
    main()
