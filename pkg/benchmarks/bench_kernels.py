"""Time the enumeration kernels against each other.

Runs the full oracle path (orbit walk + multiplication tables +
involution classes) once per kernel on a handful of groups and prints
a side-by-side table.  Run from the repo root:

    python3 benchmarks/bench_kernels.py
    python3 benchmarks/bench_kernels.py --names B5 D6 E6 --repeat 3
"""

import argparse
import time

from artifact.diagram import parse_name
from artifact.oracle import available_kernels, enumerate_group, involution_classes

DEFAULT_NAMES = ["B4", "H4", "B5", "A6", "D6", "E6", "A7", "B6"]


def run_once(mat, kernel, name):
    t0 = time.perf_counter()
    table = enumerate_group(mat, name=name, kernel=kernel)
    classes = involution_classes(table)
    return time.perf_counter() - t0, table.count, len(classes)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--names", nargs="+", default=DEFAULT_NAMES,
                    help="diagram names to enumerate (default: %(default)s)")
    ap.add_argument("--repeat", type=int, default=1,
                    help="repetitions per cell, best time wins")
    args = ap.parse_args()

    kernels = available_kernels()
    if "cy" not in kernels:
        print("note: compiled kernel not built, timing the fallback only")
    cols = list(kernels)

    header = f"{'group':8s} {'|W|':>9s} {'classes':>7s}"
    for k in cols:
        header += f" {k:>10s}"
    if len(cols) == 2:
        header += f" {'speedup':>8s}"
    print(header)

    for name in args.names:
        mat = parse_name(name)
        best = {}
        count = nclasses = None
        for k in cols:
            times = []
            for _ in range(args.repeat):
                dt, count, nclasses = run_once(mat, k, name)
                times.append(dt)
            best[k] = min(times)
        row = f"{name:8s} {count:9d} {nclasses:7d}"
        for k in cols:
            row += f" {best[k]:9.3f}s"
        if len(cols) == 2:
            row += f" {best[cols[0]] / best[cols[1]]:7.1f}x"
        print(row)


if __name__ == "__main__":
    main()
