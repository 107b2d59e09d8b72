#!/usr/bin/env python3
"""Benchmark the Jacobi verification kernel: compiled extension vs pure Python.

The exhaustive Jacobi sweep over root-vector triples is the hot loop of the
whole package (C(240,3) = 2.27M triples for E8).  Run from the repo root:

    python benchmarks/bench_kernels.py [--types D4,F4,E6,E7,E8] [--repeat 3]
"""

import argparse
import time

from simplelie import _kernels, _kernels_py
from simplelie.chevalley import structure_constants
from simplelie.roots import SimpleType, build_root_system

try:
    from simplelie import _speedups
except ImportError:
    _speedups = None


def kernel_tables(name):
    sc = structure_constants(build_root_system(SimpleType.parse(name)))
    rs = sc.rs
    m = 2 * rs.n_pos
    if rs._sum_table is None:
        rs._build_sum_table()
    nmat = [0] * (m * m)
    for i, j in sc.defined_pairs():
        nmat[i * m + j] = sc.n_value(i, j)
    coroot = [list(rs.coroot_vector(i)) for i in range(m)]
    pairing = [0] * (m * m)
    for c in range(m):
        ps = rs.pairing_simple[c]
        for a in range(m):
            pairing[c * m + a] = sum(ps[k] * coroot[a][k] for k in range(rs.rank))
    return m, rs.rank, rs.n_pos, rs._sum_table, nmat, pairing, coroot


def bench(fn, args, repeat):
    best = None
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(*args)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best, result


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--types", default="D4,F4,E6,E7,E8")
    parser.add_argument("--repeat", type=int, default=3)
    opts = parser.parse_args()

    impls = [("python", _kernels_py.jacobi_scan)]
    if _speedups is not None:
        impls.append(("compiled", _speedups.jacobi_scan))
    print(f"active backend at import: {_kernels.BACKEND}")
    header = f"{'type':<6}{'triples':>12}" + "".join(f"{name:>14}" for name, _ in impls)
    if len(impls) == 2:
        header += f"{'speedup':>10}"
    print(header)
    for name in opts.types.split(","):
        args = kernel_tables(name.strip())
        times = []
        triples = None
        for _, fn in impls:
            dt, result = bench(fn, args, opts.repeat)
            ok, count, witness = result
            assert ok and witness is None
            triples = count
            times.append(dt)
        row = f"{name.strip():<6}{triples:>12}" + "".join(f"{t * 1e3:>12.1f}ms" for t in times)
        if len(times) == 2:
            row += f"{times[0] / times[1]:>9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
