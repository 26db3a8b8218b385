#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Workloads are the package's real hot loops: the all-pairs order-criterion
matrix over a whole group, and all-sources BFS over a maximal-chain move
graph. Run after `pip install -e . --no-build-isolation`:

    python3 benchmarks/bench_kernels.py
"""

import time

import numpy as np

from flagweak import GroupContext, build_interval, enumerate_group, gamma_graph
from flagweak import identity, mu0
from flagweak._kernel import pack_order_keys, pyimpl
from flagweak.chains import _csr

try:
    from flagweak._kernel import cyimpl
except ImportError:
    cyimpl = None


def best_of(fn, reps=5):
    times = []
    for _ in range(reps):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def bench(name, make_args, py_fn, cy_fn, check=np.array_equal):
    args = make_args()
    t_py, out_py = best_of(lambda: py_fn(*args))
    line = f"{name:<34} python {t_py * 1e3:9.2f} ms"
    if cy_fn is not None:
        t_cy, out_cy = best_of(lambda: cy_fn(*args))
        assert check(out_py, out_cy), f"{name}: backends disagree"
        line += f"   cython {t_cy * 1e3:9.2f} ms   speedup {t_py / t_cy:6.1f}x"
    print(line)


def leq_args(r, n):
    elems = list(enumerate_group(GroupContext(r, n)))
    pos, col = pack_order_keys(elems)
    return lambda: (pos, col)


def gamma_csr(r, n):
    ctx = GroupContext(r, n)
    graph = gamma_graph(build_interval(identity(ctx), mu0(ctx)))
    indptr, indices = _csr(graph)
    print(
        f"# chain graph of the full G({r},{n}) interval: "
        f"{len(graph.words)} vertices, {len(graph.edges)} edges"
    )
    return lambda: (indptr, indices)


def main():
    if cyimpl is None:
        print("# compiled kernel not available; timing the fallback only")
    cy_leq = cyimpl.leq_matrix if cyimpl else None
    cy_bfs = cyimpl.bfs_eccentricities if cyimpl else None
    bench("leq matrix  G(2,4)  384x384", leq_args(2, 4), pyimpl.leq_matrix, cy_leq)
    bench("leq matrix  G(3,3)  162x162", leq_args(3, 3), pyimpl.leq_matrix, cy_leq)
    bench("leq matrix  G(4,3)  384x384", leq_args(4, 3), pyimpl.leq_matrix, cy_leq)
    bench(
        "bfs eccentricities  Gamma_3",
        gamma_csr(2, 3),
        pyimpl.bfs_eccentricities,
        cy_bfs,
    )


if __name__ == "__main__":
    main()
