"""Compare the compiled and pure-Python kernels on the three hot loops.

    python benchmarks/bench_kernels.py            # X_{2,5} and X_{3,4}
    python benchmarks/bench_kernels.py --r 3 --n 5 --repeat 1
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from homcert import kernels
from homcert.certificate import odd_cycle_complex, w1_power_representative
from homcert.cochains import orbit_slice
from homcert.gf2 import coboundary_matrix, indicator


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t0)
    return min(times), result


def bench_instance(r, n, repeat, skip_python_dense):
    hom, psi = odd_cycle_complex(r, n)
    d = n - 2
    profiles = [list(p) for p in hom.profiles(d)]
    allowed0 = [hom.full_mask] * hom.n_vertices
    lower = orbit_slice(hom.slice(n - 3), psi)
    upper = orbit_slice(hom.slice(n - 2), psi)
    M = coboundary_matrix(lower, upper)
    b = indicator(w1_power_representative(r, n), upper)
    packed = M.to_packed(extra_cols=1)
    packed[np.flatnonzero(b), M.cols >> 6] ^= np.uint64(1) << np.uint64(M.cols & 63)
    indptr, indices = M.to_csc()
    target = np.flatnonzero(b)

    print(f"\nX_({r},{n}): {sum(1 for _ in profiles)} size profiles in dim {d}; quotient matrix {M.rows} x {M.cols}, nnz {M.nnz}")
    print(f"{'kernel':<28}{'python [s]':>12}{'cython [s]':>12}{'speedup':>10}")
    backends = ["python"] + (["cython"] if kernels.compiled_available() else [])
    jobs = {
        f"enumerate dim {d}": lambda k: sum(
            len(k.enumerate_profile(hom.earlier, hom.common, hom.by_size, allowed0, p)) for p in profiles
        ),
        "dense solve (packed rows)": lambda k: k.dense_solve(packed.copy(), M.cols + 1) is not None,
        "sparse solve (columns)": lambda k: k.sparse_reduce(indptr, indices, target)[1] is not None,
    }
    for name, job in jobs.items():
        row = {}
        results = set()
        for be in backends:
            if be == "python" and skip_python_dense and name.startswith("dense"):
                continue
            secs, res = best_of(lambda: job(kernels.backend_module(be)), repeat)
            row[be] = secs
            results.add(res)
        assert len(results) == 1, f"backends disagree on {name}"
        py, cy = row.get("python"), row.get("cython")
        speed = f"{py / cy:8.1f}x" if py and cy else "-"
        fmt = lambda v: f"{v:12.4f}" if v is not None else f"{'-':>12}"
        print(f"{name:<28}{fmt(py)}{fmt(cy)}{speed:>10}")


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--r", type=int)
    parser.add_argument("--n", type=int)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--skip-python-dense", action="store_true", help="the Python dense path is slow on big matrices")
    args = parser.parse_args()
    print(f"compiled kernels available: {kernels.compiled_available()}")
    instances = [(args.r, args.n)] if args.r else [(2, 5), (3, 4)]
    for r, n in instances:
        bench_instance(r, n, args.repeat, args.skip_python_dense)


if __name__ == "__main__":
    main()
