"""Compare the numba and numpy cone-counting kernels.

Usage: python3 benchmarks/bench_kernels.py [--repeat R] [--max-m M]

Both backends count the same closed and interior dilates; the results must
agree exactly, and the table reports the best-of-R wall time for each.
"""

import argparse
import time

from lawrence import _kernels
from lawrence.lattice_count import _arrays, compositions
from lawrence.matroid import validate_config

CASES = {
    "example (d=2, n=4)": (2, [[1, 0], [0, 1], [-2, 0], [2, -1]]),
    "d=3, n=5": (3, [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 2, -1], [-2, 1, 3]]),
    "d=2, n=5": (2, [[3, 1], [-1, 2], [1, 0], [0, -3], [2, 2]]),
}


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t)
    return best, out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--max-m", type=int, default=7)
    args = ap.parse_args()

    if not _kernels.HAVE_NUMBA:
        print("numba unavailable (or disabled via LAWRENCE_DISABLE_NUMBA); timing numpy only")
    print(f"{'case':<20} {'m':>2} {'strict':>6} {'count':>10} {'numpy s':>9} {'numba s':>9} {'speedup':>8}")
    for name, (d, vecs) in CASES.items():
        c = validate_config(d, vecs)
        vectors, normals, caps = _arrays(c)
        if _kernels.HAVE_NUMBA:
            # compile outside the timed region
            _kernels.count_cone_points_numba(vectors, normals, caps, compositions(1, c.n), False)
        for m in range(2, args.max_m + 1):
            comps = compositions(m, c.n)
            for strict in (False, True):
                t_np, ref = best_of(lambda: _kernels.count_cone_points_numpy(vectors, normals, caps, comps, strict),
                                    args.repeat)
                if _kernels.HAVE_NUMBA:
                    t_nb, got = best_of(lambda: _kernels.count_cone_points_numba(vectors, normals, caps, comps, strict),
                                        args.repeat)
                    if got != ref:
                        raise SystemExit(f"backend mismatch on {name}, m={m}: {got} != {ref}")
                    nb, speed = f"{t_nb:9.4f}", f"{t_np / t_nb:7.1f}x"
                else:
                    nb, speed = f"{'-':>9}", f"{'-':>8}"
                print(f"{name:<20} {m:>2} {str(strict):>6} {ref:>10} {t_np:9.4f} {nb} {speed}")


if __name__ == "__main__":
    main()
