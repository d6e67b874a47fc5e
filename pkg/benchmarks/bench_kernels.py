"""Time the numba and numpy implementations of the pair scan and triangle
scan on the same input and check that they agree.

    python3 benchmarks/bench_kernels.py --alpha 1/10 --x 6000 --repeat 3
"""
import argparse
import math
import time

import numpy as np

from floorsq import _kernels as K
from floorsq.exact import min_admissible_index, parse_rational


def _best(fn, repeat):
    best, out = math.inf, None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--alpha", default="1/10")
    ap.add_argument("--x", type=int, default=6000)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args(argv)

    alpha = parse_rational(args.alpha)
    p, q = alpha.numerator, alpha.denominator
    ns = np.arange(min_admissible_index(alpha), args.x + 1, dtype=np.int64)
    vals = (p * ns * ns) // q
    mode = K.FLOOR_MODE
    print(f"alpha={alpha} x={args.x} indices={len(vals)} pairs tested={len(vals) * (len(vals) + 1) // 2}")

    t_np, pairs_np = _best(lambda: K.pair_scan_np(vals, p, q, mode, workers=args.workers), args.repeat)
    indptr, idx = K.symmetric_csr(len(vals), *pairs_np)
    t_np_tri, tri_np = _best(lambda: K.triangle_scan_np(indptr, idx, vals, p, q, mode), args.repeat)
    print(f"numpy  pair scan {t_np:8.3f}s  triangles {t_np_tri:8.3f}s  edges={len(pairs_np[0])} triples={len(tri_np)}")

    if not K.HAVE_NUMBA:
        print("numba not installed; skipping the compiled kernels")
        return 0
    K.set_workers(args.workers)
    # first call compiles; keep it out of the timing
    K.pair_scan_nb(vals[:10], np.int64(p), np.int64(q), mode)
    K.triangle_scan_nb(indptr[:2], idx[:0], vals[:1], np.int64(p), np.int64(q), mode)
    t_nb, pairs_nb = _best(lambda: K.pair_scan_nb(vals, np.int64(p), np.int64(q), mode), args.repeat)
    t_nb_tri, tri_nb = _best(lambda: K.triangle_scan_nb(indptr, idx, vals, np.int64(p), np.int64(q), mode),
                             args.repeat)
    print(f"numba  pair scan {t_nb:8.3f}s  triangles {t_nb_tri:8.3f}s  edges={len(pairs_nb[0])} triples={len(tri_nb)}")

    same_pairs = sorted(zip(*map(np.ndarray.tolist, pairs_np))) == sorted(zip(*map(np.ndarray.tolist, pairs_nb)))
    same_tri = sorted(map(tuple, tri_np.tolist())) == sorted(map(tuple, tri_nb.tolist()))
    print(f"speedup pair scan x{t_np / t_nb:.1f}, triangles x{t_np_tri / max(t_nb_tri, 1e-9):.1f}; "
          f"outputs identical: {same_pairs and same_tri}")
    return 0 if same_pairs and same_tri else 1


if __name__ == "__main__":
    raise SystemExit(main())
