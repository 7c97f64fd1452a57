"""Time GF(p) row reduction: numba kernel against the numpy fallback.

    python3 benchmarks/bench_rref.py --sizes 50 100 200 --prime 101

Both kernels run in the same process on identical random matrices and their
outputs are compared before any timing is reported.
"""

from __future__ import annotations

import argparse
import json
import sys
import timeit

import numpy as np

from quivkit import kernels


def bench(n: int, p: int, repeat: int, rng) -> dict:
    a = rng.integers(0, p, size=(n, n + n // 2), dtype=np.int64)
    r_np, piv_np = kernels.rref_mod_numpy(a.copy(), p)
    row = {"n": n, "p": p, "numpy_s": min(timeit.repeat(lambda: kernels.rref_mod_numpy(a.copy(), p),
                                                          number=1, repeat=repeat))}
    if kernels.rref_mod_numba is None:
        row["numba_s"] = None
        return row
    r_nb, piv_nb = kernels.rref_mod_numba(a.copy(), np.int64(p))  # also triggers compilation
    if not (np.array_equal(r_np, r_nb) and np.array_equal(piv_np, piv_nb)):
        raise SystemExit(f"kernels disagree at n={n}")
    row["numba_s"] = min(timeit.repeat(lambda: kernels.rref_mod_numba(a.copy(), np.int64(p)),
                                       number=1, repeat=repeat))
    row["speedup"] = row["numpy_s"] / row["numba_s"]
    return row


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[25, 50, 100, 200])
    ap.add_argument("--prime", type=int, default=101)
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--json", action="store_true", help="print rows as JSON")
    args = ap.parse_args(argv)
    rng = np.random.default_rng(args.seed)
    rows = [bench(n, args.prime, args.repeat, rng) for n in args.sizes]
    if args.json:
        print(json.dumps({"backend": kernels.backend(), "rows": rows}, indent=2))
        return 0
    print(f"active backend: {kernels.backend()}")
    print(f"{'n':>6} {'numpy [ms]':>12} {'numba [ms]':>12} {'speedup':>9}")
    for r in rows:
        nb = f"{1e3 * r['numba_s']:12.3f}" if r["numba_s"] is not None else f"{'n/a':>12}"
        sp = f"{r['speedup']:9.1f}" if "speedup" in r else f"{'':>9}"
        print(f"{r['n']:>6} {1e3 * r['numpy_s']:12.3f} {nb} {sp}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
