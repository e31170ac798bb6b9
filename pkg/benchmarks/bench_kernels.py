"""Compare the compiled and numpy backends on the two hot kernels.

Usage: python3 benchmarks/bench_kernels.py [--repeat N] [--json]
"""

from __future__ import annotations

import argparse
import json
import sys
import timeit

import numpy as np

from tsalg import kernels
from tsalg.actions import d_reg
from tsalg.catalog import load_spec
from tsalg.fields import ExtField
from tsalg.galois import _encode_action
from tsalg.groups import symmetric_group_s3


def rref_case(n: int, p: int, seed: int = 0):
    rng = np.random.default_rng(seed)
    return rng.integers(0, p, size=(n, n + 7)).astype(np.int64)


def stab_case(A, k: int):
    F = ExtField(A.p, k)
    offsets, coef_logs, exps = _encode_action(A, F)
    return (F.q, A.nvars, F.log.astype(np.int64), F.zech.astype(np.int64), offsets, coef_logs, exps,
            A.group.order - 1, 0, F.q ** A.nvars)


def best(fn, repeat: int) -> float:
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args(argv)
    names = sorted(kernels.BACKENDS)
    if len(names) < 2:
        print("compiled backend not built; only the numpy fallback is available", file=sys.stderr)
    rows = []
    for n, p in ((60, 2), (120, 3), (200, 7)):
        M0 = rref_case(n, p)
        times = {}
        results = {}
        for name in names:
            impl = kernels.backend(name)

            def run():
                M = M0.copy()
                results[name] = (impl.rref_inplace(M, p, -1), M)

            times[name] = best(run, args.repeat)
        ref = results[names[0]]
        agree = all(results[k][0] == ref[0] and np.array_equal(results[k][1], ref[1]) for k in names)
        rows.append({"kernel": "rref", "case": f"{n}x{n + 7} over F_{p}", "seconds": times, "agree": agree})
    cases = [("c4-dehom", load_spec("c4-dehom").action, 9), ("s3-dreg", d_reg(symmetric_group_s3(), 3), 2),
             ("c3-dreg", load_spec("c3-dreg").action, 6)]
    for label, A, k in cases:
        args_ = stab_case(A, k)
        times = {}
        results = {}
        for name in names:
            impl = kernels.backend(name)

            def run():
                results[name] = impl.stabilizer_orders(*args_)

            times[name] = best(run, args.repeat)
        agree = all(np.array_equal(results[k_], results[names[0]]) for k_ in names)
        rows.append({"kernel": "stabilizer_orders", "case": f"{label} over F_{A.p}^{k}, {args_[-1]} points",
                     "seconds": times, "agree": agree})
    if args.json:
        print(json.dumps(rows, indent=2, sort_keys=True))
    else:
        header = f"{'kernel':<18} {'case':<38} " + " ".join(f"{n:>10}" for n in names) + "   speedup  agree"
        print(header)
        for r in rows:
            t = r["seconds"]
            speed = t["python"] / t["cython"] if "cython" in t and t["cython"] > 0 else float("nan")
            print(f"{r['kernel']:<18} {r['case']:<38} " + " ".join(f"{t[n]:>10.4f}" for n in names)
                  + f"   {speed:>6.1f}x  {r['agree']}")
    return 0 if all(r["agree"] for r in rows) else 1


if __name__ == "__main__":
    sys.exit(main())
