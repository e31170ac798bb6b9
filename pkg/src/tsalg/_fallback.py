"""numpy implementations of the compiled kernels (same signatures as ``_speedups``)."""

from __future__ import annotations

import numpy as np


def rref_inplace(M: np.ndarray, p: int, ncols: int = -1) -> list[int]:
    m, n = M.shape
    if ncols < 0 or ncols > n:
        ncols = n
    pivots = []
    row = 0
    for col in range(ncols):
        if row >= m:
            break
        nz = np.nonzero(M[row:, col])[0]
        if nz.size == 0:
            continue
        found = row + int(nz[0])
        if found != row:
            M[[row, found]] = M[[found, row]]
        inv = pow(int(M[row, col]), -1, p)
        if inv != 1:
            M[row, col:] = (M[row, col:] * inv) % p
        factors = M[:, col].copy()
        factors[row] = 0
        hit = np.nonzero(factors)[0]
        if hit.size:
            M[np.ix_(hit, np.arange(col, n))] = (
                M[np.ix_(hit, np.arange(col, n))]
                - np.outer(factors[hit], M[row, col:])
            ) % p
        pivots.append(col)
        row += 1
    return pivots


def _zech_add(a: np.ndarray, b: np.ndarray, zech: np.ndarray, n: int) -> np.ndarray:
    out = np.where(a < 0, b, a)
    both = (a >= 0) & (b >= 0)
    if both.any():
        d = (b[both] - a[both]) % n
        z = zech[d]
        out[both] = np.where(z < 0, -1, (a[both] + z) % n)
    return out


def stabilizer_orders(q, nvars, log_table, zech_table, offsets, coef_logs, exps, ngroup,
                      start=0, count=-1):
    n = q - 1
    total = q**nvars
    if count < 0 or start + count > total:
        count = total - start
    npoints = count
    idx = np.arange(start, start + count, dtype=np.int64)
    pts = np.empty((npoints, nvars), dtype=np.int64)
    rem = idx.copy()
    for j in range(nvars):
        pts[:, j] = log_table[rem % q]
        rem //= q
    counts = np.ones(npoints, dtype=np.int64)
    for g in range(ngroup):
        fixed = np.ones(npoints, dtype=bool)
        for v in range(nvars):
            acc = np.full(npoints, -1, dtype=np.int64)
            for t in range(offsets[g * nvars + v], offsets[g * nvars + v + 1]):
                tl = np.full(npoints, coef_logs[t], dtype=np.int64)
                zero = np.zeros(npoints, dtype=bool)
                for j in range(nvars):
                    e = exps[t, j]
                    if e:
                        zero |= pts[:, j] < 0
                        tl = (tl + e * pts[:, j]) % n if n > 0 else tl
                tl[zero] = -1
                acc = _zech_add(acc, tl, zech_table, n)
            fixed &= acc == pts[:, v]
        counts += fixed
    return counts
