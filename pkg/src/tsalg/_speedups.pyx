# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: GF(p) row reduction and point-stabilizer counting."""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport int64_t, int32_t

cnp.import_array()


cdef inline int64_t _inv_mod(int64_t a, int64_t p):
    cdef int64_t t = 0, newt = 1, r = p, newr = a % p, q, tmp
    while newr != 0:
        q = r // newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = r - q * newr
        r = newr
        newr = tmp
    if t < 0:
        t += p
    return t


def rref_inplace(cnp.ndarray[int64_t, ndim=2] M, int64_t p, Py_ssize_t ncols=-1):
    """Reduced row echelon form of M mod p, in place; returns pivot columns.

    Pivot search is restricted to the first ``ncols`` columns (all by
    default); entries must already lie in [0, p) and p < 2**31.
    """
    cdef Py_ssize_t m = M.shape[0], n = M.shape[1]
    cdef Py_ssize_t row = 0, col, r, j, found
    cdef int64_t inv, f
    cdef int64_t[:, :] A = M
    if ncols < 0 or ncols > n:
        ncols = n
    pivots = []
    for col in range(ncols):
        if row >= m:
            break
        found = -1
        for r in range(row, m):
            if A[r, col] != 0:
                found = r
                break
        if found < 0:
            continue
        if found != row:
            for j in range(n):
                f = A[row, j]
                A[row, j] = A[found, j]
                A[found, j] = f
        inv = _inv_mod(A[row, col], p)
        if inv != 1:
            for j in range(col, n):
                A[row, j] = (A[row, j] * inv) % p
        for r in range(m):
            if r != row:
                f = A[r, col]
                if f != 0:
                    for j in range(col, n):
                        if A[row, j] != 0:
                            A[r, j] = (A[r, j] + (p - f) * A[row, j]) % p
        pivots.append(col)
        row += 1
    return pivots


cdef inline int64_t _zech_add(int64_t a, int64_t b, int64_t[:] zech, int64_t n) noexcept nogil:
    # log-domain addition; -1 encodes the zero element
    cdef int64_t d, z
    if a < 0:
        return b
    if b < 0:
        return a
    d = (b - a) % n
    if d < 0:
        d += n
    z = zech[d]
    if z < 0:
        return -1
    return (a + z) % n


def stabilizer_orders(int64_t q, int64_t nvars,
                      cnp.ndarray[int64_t, ndim=1] log_table,
                      cnp.ndarray[int64_t, ndim=1] zech_table,
                      cnp.ndarray[int64_t, ndim=1] offsets,
                      cnp.ndarray[int64_t, ndim=1] coef_logs,
                      cnp.ndarray[int64_t, ndim=2] exps,
                      int64_t ngroup, int64_t start=0, int64_t count=-1):
    """Stabilizer orders of the points ``start .. start+count-1`` of F_q^nvars.

    Point ``idx`` has coordinate j equal to digit j of idx in base q.
    ``offsets`` has ``ngroup * nvars + 1`` entries delimiting, for each
    (non-identity element, variable) pair, a run of terms given by the
    log of its coefficient and its exponent row. The GIL is released
    while counting, so chunks can run on parallel threads.
    """
    cdef int64_t n = q - 1
    cdef int64_t npoints = 1
    cdef Py_ssize_t i
    for i in range(nvars):
        npoints *= q
    if count < 0 or start + count > npoints:
        count = npoints - start
    out = np.empty(count, dtype=np.int64)
    cdef int64_t[:] res = out
    cdef int64_t[:] logs = log_table
    cdef int64_t[:] zech = zech_table
    cdef int64_t[:] offs = offsets
    cdef int64_t[:] clog = coef_logs
    cdef int64_t[:, :] ex = exps
    pt_arr = np.empty(max(nvars, 1), dtype=np.int64)
    cdef int64_t[:] pt = pt_arr
    cdef int64_t idx, rem, g, v, t, j, acc, tl, e, cnt
    cdef bint fixed, zero_term
    with nogil:
        for idx in range(start, start + count):
            rem = idx
            for j in range(nvars):
                pt[j] = logs[rem % q]
                rem = rem // q
            cnt = 1
            for g in range(ngroup):
                fixed = True
                for v in range(nvars):
                    acc = -1
                    for t in range(offs[g * nvars + v], offs[g * nvars + v + 1]):
                        tl = clog[t]
                        zero_term = False
                        for j in range(nvars):
                            e = ex[t, j]
                            if e != 0:
                                if pt[j] < 0:
                                    zero_term = True
                                    break
                                tl = (tl + e * pt[j]) % n
                        if not zero_term:
                            acc = _zech_add(acc, tl, zech, n)
                    if acc != pt[v]:
                        fixed = False
                        break
                if fixed:
                    cnt = cnt + 1
            res[idx - start] = cnt
    return out
