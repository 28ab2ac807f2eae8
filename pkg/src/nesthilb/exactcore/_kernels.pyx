# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled elimination kernels over a prime field.

Entries are Python ints already reduced into ``[0, p)``; ``p`` must be below
2**31 so that products fit in a signed 64-bit accumulator.
"""

from cpython.mem cimport PyMem_Malloc, PyMem_Free


cdef long long _inv(long long a, long long p) except -1:
    cdef long long t = 0, newt = 1, r = p, newr = a, q, tmp
    while newr != 0:
        q = r // newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = r - q * newr
        r = newr
        newr = tmp
    if r != 1:
        raise ZeroDivisionError("element is not invertible")
    if t < 0:
        t += p
    return t


cdef long long *_load(list rows, Py_ssize_t nrows, Py_ssize_t ncols) except NULL:
    cdef long long *a = <long long *> PyMem_Malloc(
        (nrows * ncols + 1) * sizeof(long long))
    cdef Py_ssize_t i, j
    cdef list row
    if a == NULL:
        raise MemoryError()
    for i in range(nrows):
        row = rows[i]
        for j in range(ncols):
            a[i * ncols + j] = row[j]
    return a


def rref_modp(list rows, Py_ssize_t ncols, long long p):
    """Return ``(rref_rows, pivots)``; zero rows are dropped."""
    cdef Py_ssize_t nrows = len(rows)
    cdef long long *a
    cdef Py_ssize_t rank = 0, col, r, i, j, piv
    cdef long long f, inv, tmp
    cdef long long *ri
    cdef long long *rp
    if nrows == 0 or ncols == 0:
        return [], []
    a = _load(rows, nrows, ncols)
    pivots = []
    try:
        for col in range(ncols):
            if rank == nrows:
                break
            piv = -1
            for r in range(rank, nrows):
                if a[r * ncols + col] != 0:
                    piv = r
                    break
            if piv < 0:
                continue
            if piv != rank:
                for j in range(col, ncols):
                    tmp = a[piv * ncols + j]
                    a[piv * ncols + j] = a[rank * ncols + j]
                    a[rank * ncols + j] = tmp
            rp = a + rank * ncols
            inv = _inv(rp[col], p)
            if inv != 1:
                for j in range(col, ncols):
                    if rp[j] != 0:
                        rp[j] = (rp[j] * inv) % p
            for i in range(nrows):
                if i == rank:
                    continue
                ri = a + i * ncols
                f = ri[col]
                if f == 0:
                    continue
                f = p - f
                for j in range(col, ncols):
                    if rp[j] != 0:
                        ri[j] = (ri[j] + f * rp[j]) % p
            pivots.append(col)
            rank += 1
        out = [[a[i * ncols + j] for j in range(ncols)] for i in range(rank)]
    finally:
        PyMem_Free(a)
    return out, pivots


def reduce_modp(list vecs, list basis, list pivots, Py_ssize_t ncols, long long p):
    """Reduce each vector against an rref basis; returns new remainder lists."""
    cdef Py_ssize_t nb = len(basis), nv = len(vecs)
    cdef long long *b
    cdef long long *v
    cdef long long *bk
    cdef Py_ssize_t k, j, i, pc
    cdef long long c
    if nv == 0:
        return []
    if nb == 0:
        return [list(vec) for vec in vecs]
    b = _load(basis, nb, ncols)
    v = <long long *> PyMem_Malloc((ncols + 1) * sizeof(long long))
    out = []
    try:
        for i in range(nv):
            row = vecs[i]
            for j in range(ncols):
                v[j] = row[j]
            for k in range(nb):
                pc = pivots[k]
                c = v[pc]
                if c == 0:
                    continue
                c = p - c
                bk = b + k * ncols
                for j in range(pc, ncols):
                    if bk[j] != 0:
                        v[j] = (v[j] + c * bk[j]) % p
            out.append([v[j] for j in range(ncols)])
    finally:
        PyMem_Free(b)
        PyMem_Free(v)
    return out
