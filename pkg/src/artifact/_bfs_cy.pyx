# cython: boundscheck=False, wraparound=False, cdivision=True
# cython: language_level=3
"""Compiled enumeration kernel (hot lane).

Same two entry points as _bfs_py; the per-row hashing and table
bookkeeping run in C with an open-addressing table over the quantized
tracking rows.  The matrix products stay in numpy (BLAS beats anything
hand-rolled here), so block results are bit-identical to the fallback
and the differential test can compare every output array verbatim.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport fabs, llrint

cnp.import_array()

NAME = "cython"

GUARD = 1e-6
_CHUNK = 4096

cdef double _SCALE = 1e6
cdef double _GUARD_C = 1e-6

# FNV-1a over the quantized row, folded to the table mask
cdef inline unsigned long long _fnv(const cnp.int64_t* q, Py_ssize_t n) noexcept:
    cdef unsigned long long h = 14695981039346656037ULL
    cdef Py_ssize_t t
    cdef unsigned long long v
    cdef int b
    for t in range(n):
        v = <unsigned long long> q[t]
        for b in range(8):
            h ^= (v >> (8 * b)) & 0xffULL
            h *= 1099511628211ULL
    return h


cdef inline void _quantize(const double* row, cnp.int64_t* out, Py_ssize_t n) noexcept:
    cdef Py_ssize_t t
    for t in range(n):
        # llrint under the default rounding mode is round-half-even,
        # matching np.round in the fallback lane
        out[t] = <cnp.int64_t> llrint(row[t] * _SCALE)


cdef inline bint _same_q(const cnp.int64_t* a, const cnp.int64_t* b, Py_ssize_t n) noexcept:
    cdef Py_ssize_t t
    for t in range(n):
        if a[t] != b[t]:
            return 0
    return 1


cdef void _rehash(cnp.int64_t[:, ::1] qrows, cnp.int32_t[::1] slots,
                  Py_ssize_t count) noexcept:
    cdef Py_ssize_t cap = slots.shape[0]
    cdef unsigned long long mask = <unsigned long long> (cap - 1)
    cdef Py_ssize_t e, n = qrows.shape[1]
    cdef unsigned long long pos
    slots[:] = -1
    for e in range(count):
        pos = _fnv(&qrows[e, 0], n) & mask
        while slots[pos] != -1:
            pos = (pos + 1) & mask
        slots[pos] = <cnp.int32_t> e


cdef Py_ssize_t _scan(const double[:, ::1] images,
                      double[:, ::1] vectors,
                      cnp.int64_t[:, ::1] qrows,
                      cnp.int32_t[::1] slots,
                      cnp.int32_t[::1] parent,
                      cnp.int8_t[::1] pgen,
                      cnp.int32_t[:, ::1] right,
                      Py_ssize_t head, int gen, Py_ssize_t count,
                      Py_ssize_t cap, double* drift, int* hit_cap) except -2:
    """Insert one (block, generator) batch; returns the updated count."""
    cdef Py_ssize_t rows = images.shape[0]
    cdef Py_ssize_t n = images.shape[1]
    cdef unsigned long long mask = <unsigned long long> (slots.shape[0] - 1)
    cdef cnp.int64_t q[64]
    cdef unsigned long long pos
    cdef cnp.int32_t j
    cdef Py_ssize_t r, t
    cdef double d, dmax = 0.0

    hit_cap[0] = 0
    for r in range(rows):
        _quantize(&images[r, 0], q, n)
        pos = _fnv(q, n) & mask
        while True:
            j = slots[pos]
            if j == -1:
                break
            if _same_q(&qrows[j, 0], q, n):
                break
            pos = (pos + 1) & mask
        if j == -1:
            if count >= cap:
                drift[0] = dmax
                hit_cap[0] = 1
                return count
            for t in range(n):
                vectors[count, t] = images[r, t]
                qrows[count, t] = q[t]
            parent[count] = <cnp.int32_t> (head + r)
            pgen[count] = <cnp.int8_t> gen
            right[head + r, gen] = <cnp.int32_t> count
            slots[pos] = <cnp.int32_t> count
            count += 1
        else:
            right[head + r, gen] = j
            for t in range(n):
                d = fabs(vectors[j, t] - images[r, t])
                if d > dmax:
                    dmax = d
    drift[0] = dmax
    return count


def bfs(gens, v0, cap):
    """Drop-in for _bfs_py.bfs; see that module for the contract."""
    gens = np.ascontiguousarray(gens, dtype=np.float64)
    cdef Py_ssize_t g = gens.shape[0]
    cdef Py_ssize_t n = int(v0.shape[0])
    if n > 64:
        raise ValueError(f"compiled kernel supports rank <= 64, got {n}")
    cap = int(cap)

    cdef Py_ssize_t alloc = 1024
    vectors = np.zeros((alloc, n), dtype=np.float64)
    qrows = np.zeros((alloc, n), dtype=np.int64)
    parent = np.full(alloc, -1, dtype=np.int32)
    pgen = np.full(alloc, -1, dtype=np.int8)
    right = np.full((alloc, g), -1, dtype=np.int32)

    cdef Py_ssize_t table_cap = 4096
    slots = np.full(table_cap, -1, dtype=np.int32)

    v0 = np.asarray(v0, dtype=np.float64)
    vectors[0] = v0
    qrows[0] = np.rint(v0 * _SCALE).astype(np.int64)
    _rehash(qrows, slots, 1)

    cdef Py_ssize_t count = 1
    cdef Py_ssize_t head = 0
    cdef Py_ssize_t hi, need
    cdef int i
    cdef double drift = 0.0
    cdef int hit_cap = 0

    def finish(closed, c):
        return (
            vectors[:c].copy(),
            parent[:c].copy(),
            pgen[:c].copy(),
            right[:c].copy(),
            closed,
            c,
        )

    while head < count:
        hi = min(count, head + _CHUNK)
        block = vectors[head:hi]
        for i in range(g):
            # make room for the worst case (every row new) before the C pass
            need = count + (hi - head)
            while need > alloc:
                alloc *= 2
                vectors = np.vstack([vectors, np.zeros_like(vectors)])
                qrows = np.vstack([qrows, np.zeros_like(qrows)])
                parent = np.concatenate([parent, np.full(len(parent), -1, np.int32)])
                pgen = np.concatenate([pgen, np.full(len(pgen), -1, np.int8)])
                right = np.vstack([right, np.full(right.shape, -1, np.int32)])
                block = vectors[head:hi]
            while 2 * need > table_cap:
                table_cap *= 2
                slots = np.full(table_cap, -1, dtype=np.int32)
                _rehash(qrows, slots, count)
            images = np.ascontiguousarray(block @ gens[i])
            count = _scan(images, vectors, qrows, slots, parent, pgen, right,
                          head, i, count, cap, &drift, &hit_cap)
            if hit_cap:
                return finish(False, count)
            if drift > _GUARD_C:
                raise RuntimeError(
                    f"tracking-vector collision: equal keys, points {drift:.3e} apart"
                )
        head = hi
    return finish(True, count)


def left_inverse(parent, pgen, right):
    """Drop-in for _bfs_py.left_inverse; see that module for the contract."""
    right = np.ascontiguousarray(right, dtype=np.int32)
    parent = np.ascontiguousarray(parent, dtype=np.int32)
    pgen = np.ascontiguousarray(pgen, dtype=np.int8)
    cdef Py_ssize_t N = right.shape[0]
    cdef Py_ssize_t g = right.shape[1]
    left = np.empty((N, g), dtype=np.int32)
    inv = np.empty(N, dtype=np.int32)

    cdef cnp.int32_t[:, ::1] right_v = right
    cdef cnp.int32_t[:, ::1] left_v = left
    cdef cnp.int32_t[::1] parent_v = parent
    cdef cnp.int8_t[::1] pgen_v = pgen
    cdef cnp.int32_t[::1] inv_v = inv
    cdef Py_ssize_t e
    cdef int i
    cdef cnp.int32_t p
    cdef cnp.int8_t j

    for i in range(g):
        left_v[0, i] = right_v[0, i]
    for e in range(1, N):
        p = parent_v[e]
        j = pgen_v[e]
        # e = p*s_j, so s_i*e = (s_i*p)*s_j
        for i in range(g):
            left_v[e, i] = right_v[left_v[p, i], j]
    inv_v[0] = 0
    for e in range(1, N):
        inv_v[e] = left_v[inv_v[parent_v[e]], pgen_v[e]]
    return left, inv
