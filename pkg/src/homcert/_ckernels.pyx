# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
# distutils: language = c++
"""Compiled kernels; same signatures and results as ``_pykernels``."""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport uint64_t, int64_t, int32_t
from libcpp.vector cimport vector

cnp.import_array()

BACKEND = "cython"

cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil
    int __builtin_popcountll(unsigned long long) nogil

cdef extern from "<algorithm>" namespace "std" nogil:
    void std_sort "std::sort"(vector[int32_t].iterator, vector[int32_t].iterator)


cdef inline int _ctz(uint64_t w) noexcept nogil:
    return __builtin_ctzll(w)

cdef inline int _popcount(uint64_t w) noexcept nogil:
    return __builtin_popcountll(w)


def enumerate_profile(earlier, common, by_size, allowed0, sizes):
    cdef Py_ssize_t n_t = len(sizes)
    cdef Py_ssize_t x, i
    if n_t == 0:
        return [()]
    # earlier-neighbor lists in CSR
    cdef vector[int32_t] e_ptr, e_idx
    e_ptr.push_back(0)
    for x in range(n_t):
        for yy in earlier[x]:
            e_idx.push_back(yy)
        e_ptr.push_back(e_idx.size())
    cdef cnp.ndarray[uint64_t, ndim=1] common_a = np.asarray(common, dtype=np.uint64)
    cdef uint64_t* cmn = <uint64_t*> common_a.data
    # candidate masks for each vertex, in increasing order
    cdef vector[int32_t] c_ptr
    cdef vector[uint64_t] c_val
    c_ptr.push_back(0)
    for x in range(n_t):
        for mask in by_size[sizes[x]]:
            c_val.push_back(mask)
        c_ptr.push_back(c_val.size())
    cdef vector[uint64_t] allow0
    for x in range(n_t):
        allow0.push_back(allowed0[x])

    cdef vector[uint64_t] out
    cdef vector[uint64_t] cur = vector[uint64_t](n_t, 0)
    cdef vector[int32_t] pos = vector[int32_t](n_t, 0)
    cdef vector[uint64_t] allowed = vector[uint64_t](n_t, 0)
    cdef uint64_t a, s
    cdef int32_t k
    cdef Py_ssize_t depth = 0

    with nogil:
        # iterative DFS: pos[depth] is the next candidate index to try at depth
        a = allow0[0]
        allowed[0] = a
        pos[0] = c_ptr[0]
        while depth >= 0:
            k = pos[depth]
            if k >= c_ptr[depth + 1]:
                depth -= 1
                continue
            pos[depth] = k + 1
            s = c_val[k]
            if s & ~allowed[depth]:
                continue
            cur[depth] = s
            if depth == n_t - 1:
                for i in range(n_t):
                    out.push_back(cur[i])
                continue
            depth += 1
            a = allow0[depth]
            for i in range(e_ptr[depth], e_ptr[depth + 1]):
                a &= cmn[cur[e_idx[i]]]
            allowed[depth] = a
            pos[depth] = c_ptr[depth]
            if a == 0:
                pos[depth] = c_ptr[depth + 1]

    cdef Py_ssize_t count = out.size() // n_t
    if count == 0:
        return []
    arr = np.empty(count * n_t, dtype=np.uint64)
    cdef uint64_t[::1] av = arr
    for i in range(<Py_ssize_t> out.size()):
        av[i] = out[i]
    return list(map(tuple, arr.reshape(count, n_t).tolist()))


cdef Py_ssize_t _echelon(uint64_t[:, ::1] data, Py_ssize_t ncols, int64_t[::1] pivot_row) noexcept nogil:
    """In-place lowest-bit elimination; pivot_row[c] = row holding pivot c, else -1."""
    cdef Py_ssize_t nrows = data.shape[0], nwords = data.shape[1]
    cdef Py_ssize_t i, w, w0, p, low
    cdef Py_ssize_t rank = 0
    cdef uint64_t word
    for i in range(ncols):
        pivot_row[i] = -1
    for i in range(nrows):
        w0 = 0
        while True:
            while w0 < nwords and data[i, w0] == 0:
                w0 += 1
            if w0 == nwords:
                break
            low = w0 * 64 + _ctz(data[i, w0])
            p = pivot_row[low]
            if p < 0:
                pivot_row[low] = i
                rank += 1
                break
            for w in range(w0, nwords):
                data[i, w] ^= data[p, w]
    return rank


def dense_rank(data, Py_ssize_t ncols):
    cdef uint64_t[:, ::1] d = np.ascontiguousarray(data, dtype=np.uint64)
    cdef int64_t[::1] piv = np.empty(max(ncols, 1), dtype=np.int64)
    return _echelon(d, ncols, piv)


def dense_solve(data, Py_ssize_t ncols):
    cdef uint64_t[:, ::1] d = np.ascontiguousarray(data, dtype=np.uint64)
    cdef int64_t[::1] piv = np.empty(max(ncols, 1), dtype=np.int64)
    cdef Py_ssize_t rhs = ncols - 1
    _echelon(d, ncols, piv)
    if piv[rhs] >= 0:
        return None
    cdef Py_ssize_t nwords = d.shape[1]
    xw_arr = np.zeros(nwords, dtype=np.uint64)
    cdef uint64_t[::1] xw = xw_arr
    xw[rhs >> 6] |= (<uint64_t> 1) << (rhs & 63)
    cdef Py_ssize_t c, w, p
    cdef int parity
    with nogil:
        c = rhs - 1
        while c >= 0:
            p = piv[c]
            if p >= 0:
                # bits below c are zero in a pivot row with low bit c
                parity = 0
                for w in range(c >> 6, nwords):
                    parity ^= _popcount(d[p, w] & xw[w]) & 1
                # the pivot bit itself is not yet set in xw, so it did not contribute
                if parity:
                    xw[c >> 6] |= (<uint64_t> 1) << (c & 63)
            c -= 1
    x = np.zeros(rhs, dtype=np.uint8)
    cdef cnp.uint8_t[::1] xv = x
    for c in range(rhs):
        if (xw[c >> 6] >> (c & 63)) & 1:
            xv[c] = 1
    return x


cdef void _xor_into(vector[int32_t]& a, const vector[int32_t]& b, vector[int32_t]& tmp) noexcept nogil:
    """a <- a symmetric-difference b, both sorted ascending."""
    tmp.clear()
    cdef size_t i = 0, j = 0, na = a.size(), nb = b.size()
    while i < na and j < nb:
        if a[i] < b[j]:
            tmp.push_back(a[i]); i += 1
        elif b[j] < a[i]:
            tmp.push_back(b[j]); j += 1
        else:
            i += 1; j += 1
    while i < na:
        tmp.push_back(a[i]); i += 1
    while j < nb:
        tmp.push_back(b[j]); j += 1
    a.swap(tmp)


def sparse_reduce(indptr, indices, target=None):
    cdef int64_t[::1] ptr = np.ascontiguousarray(indptr, dtype=np.int64)
    cdef int64_t[::1] idx = np.ascontiguousarray(indices, dtype=np.int64)
    cdef Py_ssize_t ncols = ptr.shape[0] - 1
    cdef int64_t nrows_bound = 0
    if idx.shape[0]:
        nrows_bound = np.max(indices) + 1
    tgt_arr = None
    if target is not None:
        tgt_arr = np.unique(np.asarray(target, dtype=np.int64))
        if tgt_arr.shape[0]:
            nrows_bound = max(nrows_bound, int(tgt_arr[-1]) + 1)
    cdef vector[int32_t] pivot_of = vector[int32_t](nrows_bound, -1)
    cdef vector[vector[int32_t]] reduced = vector[vector[int32_t]](ncols)
    cdef vector[vector[int32_t]] history = vector[vector[int32_t]](ncols)
    cdef vector[char] is_pivot = vector[char](ncols, 0)
    cdef vector[int32_t] col, tmp, hist
    cdef Py_ssize_t j, k, rank = 0
    cdef int32_t low, p
    with nogil:
        for j in range(ncols):
            col.clear()
            for k in range(ptr[j], ptr[j + 1]):
                col.push_back(<int32_t> idx[k])
            # incoming columns are sorted by construction; enforce anyway
            _sort_unique(col)
            hist.clear()
            while col.size():
                low = col.back()
                p = pivot_of[low]
                if p < 0:
                    pivot_of[low] = j
                    reduced[j].swap(col)
                    history[j].swap(hist)
                    is_pivot[j] = 1
                    rank += 1
                    break
                _xor_into(col, reduced[p], tmp)
                hist.push_back(p)
    if target is None:
        return rank, None
    cdef int64_t[::1] tv = tgt_arr
    col.clear()
    for k in range(tv.shape[0]):
        col.push_back(<int32_t> tv[k])
    cdef vector[char] flags = vector[char](ncols, 0)
    cdef bint ok = True
    with nogil:
        while col.size():
            p = pivot_of[col.back()]
            if p < 0:
                ok = False
                break
            _xor_into(col, reduced[p], tmp)
            flags[p] ^= 1
        if ok:
            j = ncols - 1
            while j >= 0:
                if is_pivot[j] and flags[j]:
                    for k in range(<Py_ssize_t> history[j].size()):
                        flags[history[j][k]] ^= 1
                j -= 1
    if not ok:
        return rank, None
    xs = [j for j in range(ncols) if is_pivot[j] and flags[j]]
    return rank, np.array(xs, dtype=np.int64)




cdef void _sort_unique(vector[int32_t]& v) noexcept nogil:
    std_sort(v.begin(), v.end())
    cdef size_t i, w = 0
    # mod-2 dedupe: equal neighbors cancel in pairs
    i = 0
    while i < v.size():
        if i + 1 < v.size() and v[i] == v[i + 1]:
            i += 2
            continue
        v[w] = v[i]
        w += 1
        i += 1
    v.resize(w)
