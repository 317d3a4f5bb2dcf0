# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
# distutils: language = c++
"""Compiled twins of the kernels in ``_pykernels``.  Keys must be uint64."""

import numpy as np

from libc.stdint cimport uint64_t, int64_t, uint8_t
from libcpp.vector cimport vector
from libc.stdlib cimport malloc, calloc, free
from libcpp.algorithm cimport sort as std_sort

cdef enum:
    PERM = 0


cdef inline int _width(int size) nogil:
    cdef int w = 0
    cdef int v = size - 1
    while v:
        w += 1
        v >>= 1
    return w if w > 0 else 1


cdef inline uint64_t _perm_mul(uint64_t a, uint64_t b, int d, int w) nogil:
    cdef uint64_t mask = (<uint64_t>1 << w) - 1
    cdef uint64_t r = 0
    cdef uint64_t ai
    cdef int i, s
    for i in range(d):
        s = (d - 1 - i) * w
        ai = (a >> s) & mask
        r |= ((b >> ((d - 1 - <int>ai) * w)) & mask) << s
    return r


cdef inline uint64_t _gf2_mul(uint64_t a, uint64_t b, int n) nogil:
    cdef uint64_t mask = (<uint64_t>1 << n) - 1
    cdef uint64_t r = 0
    cdef uint64_t row, acc
    cdef int i, j
    for i in range(n):
        row = (a >> (i * n)) & mask
        acc = 0
        j = 0
        while row:
            if row & 1:
                acc ^= (b >> (j * n)) & mask
            row >>= 1
            j += 1
        r |= acc << (i * n)
    return r


cdef inline uint64_t _mul(int kind, uint64_t a, uint64_t b, int size, int w) nogil:
    if kind == PERM:
        return _perm_mul(a, b, size, w)
    return _gf2_mul(a, b, size)


# Open-addressing set of uint64 keys.  All-ones never encodes a group
# element (not a bijection / a singular matrix), so it marks empty slots.
cdef uint64_t EMPTY = 0xFFFFFFFFFFFFFFFFULL

cdef struct KeySet:
    uint64_t* slots
    size_t mask
    size_t count


cdef inline size_t _hash(uint64_t k) nogil:
    k ^= k >> 33
    k *= 0xff51afd7ed558ccdULL
    k ^= k >> 33
    return <size_t>k


cdef int _ks_init(KeySet* s, size_t expected) nogil:
    cdef size_t cap = 1024
    while cap < 2 * expected:
        cap <<= 1
    s.slots = <uint64_t*>malloc(cap * sizeof(uint64_t))
    if s.slots == NULL:
        return -1
    cdef size_t i
    for i in range(cap):
        s.slots[i] = EMPTY
    s.mask = cap - 1
    s.count = 0
    return 0


cdef int _ks_grow(KeySet* s) nogil:
    cdef uint64_t* old = s.slots
    cdef size_t oldcap = s.mask + 1
    cdef size_t cap = oldcap * 2
    cdef size_t i, h
    s.slots = <uint64_t*>malloc(cap * sizeof(uint64_t))
    if s.slots == NULL:
        s.slots = old
        return -1
    for i in range(cap):
        s.slots[i] = EMPTY
    s.mask = cap - 1
    for i in range(oldcap):
        if old[i] != EMPTY:
            h = _hash(old[i]) & s.mask
            while s.slots[h] != EMPTY:
                h = (h + 1) & s.mask
            s.slots[h] = old[i]
    free(old)
    return 0


cdef inline int _ks_add(KeySet* s, uint64_t k) nogil:
    """1 if newly inserted, 0 if present, -1 on allocation failure."""
    cdef size_t h = _hash(k) & s.mask
    while s.slots[h] != EMPTY:
        if s.slots[h] == k:
            return 0
        h = (h + 1) & s.mask
    s.slots[h] = k
    s.count += 1
    if 2 * s.count > s.mask:
        if _ks_grow(s) < 0:
            return -1
    return 1


cdef uint64_t* _gf2_tables(const uint64_t* gens, Py_ssize_t ngens, int n) nogil:
    """For each generator B, the table r -> r B over all 2^n row values."""
    cdef size_t rows = (<size_t>1) << n
    cdef uint64_t* t = <uint64_t*>malloc(ngens * rows * sizeof(uint64_t))
    cdef uint64_t mask = (<uint64_t>1 << n) - 1
    cdef Py_ssize_t k
    cdef size_t r, low
    cdef int j
    if t == NULL:
        return NULL
    for k in range(ngens):
        t[k * rows] = 0
        for r in range(1, rows):
            low = r & (~r + 1)
            j = 0
            while (low >> j) != 1:
                j += 1
            t[k * rows + r] = t[k * rows + (r ^ low)] ^ ((gens[k] >> (j * n)) & mask)
    return t


cdef inline uint64_t _gf2_mul_table(uint64_t a, const uint64_t* table, int n) nogil:
    cdef uint64_t mask = (<uint64_t>1 << n) - 1
    cdef uint64_t r = 0
    cdef int i
    for i in range(n):
        r |= table[(a >> (i * n)) & mask] << (i * n)
    return r


cdef inline uint64_t _mul_gen(int kind, uint64_t a, const uint64_t* gens, const uint64_t* tables,
                              Py_ssize_t k, int size, int w) nogil:
    if kind == PERM:
        return _perm_mul(a, gens[k], size, w)
    return _gf2_mul_table(a, tables + k * ((<size_t>1) << size), size)


def mul(int kind, int size, const uint64_t[:] a, const uint64_t[:] b):
    cdef Py_ssize_t n = max(a.shape[0], b.shape[0])
    cdef Py_ssize_t i
    cdef int w = _width(size)
    out = np.empty(n, dtype=np.uint64)
    cdef uint64_t[:] o = out
    cdef bint sa = a.shape[0] == 1
    cdef bint sb = b.shape[0] == 1
    with nogil:
        for i in range(n):
            o[i] = _mul(kind, a[0 if sa else i], b[0 if sb else i], size, w)
    return out


def extend_closure(int kind, int size, const uint64_t[:] seed, const uint64_t[:] old_gens,
                   const uint64_t[:] new_gens, Py_ssize_t ceiling):
    cdef int w = _width(size)
    cdef KeySet visited
    visited.slots = NULL
    cdef vector[uint64_t] gens, frontier, nxt, out
    cdef Py_ssize_t i, k, total = seed.shape[0]
    cdef Py_ssize_t n_old = old_gens.shape[0]
    cdef Py_ssize_t n_all = n_old + new_gens.shape[0]
    cdef uint64_t p
    cdef uint64_t* tables = NULL
    cdef int status = 0
    cdef int added
    for i in range(n_old):
        gens.push_back(old_gens[i])
    for i in range(new_gens.shape[0]):
        gens.push_back(new_gens[i])
    with nogil:
        if kind != PERM and n_all:
            tables = _gf2_tables(gens.data(), n_all, size)
            if tables == NULL:
                status = -1
        if status == 0 and _ks_init(&visited, <size_t>(2 * total)) < 0:
            status = -1
        if status == 0:
            for i in range(seed.shape[0]):
                if _ks_add(&visited, seed[i]) < 0:
                    status = -1
                    break
        if status == 0:
            for i in range(seed.shape[0]):
                for k in range(n_old, n_all):
                    p = _mul_gen(kind, seed[i], gens.data(), tables, k, size, w)
                    added = _ks_add(&visited, p)
                    if added < 0:
                        status = -1
                    elif added:
                        frontier.push_back(p)
            std_sort(frontier.begin(), frontier.end())
        while status == 0 and frontier.size():
            total += frontier.size()
            if total > ceiling:
                status = 1
                break
            out.insert(out.end(), frontier.begin(), frontier.end())
            nxt.clear()
            for i in range(<Py_ssize_t>frontier.size()):
                for k in range(n_all):
                    p = _mul_gen(kind, frontier[i], gens.data(), tables, k, size, w)
                    added = _ks_add(&visited, p)
                    if added < 0:
                        status = -1
                    elif added:
                        nxt.push_back(p)
            std_sort(nxt.begin(), nxt.end())
            frontier.swap(nxt)
        free(visited.slots)
        free(tables)
    if status == 1:
        raise OverflowError(ceiling)
    if status < 0:
        raise MemoryError()
    res = np.empty(out.size(), dtype=np.uint64)
    cdef uint64_t[:] r = res
    for i in range(<Py_ssize_t>out.size()):
        r[i] = out[i]
    return res


cdef inline Py_ssize_t _find(int64_t* parent, Py_ssize_t x) nogil:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


cdef inline Py_ssize_t _search(const uint64_t[:] keys, uint64_t x) nogil:
    cdef Py_ssize_t lo = 0, hi = keys.shape[0]
    cdef Py_ssize_t mid
    while lo < hi:
        mid = (lo + hi) >> 1
        if keys[mid] < x:
            lo = mid + 1
        else:
            hi = mid
    return lo


def conjugation_labels(int kind, int size, const uint64_t[:] keys, const uint64_t[:] gens,
                       const uint64_t[:] gen_invs):
    cdef Py_ssize_t n = keys.shape[0]
    cdef int w = _width(size)
    cdef Py_ssize_t i, k, j, ri, rj
    cdef uint64_t c
    labels = np.arange(n, dtype=np.int64)
    if n == 0:
        return labels
    cdef int64_t[:] par = labels
    cdef int64_t* parent = &par[0]
    with nogil:
        for k in range(gens.shape[0]):
            for i in range(n):
                c = _mul(kind, _mul(kind, gens[k], keys[i], size, w), gen_invs[k], size, w)
                j = _search(keys, c)
                ri = _find(parent, i)
                rj = _find(parent, j)
                if ri < rj:
                    parent[rj] = ri
                elif rj < ri:
                    parent[ri] = rj
        for i in range(n):
            parent[i] = _find(parent, i)
    return labels


def hom_search(const uint8_t[:, :] braid, const uint8_t[:, :] comm, const int64_t[:] firsts,
               int length):
    cdef Py_ssize_t c = braid.shape[0]
    cdef vector[int64_t] out
    cdef vector[int64_t] prefix
    cdef vector[int64_t] cursor
    cdef Py_ssize_t fi, p, q, y
    cdef bint ok
    prefix.resize(length)
    cursor.resize(length)
    with nogil:
        for fi in range(firsts.shape[0]):
            prefix[0] = firsts[fi]
            if length == 1:
                out.push_back(prefix[0])
                continue
            p = 1
            cursor[1] = 0
            while p >= 1:
                y = cursor[p]
                while y < c:
                    if braid[prefix[p - 1], y]:
                        ok = True
                        for q in range(p - 1):
                            if not comm[prefix[q], y]:
                                ok = False
                                break
                        if ok:
                            break
                    y += 1
                if y >= c:
                    p -= 1
                    continue
                prefix[p] = y
                cursor[p] = y + 1
                if p == length - 1:
                    out.insert(out.end(), prefix.begin(), prefix.end())
                else:
                    p += 1
                    cursor[p] = 0
    res = np.empty(out.size(), dtype=np.int64)
    cdef int64_t[:] r = res
    for y in range(<Py_ssize_t>out.size()):
        r[y] = out[y]
    return res.reshape(-1, length)
