"""NumPy implementation of the hot kernels.

Every function here has a twin with the same signature in ``_ckernels.pyx``.
Keys are packed group elements (see ``carriers``); ``kind`` is 0 for
permutations and 1 for GF(2) matrices, ``size`` is the degree or dimension.
Arrays of dtype ``object`` (keys wider than 64 bits) are only ever routed
here.
"""

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

PERM, GF2 = 0, 1

_COMPRESS_AT = 1 << 22


def _width(size):
    return max(1, (size - 1).bit_length())


def _consts(dtype, *vals):
    if dtype == object:
        return vals
    return tuple(np.uint64(v) for v in vals)


def _perm_mul(size, a, b):
    w = _width(size)
    mask, wq, top = _consts(a.dtype, (1 << w) - 1, w, size - 1)
    out = np.zeros(np.broadcast(a, b).shape, dtype=a.dtype)
    for i in range(size):
        s, = _consts(a.dtype, (size - 1 - i) * w)
        ai = (a >> s) & mask
        out |= ((b >> ((top - ai) * wq)) & mask) << s
    return out


def _gf2_mul(size, a, b):
    n = size
    mask = (1 << n) - 1
    if b.shape[0] == 1:
        # row-by-row lookup table of r -> r @ B
        brow = [int(b[0]) >> (j * n) & mask for j in range(n)]
        table = np.zeros(1 << n, dtype=np.uint64)
        for r in range(1, 1 << n):
            low = r & -r
            table[r] = table[r ^ low] ^ np.uint64(brow[low.bit_length() - 1])
        out = np.zeros(a.shape, dtype=np.uint64)
        for i in range(n):
            rows = (a >> np.uint64(i * n)) & np.uint64(mask)
            out |= table[rows.astype(np.intp)] << np.uint64(i * n)
        return out
    brows = [(b >> np.uint64(j * n)) & np.uint64(mask) for j in range(n)]
    out = np.zeros(np.broadcast(a, b).shape, dtype=np.uint64)
    if a.shape[0] == 1:
        av = int(a[0])
        for i in range(n):
            row = av >> (i * n) & mask
            acc = np.zeros_like(out)
            for j in range(n):
                if row >> j & 1:
                    acc ^= brows[j]
            out |= acc << np.uint64(i * n)
        return out
    one = np.uint64(1)
    for i in range(n):
        row = (a >> np.uint64(i * n)) & np.uint64(mask)
        acc = np.zeros_like(out)
        for j in range(n):
            acc ^= ((row >> np.uint64(j)) & one) * brows[j]
        out |= acc << np.uint64(i * n)
    return out


def mul(kind, size, a, b):
    """Elementwise product ``a[i] * b[i]``; either side may have length 1."""
    if kind == PERM:
        return _perm_mul(size, a, b)
    return _gf2_mul(size, a, b)


def _isin_sorted(sorted_keys, x):
    if sorted_keys.size == 0:
        return np.zeros(x.shape, dtype=bool)
    idx = np.searchsorted(sorted_keys, x)
    idx[idx == sorted_keys.size] = 0
    return sorted_keys[idx] == x


def _fresh(kind, size, src, gens, visited):
    pending, count = [], 0
    for k in range(len(gens)):
        p = mul(kind, size, src, gens[k:k + 1])
        p = p[~_isin_sorted(visited, p)]
        if p.size:
            pending.append(p)
            count += p.size
            if count > _COMPRESS_AT:
                pending = [np.unique(np.concatenate(pending))]
                count = pending[0].size
    if not pending:
        return src[:0]
    return np.unique(np.concatenate(pending))


def extend_closure(kind, size, seed, old_gens, new_gens, ceiling):
    """New elements of <old_gens, new_gens> given the closed subgroup ``seed``.

    Returns the elements outside ``seed`` in breadth-first order, each
    level sorted by key.
    """
    all_gens = np.concatenate([old_gens, new_gens])
    visited = np.sort(seed)
    frontier = _fresh(kind, size, seed, new_gens, visited)
    levels, total = [], seed.size
    while frontier.size:
        total += frontier.size
        if total > ceiling:
            raise OverflowError(ceiling)
        levels.append(frontier)
        visited = np.sort(np.concatenate([visited, frontier]), kind="mergesort")
        frontier = _fresh(kind, size, frontier, all_gens, visited)
    if not levels:
        return seed[:0]
    return np.concatenate(levels)


def conjugation_labels(kind, size, keys, gens, gen_invs):
    """Label each element of the sorted ``keys`` by the smallest index in its
    orbit under ``x -> g x g^-1``."""
    n = keys.size
    src, dst = [], []
    ar = np.arange(n)
    for k in range(len(gens)):
        c = mul(kind, size, mul(kind, size, gens[k:k + 1], keys), gen_invs[k:k + 1])
        src.append(ar)
        dst.append(np.searchsorted(keys, c))
    src = np.concatenate(src)
    dst = np.concatenate(dst)
    graph = csr_matrix((np.ones(src.size, dtype=np.int8), (src, dst)), shape=(n, n))
    _, comp = connected_components(graph, directed=True, connection="weak")
    mins = np.full(comp.max() + 1 if n else 0, n, dtype=np.int64)
    np.minimum.at(mins, comp, ar)
    return mins[comp]


def hom_search(braid, comm, firsts, length):
    """All index tuples ``t`` of the given length with ``t[0]`` in ``firsts``,
    ``braid[t[p-1], t[p]]`` and ``comm[t[q], t[p]]`` for ``q <= p - 2``."""
    braid = np.asarray(braid, dtype=bool)
    comm = np.asarray(comm, dtype=bool)
    out = []

    def extend(prefix):
        p = len(prefix)
        if p == length:
            out.append(prefix)
            return
        mask = braid[prefix[-1]].copy()
        for q in range(p - 1):
            mask &= comm[prefix[q]]
        for y in np.flatnonzero(mask):
            extend(prefix + (int(y),))

    for f in firsts:
        extend((int(f),))
    return np.array(out, dtype=np.int64).reshape(-1, length)
