# cython: language_level=3
"""Compiled implementations of the hot search/merge kernels.

Mirrors sepdec._pycore exactly: same CSR inputs, same smallest-index
tie-breaking, same return values.  The pure module is the reference; the
test suite checks the two against each other on random inputs.
"""

from cpython.mem cimport PyMem_Free, PyMem_Malloc


cdef int* _ialloc(Py_ssize_t count) except NULL:
    cdef int* p = <int*> PyMem_Malloc((count if count > 0 else 1) * sizeof(int))
    if p == NULL:
        raise MemoryError()
    return p


cdef char* _calloc0(Py_ssize_t count) except NULL:
    cdef char* p = <char*> PyMem_Malloc(count if count > 0 else 1)
    cdef Py_ssize_t i
    if p == NULL:
        raise MemoryError()
    for i in range(count):
        p[i] = 0
    return p


cdef void _ifill(int* p, Py_ssize_t count, int value) noexcept:
    cdef Py_ssize_t i
    for i in range(count):
        p[i] = value


def mcs_order(int n, int[::1] indptr, int[::1] indices):
    """Maximum cardinality search order; see _pycore.mcs_order."""
    cdef list out = [0] * n
    if n == 0:
        return out
    cdef int* hw = NULL        # lazy binary heap over (-weight, vertex)
    cdef int* hv = NULL
    cdef int* weight = NULL
    cdef char* vis = NULL
    cdef Py_ssize_t cap = n + indptr[n] + 1
    cdef Py_ssize_t size = 0, i, j, child, k
    cdef int v, u, nw, pos
    try:
        hw = _ialloc(cap)
        hv = _ialloc(cap)
        weight = _ialloc(n)
        vis = _calloc0(n)
        _ifill(weight, n, 0)
        for v in range(n):     # (0, 0), (0, 1), ... is already heap-ordered
            hw[size] = 0
            hv[size] = v
            size += 1
        pos = n - 1
        while size > 0:
            nw = hw[0]
            v = hv[0]
            size -= 1
            hw[0] = hw[size]
            hv[0] = hv[size]
            i = 0
            while True:        # sift down
                child = 2 * i + 1
                if child >= size:
                    break
                if child + 1 < size and (hw[child + 1] < hw[child] or
                        (hw[child + 1] == hw[child] and hv[child + 1] < hv[child])):
                    child += 1
                if hw[child] < hw[i] or (hw[child] == hw[i] and hv[child] < hv[i]):
                    hw[i], hw[child] = hw[child], hw[i]
                    hv[i], hv[child] = hv[child], hv[i]
                    i = child
                else:
                    break
            if vis[v] or -nw != weight[v]:
                continue
            vis[v] = 1
            out[pos] = v
            pos -= 1
            for k in range(indptr[v], indptr[v + 1]):
                u = indices[k]
                if not vis[u]:
                    weight[u] += 1
                    i = size   # push a fresh entry and sift up
                    hw[i] = -weight[u]
                    hv[i] = u
                    size += 1
                    while i > 0:
                        j = (i - 1) // 2
                        if hw[i] < hw[j] or (hw[i] == hw[j] and hv[i] < hv[j]):
                            hw[i], hw[j] = hw[j], hw[i]
                            hv[i], hv[j] = hv[j], hv[i]
                            i = j
                        else:
                            break
    finally:
        PyMem_Free(hw)
        PyMem_Free(hv)
        PyMem_Free(weight)
        PyMem_Free(vis)
    return out


def peo_ok(int n, int[::1] indptr, int[::1] indices, order):
    """Perfect elimination order test; see _pycore.peo_ok."""
    if n == 0:
        return True
    cdef Py_ssize_t m = indptr[n]
    cdef int* pos = NULL
    cdef int* head = NULL      # pending-list heads, -1 empty
    cdef int* nxt = NULL
    cdef int* val = NULL
    cdef char* mark = NULL
    cdef Py_ssize_t used = 0, k
    cdef int i, v, u, best, bestpos, cell, ok = 1
    try:
        pos = _ialloc(n)
        head = _ialloc(n)
        nxt = _ialloc(m + 1)
        val = _ialloc(m + 1)
        mark = _calloc0(n)
        for i in range(n):
            pos[<int> order[i]] = i
        _ifill(head, n, -1)
        for i in range(n):
            v = order[i]
            best = -1
            bestpos = n
            for k in range(indptr[v], indptr[v + 1]):
                u = indices[k]
                if pos[u] > i and pos[u] < bestpos:
                    bestpos = pos[u]
                    best = u
            if best < 0:
                continue
            for k in range(indptr[v], indptr[v + 1]):
                u = indices[k]
                if pos[u] > i and u != best:
                    val[used] = u
                    nxt[used] = head[best]
                    head[best] = <int> used
                    used += 1
        for v in range(n):
            if head[v] < 0:
                continue
            for k in range(indptr[v], indptr[v + 1]):
                mark[indices[k]] = 1
            cell = head[v]
            while cell >= 0:
                if not mark[val[cell]]:
                    ok = 0
                    break
                cell = nxt[cell]
            for k in range(indptr[v], indptr[v + 1]):
                mark[indices[k]] = 0
            if not ok:
                break
    finally:
        PyMem_Free(pos)
        PyMem_Free(head)
        PyMem_Free(nxt)
        PyMem_Free(val)
        PyMem_Free(mark)
    return bool(ok)


def mcs_m(int n, int[::1] indptr, int[::1] indices):
    """Minimal triangulation; see _pycore.mcs_m.

    Vertex selection scans for the maximum weight (smallest index wins),
    which matches the lazy-heap rule of the pure version.
    """
    cdef list order = [0] * n
    cdef list fill = []
    if n == 0:
        return order, fill
    cdef int* weight = NULL
    cdef int* bucket_head = NULL
    cdef int* bnext = NULL
    cdef int* sbuf = NULL
    cdef char* numbered = NULL
    cdef char* reached = NULL
    cdef char* nbmark = NULL
    cdef Py_ssize_t k
    cdef int step, v, u, z, j, best, bw, scount, si, pos
    try:
        weight = _ialloc(n)
        bucket_head = _ialloc(n)
        bnext = _ialloc(n)
        sbuf = _ialloc(n)
        numbered = _calloc0(n)
        reached = _calloc0(n)
        nbmark = _calloc0(n)
        _ifill(weight, n, 0)
        pos = n - 1
        for step in range(n):
            best = -1
            bw = -1
            for v in range(n):
                if not numbered[v] and weight[v] > bw:
                    bw = weight[v]
                    best = v
            v = best
            numbered[v] = 1
            order[pos] = v
            pos -= 1
            if pos < 0:
                break
            _ifill(bucket_head, n, -1)
            scount = 0
            reached[v] = 1
            for k in range(indptr[v], indptr[v + 1]):
                u = indices[k]
                nbmark[u] = 1
                if not numbered[u]:
                    reached[u] = 1
                    sbuf[scount] = u
                    scount += 1
                    bnext[u] = bucket_head[weight[u]]
                    bucket_head[weight[u]] = u
            for j in range(n):
                while bucket_head[j] >= 0:
                    u = bucket_head[j]
                    bucket_head[j] = bnext[u]
                    for k in range(indptr[u], indptr[u + 1]):
                        z = indices[k]
                        if not numbered[z] and not reached[z]:
                            reached[z] = 1
                            if weight[z] > j:
                                sbuf[scount] = z
                                scount += 1
                                bnext[z] = bucket_head[weight[z]]
                                bucket_head[weight[z]] = z
                            else:
                                bnext[z] = bucket_head[j]
                                bucket_head[j] = z
            for si in range(scount):
                u = sbuf[si]
                weight[u] += 1
                if not nbmark[u]:
                    fill.append((u, v) if u < v else (v, u))
            for k in range(n):
                reached[k] = 0
            for k in range(indptr[v], indptr[v + 1]):
                nbmark[indices[k]] = 0
    finally:
        PyMem_Free(weight)
        PyMem_Free(bucket_head)
        PyMem_Free(bnext)
        PyMem_Free(sbuf)
        PyMem_Free(numbered)
        PyMem_Free(reached)
        PyMem_Free(nbmark)
    fill.sort()
    return order, fill


def umw_select(int n, int[::1] ei, int[::1] ej, int[::1] ew):
    """Max-weight spanning-tree union edge selection; see _pycore.umw_select."""
    cdef Py_ssize_t m = ei.shape[0]
    cdef list keep = [False] * m
    if n == 0 or m == 0:
        return keep
    cdef int wmax = 0
    cdef Py_ssize_t e
    for e in range(m):
        if ew[e] > wmax:
            wmax = ew[e]
    cdef int* start = NULL     # counting sort of edge ids by weight
    cdef int* ordered = NULL
    cdef int* comp = NULL
    cdef int* head = NULL      # component member lists
    cdef int* tail = NULL
    cdef int* nxt = NULL
    cdef int kk, ci, cj, zz, lo, hi
    cdef Py_ssize_t b, first, last
    try:
        start = _ialloc(wmax + 2)
        ordered = _ialloc(m)
        comp = _ialloc(n)
        head = _ialloc(n)
        tail = _ialloc(n)
        nxt = _ialloc(n)
        _ifill(start, wmax + 2, 0)
        for e in range(m):
            start[ew[e] + 1] += 1
        for kk in range(1, wmax + 2):
            start[kk] += start[kk - 1]
        for e in range(m):
            ordered[start[ew[e]]] = <int> e
            start[ew[e]] += 1
        for kk in range(wmax + 1, 0, -1):   # undo the placement shift
            start[kk] = start[kk - 1]
        start[0] = 0
        for kk in range(n):
            comp[kk] = kk
            head[kk] = kk
            tail[kk] = kk
            nxt[kk] = -1
        for kk in range(wmax, -1, -1):
            first = start[kk]
            last = start[kk + 1]
            for b in range(first, last):
                e = ordered[b]
                if comp[ei[e]] != comp[ej[e]]:
                    keep[e] = True
            for b in range(first, last):
                e = ordered[b]
                ci = comp[ei[e]]
                cj = comp[ej[e]]
                if ci == cj:
                    continue
                if cj < ci:
                    lo = cj
                    hi = ci
                else:
                    lo = ci
                    hi = cj
                zz = head[hi]
                while zz >= 0:
                    comp[zz] = lo
                    zz = nxt[zz]
                nxt[tail[lo]] = head[hi]
                tail[lo] = tail[hi]
                head[hi] = -1
    finally:
        PyMem_Free(start)
        PyMem_Free(ordered)
        PyMem_Free(comp)
        PyMem_Free(head)
        PyMem_Free(tail)
        PyMem_Free(nxt)
    return keep
