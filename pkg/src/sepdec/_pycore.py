"""Pure-Python implementations of the hot search/merge kernels.

``sepdec._fastcore`` (Cython) implements the same four entry points with the
same tie-breaking, so the two are interchangeable; ``sepdec._kernels`` picks
one at import time.  All kernels take CSR adjacency (``indptr``/``indices``
with neighbor lists sorted ascending) and plain ints, and return plain Python
containers.

Conventions shared by both backends:

* orderings are permutations of ``0..n-1`` where position ``n-1`` holds the
  vertex visited first;
* every "pick a maximum" step breaks ties toward the smallest vertex index.
"""

from __future__ import annotations

import heapq


def mcs_order(n, indptr, indices):
    """Maximum cardinality search visit order.

    Each step visits the unvisited vertex with the most visited neighbors,
    smallest index first on ties.  Restarting at weight zero makes the
    per-component orders come out concatenated.
    """
    order = [0] * n
    weight = [0] * n
    visited = bytearray(n)
    heap = [(0, v) for v in range(n)]
    pos = n - 1
    while heap:
        negw, v = heapq.heappop(heap)
        if visited[v] or -negw != weight[v]:
            continue
        visited[v] = 1
        order[pos] = v
        pos -= 1
        for k in range(indptr[v], indptr[v + 1]):
            u = indices[k]
            if not visited[u]:
                weight[u] += 1
                heapq.heappush(heap, (-weight[u], u))
    return order


def peo_ok(n, indptr, indices, order):
    """True iff ``order`` (read left to right) is a perfect elimination order.

    Uses the deferred-check test: for each vertex the later neighbors minus
    the earliest of them must be adjacent to that earliest one.  O(n + m).
    """
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    pending = [None] * n
    for i in range(n):
        v = order[i]
        best = -1
        bestpos = n
        later = []
        for k in range(indptr[v], indptr[v + 1]):
            u = indices[k]
            if pos[u] > i:
                later.append(u)
                if pos[u] < bestpos:
                    bestpos = pos[u]
                    best = u
        if best >= 0 and len(later) > 1:
            lst = pending[best]
            if lst is None:
                lst = pending[best] = []
            for u in later:
                if u != best:
                    lst.append(u)
    mark = bytearray(n)
    for v in range(n):
        lst = pending[v]
        if not lst:
            continue
        for k in range(indptr[v], indptr[v + 1]):
            mark[indices[k]] = 1
        ok = all(mark[u] for u in lst)
        for k in range(indptr[v], indptr[v + 1]):
            mark[indices[k]] = 0
        if not ok:
            return False
    return True


def mcs_m(n, indptr, indices):
    """Minimal triangulation by maximum-cardinality search.

    Returns ``(order, fill)`` where ``order`` follows the mcs_order
    convention and ``fill`` is a sorted list of added (u, v) pairs, u < v.
    Adding ``fill`` to the graph makes it chordal, and the fill is
    inclusion-minimal.

    At every step the chosen vertex v raises the weight of each unnumbered u
    that is adjacent to v or reachable from v through unnumbered vertices of
    weight lower than u's; non-neighbors among those become fill edges.  The
    reachable set is collected with a bucket search over weights, processing
    buckets in increasing order so each vertex is reached at the smallest
    possible intermediate-weight level.
    """
    order = [0] * n
    weight = [0] * n
    numbered = bytearray(n)
    heap = [(0, v) for v in range(n)]
    fill = []
    pos = n - 1
    reached = bytearray(n)
    while heap:
        negw, v = heapq.heappop(heap)
        if numbered[v] or -negw != weight[v]:
            continue
        numbered[v] = 1
        order[pos] = v
        pos -= 1
        if pos < 0:
            break
        buckets = [[] for _ in range(n)]
        bumped = []
        reached[v] = 1
        for k in range(indptr[v], indptr[v + 1]):
            u = indices[k]
            if not numbered[u]:
                reached[u] = 1
                bumped.append(u)
                buckets[weight[u]].append(u)
        neighbor_mark = bytearray(n)
        for k in range(indptr[v], indptr[v + 1]):
            neighbor_mark[indices[k]] = 1
        for j in range(n):
            bj = buckets[j]
            while bj:
                u = bj.pop()
                for k in range(indptr[u], indptr[u + 1]):
                    z = indices[k]
                    if not numbered[z] and not reached[z]:
                        reached[z] = 1
                        if weight[z] > j:
                            bumped.append(z)
                            buckets[weight[z]].append(z)
                        else:
                            bj.append(z)
        reached[:] = bytes(n)
        for u in bumped:
            weight[u] += 1
            heapq.heappush(heap, (-weight[u], u))
            if not neighbor_mark[u]:
                fill.append((u, v) if u < v else (v, u))
    fill.sort()
    return order, fill


def umw_select(n, ei, ej, ew, snapshot=None):
    """Select the edges lying in some maximum-weight spanning tree.

    Edges are bucketed by integer weight and processed from the heaviest
    bucket down to weight 0.  Within one bucket every edge whose endpoints
    are in different components *as of the start of the bucket* is kept, and
    only then are the components merged (the smaller component label
    absorbs the larger).  Returns a keep-flag list aligned with the input;
    ``snapshot(k, kept_indices)`` is invoked after each weight level when
    provided.
    """
    m = len(ei)
    keep = [False] * m
    if n == 0:
        return keep
    wmax = max(ew) if m else 0
    buckets = [[] for _ in range(wmax + 1)]
    for e in range(m):
        buckets[ew[e]].append(e)
    comp = list(range(n))
    members = [[v] for v in range(n)]
    for k in range(wmax, -1, -1):
        bucket = buckets[k]
        for e in bucket:
            if comp[ei[e]] != comp[ej[e]]:
                keep[e] = True
        for e in bucket:
            ci = comp[ei[e]]
            cj = comp[ej[e]]
            if ci == cj:
                continue
            if cj < ci:
                ci, cj = cj, ci
            absorbed = members[cj]
            members[cj] = []
            target = members[ci]
            for z in absorbed:
                comp[z] = ci
                target.append(z)
        if snapshot is not None:
            snapshot(k, [e for e in range(m) if keep[e]])
    return keep
