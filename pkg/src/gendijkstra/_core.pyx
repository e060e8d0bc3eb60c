# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
# distutils: language = c++
"""Compiled generic Dijkstra kernel (pruned mode, corrected queue order).

Mirrors ``search._search_python`` step for step so both engines return the
same labels with the same provenance. Edges arrive in CSR form; each edge's
available units are given as sorted maximal runs.
"""
from libc.stdint cimport int32_t, int64_t, uint32_t, uint64_t
from libcpp.vector cimport vector


cdef struct Lab:
    uint64_t cost
    uint32_t lo
    uint32_t hi
    int32_t vertex
    int32_t edge
    int64_t parent
    int64_t out
    bint alive


cdef inline bint _before(vector[Lab]& pool, int64_t a, int64_t b) noexcept nogil:
    cdef Lab* x = &pool[a]
    cdef Lab* y = &pool[b]
    if x.cost != y.cost:
        return x.cost < y.cost
    if x.lo != y.lo:
        return x.lo < y.lo
    if x.hi != y.hi:
        return x.hi > y.hi
    if x.vertex != y.vertex:
        return x.vertex < y.vertex
    return a < b


cdef void _push(vector[int64_t]& heap, vector[Lab]& pool, int64_t item) noexcept nogil:
    cdef size_t i = heap.size()
    cdef size_t parent
    heap.push_back(item)
    while i > 0:
        parent = (i - 1) >> 1
        if _before(pool, item, heap[parent]):
            heap[i] = heap[parent]
            i = parent
        else:
            break
    heap[i] = item


cdef int64_t _pop(vector[int64_t]& heap, vector[Lab]& pool) noexcept nogil:
    cdef int64_t top = heap[0]
    cdef int64_t last = heap.back()
    heap.pop_back()
    cdef size_t n = heap.size()
    cdef size_t i = 0
    cdef size_t child
    if n == 0:
        return top
    while True:
        child = 2 * i + 1
        if child >= n:
            break
        if child + 1 < n and _before(pool, heap[child + 1], heap[child]):
            child += 1
        if _before(pool, heap[child], last):
            heap[i] = heap[child]
            i = child
        else:
            break
    heap[i] = last
    return top


cdef inline bint _preceq(Lab* a, uint64_t cost, uint32_t lo, uint32_t hi) noexcept nogil:
    return a.cost <= cost and a.lo <= lo and a.hi >= hi


def search(
    int n,
    uint32_t units,
    const int32_t[::1] e_src,
    const int32_t[::1] e_dst,
    const uint64_t[::1] e_cost,
    const int64_t[::1] run_ptr,
    const uint32_t[::1] run_lo,
    const uint32_t[::1] run_hi,
    const int64_t[::1] out_ptr,
    const int32_t[::1] out_idx,
    int s,
    int64_t max_pops,
):
    """Run the search from ``s``.

    Returns ``(costs, los, his, vertices, edges, parents, popped)`` where the
    lists describe permanent labels in pop order and ``parents`` indexes
    into that same order (-1 for the source label).
    """
    cdef vector[Lab] pool
    cdef vector[vector[int64_t]] tent = vector[vector[int64_t]](n)
    cdef vector[vector[int64_t]] perm = vector[vector[int64_t]](n)
    cdef vector[int64_t] heap
    cdef vector[int64_t] order
    cdef Lab lab
    cdef int64_t i, j, k, r, idx, popped = 0
    cdef size_t a, w
    cdef int v, v2, e
    cdef uint64_t cost, c2
    cdef uint32_t lo, hi, clo, chi, rl, rh
    cdef bint dominated
    cdef bint overflow = False

    with nogil:
        lab.cost = 0
        lab.lo = 0
        lab.hi = units
        lab.vertex = s
        lab.edge = -1
        lab.parent = -1
        lab.out = -1
        lab.alive = True
        pool.push_back(lab)
        tent[s].push_back(0)
        _push(heap, pool, 0)

        while heap.size() > 0:
            i = _pop(heap, pool)
            if not pool[i].alive:
                continue
            v = pool[i].vertex
            for a in range(tent[v].size()):
                if tent[v][a] == i:
                    tent[v][a] = tent[v].back()
                    tent[v].pop_back()
                    break
            pool[i].alive = False
            pool[i].out = <int64_t>order.size()
            order.push_back(i)
            perm[v].push_back(i)
            popped += 1
            if popped > max_pops:
                overflow = True
                break
            cost = pool[i].cost
            lo = pool[i].lo
            hi = pool[i].hi
            for k in range(out_ptr[v], out_ptr[v + 1]):
                e = out_idx[k]
                v2 = e_dst[e]
                c2 = cost + e_cost[e]
                for r in range(run_ptr[e], run_ptr[e + 1]):
                    rl = run_lo[r]
                    rh = run_hi[r]
                    if rh <= lo:
                        continue
                    if rl >= hi:
                        break
                    clo = rl if rl > lo else lo
                    chi = rh if rh < hi else hi
                    dominated = False
                    for a in range(perm[v2].size()):
                        if _preceq(&pool[perm[v2][a]], c2, clo, chi):
                            dominated = True
                            break
                    if dominated:
                        continue
                    for a in range(tent[v2].size()):
                        if _preceq(&pool[tent[v2][a]], c2, clo, chi):
                            dominated = True
                            break
                    if dominated:
                        continue
                    w = 0
                    for a in range(tent[v2].size()):
                        j = tent[v2][a]
                        if c2 <= pool[j].cost and clo <= pool[j].lo and chi >= pool[j].hi:
                            pool[j].alive = False
                        else:
                            tent[v2][w] = j
                            w += 1
                    tent[v2].resize(w)
                    lab.cost = c2
                    lab.lo = clo
                    lab.hi = chi
                    lab.vertex = v2
                    lab.edge = e
                    lab.parent = i
                    lab.out = -1
                    lab.alive = True
                    idx = <int64_t>pool.size()
                    pool.push_back(lab)
                    tent[v2].push_back(idx)
                    _push(heap, pool, idx)

    if overflow:
        raise AssertionError("popped more labels than the search-space bound allows")

    cdef Py_ssize_t m = order.size()
    costs = [0] * m
    los = [0] * m
    his = [0] * m
    verts = [0] * m
    edges = [0] * m
    parents = [0] * m
    for k in range(m):
        i = order[k]
        costs[k] = pool[i].cost
        los[k] = pool[i].lo
        his[k] = pool[i].hi
        verts[k] = pool[i].vertex
        edges[k] = pool[i].edge
        parents[k] = pool[pool[i].parent].out if pool[i].parent >= 0 else -1
    return costs, los, his, verts, edges, parents, popped
