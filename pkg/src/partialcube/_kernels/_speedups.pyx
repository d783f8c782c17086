# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled bitset kernels for graphs with at most 64 vertices.

Same contracts as ``partialcube._kernels.pure``; vertex sets are single
machine words here, which is what makes hull enumeration over all 2^n
subsets cheap.
"""

from array import array

from libc.stdlib cimport free, malloc

cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil


cdef inline unsigned long long _pop_lowest(unsigned long long* m, int* v) nogil:
    v[0] = __builtin_ctzll(m[0])
    m[0] &= m[0] - 1
    return m[0]


def bfs_all_pairs(int n, adj):
    cdef unsigned long long* am = <unsigned long long*> malloc(n * sizeof(unsigned long long))
    cdef long* dist = <long*> malloc(n * n * sizeof(long))
    cdef int i, s, x, y, level
    cdef unsigned long long visited, frontier, reach, f
    if am == NULL or dist == NULL:
        raise MemoryError()
    try:
        for i in range(n):
            am[i] = adj[i]
        for i in range(n * n):
            dist[i] = -1
        for s in range(n):
            dist[s * n + s] = 0
            visited = (<unsigned long long> 1) << s
            frontier = visited
            level = 0
            while frontier:
                reach = 0
                f = frontier
                while f:
                    _pop_lowest(&f, &x)
                    reach |= am[x]
                frontier = reach & ~visited
                visited |= frontier
                level += 1
                f = frontier
                while f:
                    _pop_lowest(&f, &y)
                    dist[s * n + y] = level
        return [dist[i] for i in range(n * n)]
    finally:
        free(am)
        free(dist)


def interval_table(int n, dist):
    cdef long* d = <long*> malloc(n * n * sizeof(long))
    cdef int x, y, z
    cdef long dxy
    cdef unsigned long long m
    if d == NULL:
        raise MemoryError()
    out = array("Q", bytes(8 * n * n))
    cdef unsigned long long[::1] ov = out
    try:
        for x in range(n * n):
            d[x] = dist[x]
        for x in range(n):
            for y in range(x, n):
                dxy = d[x * n + y]
                m = 0
                for z in range(n):
                    if d[x * n + z] + d[y * n + z] == dxy:
                        m |= (<unsigned long long> 1) << z
                ov[x * n + y] = m
                ov[y * n + x] = m
        return out
    finally:
        free(d)


def pre_hull_mask(int n, unsigned long long[::1] itable, unsigned long long mask):
    cdef unsigned long long out = mask, xm = mask, ym
    cdef int x, y
    while xm:
        _pop_lowest(&xm, &x)
        ym = xm
        while ym:
            _pop_lowest(&ym, &y)
            out |= itable[x * n + y]
    return out


cdef inline unsigned long long _hull(int n, unsigned long long* it,
                                     unsigned long long mask, int* depth) nogil:
    cdef unsigned long long cur = mask, new = mask, acc, nxt, nm, cm
    cdef int x, y
    depth[0] = 0
    while new:
        acc = 0
        nm = new
        while nm:
            _pop_lowest(&nm, &x)
            cm = cur
            while cm:
                _pop_lowest(&cm, &y)
                acc |= it[x * n + y]
        nxt = cur | acc
        if nxt == cur:
            break
        depth[0] += 1
        new = nxt & ~cur
        cur = nxt
    return cur


def hull_mask(int n, unsigned long long[::1] itable, unsigned long long mask):
    cdef int depth = 0
    cdef unsigned long long h = _hull(n, &itable[0], mask, &depth)
    return h, depth


def hull_family(int n, unsigned long long[::1] itable):
    if n > 28:
        raise ValueError("hull_family enumerates 2^n subsets; n > 28 refused")
    cdef unsigned long long sub, h
    cdef unsigned long long total = (<unsigned long long> 1) << n
    cdef int depth = 0
    cdef unsigned long long* it = &itable[0]
    fam = set()
    sub = 0
    while sub < total:
        if sub not in fam:
            h = _hull(n, it, sub, &depth)
            fam.add(h)
        sub += 1
    return sorted(fam)
