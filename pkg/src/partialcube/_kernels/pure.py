"""Pure-Python bitset kernels.

Reference implementation of the hot loops (BFS metric, interval tables,
pre-hull iteration, hull enumeration over all subsets).  Vertex sets are
plain Python ints used as bitmasks, so this backend works for any n; the
compiled backend in ``_speedups`` mirrors these functions for n <= 64.
"""

from __future__ import annotations


def bfs_all_pairs(n, adj):
    """All-pairs hop distances; flat row-major list, -1 marks unreachable.

    ``adj`` is a sequence of neighbor bitmasks, one per vertex.
    """
    dist = [-1] * (n * n)
    for s in range(n):
        base = s * n
        dist[base + s] = 0
        visited = 1 << s
        frontier = visited
        level = 0
        while frontier:
            reach = 0
            f = frontier
            while f:
                x = (f & -f).bit_length() - 1
                reach |= adj[x]
                f &= f - 1
            frontier = reach & ~visited
            visited |= frontier
            level += 1
            f = frontier
            while f:
                y = (f & -f).bit_length() - 1
                dist[base + y] = level
                f &= f - 1
    return dist


def interval_table(n, dist):
    """Bitmask of the geodesic interval for every vertex pair (flat n*n)."""
    out = [0] * (n * n)
    for x in range(n):
        dx = dist[x * n : (x + 1) * n]
        for y in range(x, n):
            dy = dist[y * n : (y + 1) * n]
            dxy = dx[y]
            m = 0
            for z in range(n):
                if dx[z] + dy[z] == dxy:
                    m |= 1 << z
            out[x * n + y] = m
            out[y * n + x] = m
    return out


def pre_hull_mask(n, itable, mask):
    """Union of pairwise intervals over the members of ``mask``."""
    out = mask
    members = []
    m = mask
    while m:
        members.append((m & -m).bit_length() - 1)
        m &= m - 1
    for i, x in enumerate(members):
        row = x * n
        for y in members[i + 1 :]:
            out |= itable[row + y]
    return out


def hull_mask(n, itable, mask):
    """Iterate the pre-hull to its fixpoint.

    Returns (hull, depth) where depth is the number of strictly growing
    iterations, i.e. the least k with the k-th iterate already convex.
    Intervals between vertices added in earlier rounds are already in the
    current set, so each round only scans pairs touching new vertices.
    """
    cur = mask
    new = mask
    depth = 0
    while new:
        acc = 0
        nm = new
        while nm:
            x = (nm & -nm).bit_length() - 1
            nm &= nm - 1
            row = x * n
            cm = cur
            while cm:
                y = (cm & -cm).bit_length() - 1
                cm &= cm - 1
                acc |= itable[row + y]
        nxt = cur | acc
        if nxt == cur:
            break
        depth += 1
        new = nxt & ~cur
        cur = nxt
    return cur, depth


def hull_family(n, itable):
    """Hulls of all 2^n subsets, deduplicated and sorted by mask value."""
    fam = set()
    for sub in range(1 << n):
        if sub in fam:
            continue  # already known to be a hull, hence convex
        fam.add(hull_mask(n, itable, sub)[0])
    return sorted(fam)
