"""Shared fixtures and independent oracles for the test suite.

The oracles here deliberately avoid the library's kernel paths: distances
by Floyd-Warshall, intervals by explicit geodesic enumeration, convex
families by filtering all subsets with the pairwise-interval test.
"""

from __future__ import annotations

import random

import pytest

from partialcube import Graph, interval
from partialcube.constructions import (
    complete_bipartite,
    cycle_graph,
    grid_graph,
    hypercube,
    hypercube_minus_vertex,
    k_2_3,
    m_n_1,
    path_graph,
    random_bipartite,
)

INF = 10**9


# -- independent oracles -----------------------------------------------------


def floyd_warshall(g: Graph) -> list:
    n = g.n
    d = [[0 if i == j else INF for j in range(n)] for i in range(n)]
    for u, v in g.edges:
        d[u][v] = d[v][u] = 1
    for k in range(n):
        dk = d[k]
        for i in range(n):
            dik = d[i][k]
            if dik == INF:
                continue
            di = d[i]
            for j in range(n):
                alt = dik + dk[j]
                if alt < di[j]:
                    di[j] = alt
    return d


def interval_by_paths(g: Graph, x: int, y: int) -> frozenset:
    """Union of the vertices of every shortest (x, y)-path, by enumeration."""
    # plain dict BFS from y, independent of the bitmask kernels
    dist = {y: 0}
    queue = [y]
    for cur in queue:
        for nxt in g.adjacency[cur]:
            if nxt not in dist:
                dist[nxt] = dist[cur] + 1
                queue.append(nxt)
    if x not in dist:
        raise AssertionError("oracle needs a connected graph")
    members = set()

    def walk(v, trail):
        if v == y:
            members.update(trail)
            return
        for w in g.adjacency[v]:
            if dist.get(w, INF) == dist[v] - 1:
                walk(w, trail + [w])

    walk(x, [x])
    return frozenset(members)


def convex_sets_by_filter(g: Graph) -> set:
    """Every subset that passes the direct pairwise-interval test, as masks."""
    out = set()
    for sub in range(1 << g.n):
        members = [v for v in range(g.n) if sub >> v & 1]
        ok = True
        for i, a in enumerate(members):
            for b in members[i + 1 :]:
                if interval(g, a, b).mask & ~sub:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.add(sub)
    return out


def simple_paths_between(g: Graph, x: int, y: int, max_len: int):
    """All simple (x, y)-paths up to a length cap, as vertex tuples."""
    out = []

    def walk(v, trail):
        if len(trail) - 1 > max_len:
            return
        if v == y:
            out.append(tuple(trail))
            return
        for w in g.adjacency[v]:
            if w not in trail:
                walk(w, trail + [w])

    walk(x, [x])
    return out


# -- named graphs --------------------------------------------------------------


@pytest.fixture
def p3():
    return path_graph(3)


@pytest.fixture
def p4():
    return path_graph(4)


@pytest.fixture
def c6():
    return cycle_graph(6)


@pytest.fixture
def q3():
    return hypercube(3)


@pytest.fixture
def q3_minus():
    return hypercube_minus_vertex(3)


@pytest.fixture
def k23():
    return k_2_3()


@pytest.fixture
def m41():
    return m_n_1(4)


def small_graph_pool() -> list:
    """Mixed pool of small connected graphs (not all bipartite)."""
    pool = [
        path_graph(1),
        path_graph(2),
        path_graph(4),
        cycle_graph(4),
        cycle_graph(6),
        hypercube(2),
        hypercube(3),
        hypercube_minus_vertex(3),
        k_2_3(),
        complete_bipartite(1, 4),
        complete_bipartite(3, 3),
        grid_graph(2, 3),
        Graph(3, [(0, 1), (1, 2), (0, 2)]),  # triangle
        Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]),  # odd cycle
    ]
    rng = random.Random(42)
    for _ in range(6):
        pool.append(random_bipartite(rng.randint(5, 9), rng.uniform(0.3, 0.7), rng.randrange(1 << 20)))
    return pool


def bipartite_pool() -> list:
    return [g for g in small_graph_pool() if g.n == 1 or _is_bip(g)]


def _is_bip(g: Graph) -> bool:
    from partialcube import is_bipartite

    return is_bipartite(g)
