"""Backend agreement: compiled kernels must match the pure reference."""

import random

import pytest

from partialcube import Graph, is_connected
from partialcube._kernels import backend_name, compiled_module, hull_family, pure

compiled = compiled_module()
needs_compiled = pytest.mark.skipif(
    compiled is None, reason="compiled kernels not built"
)


def _random_connected(rng, n):
    while True:
        edges = [
            (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.5
        ]
        g = Graph(n, edges)
        if is_connected(g):
            return g


@needs_compiled
def test_backends_agree_on_random_graphs():
    rng = random.Random(7)
    for _ in range(40):
        g = _random_connected(rng, rng.randint(1, 11))
        n = g.n
        adj = list(g.neighbor_masks)
        dp = pure.bfs_all_pairs(n, adj)
        dc = compiled.bfs_all_pairs(n, adj)
        assert dp == dc
        itp = pure.interval_table(n, dp)
        itc = compiled.interval_table(n, dc)
        assert itp == list(itc)
        for _ in range(25):
            mask = rng.randrange(1 << n)
            assert pure.pre_hull_mask(n, itp, mask) == compiled.pre_hull_mask(
                n, itc, mask
            )
            assert pure.hull_mask(n, itp, mask) == tuple(
                compiled.hull_mask(n, itc, mask)
            )
        assert pure.hull_family(n, itp) == compiled.hull_family(n, itc)


def test_pure_handles_wide_graphs():
    # 70 vertices exceeds the compiled single-word limit; facade must route
    g = Graph(70, [(i, i + 1) for i in range(69)])
    assert g.d(0, 69) == 69
    from partialcube import interval

    assert sorted(interval(g, 10, 13)) == [10, 11, 12, 13]


def test_hull_family_bounds():
    g = Graph(3, [(0, 1), (1, 2)])
    fam = hull_family(g.n, g.interval_table)
    assert fam[0] == 0 and fam[-1] == 7


def test_backend_name_reports():
    assert backend_name() in ("pure", "compiled")
