"""Graph builders and transformers.

Named families, cartesian products, proper covers with their expansions,
class contractions, and gated amalgams.  All builders are deterministic;
the only seeded randomness lives in ``random_bipartite``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from .convexity import VertexSetLike, _as_mask, is_gated
from .errors import ConstructionError, NotPartialCubeError
from .graphs import Graph, VertexSet, induced_subgraph, is_connected
from .theta import is_partial_cube, theta_classes, w_mask

# -- named families ----------------------------------------------------------


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ConstructionError("path needs n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 4 or n % 2:
        raise ConstructionError("even cycle needs an even n >= 4")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def hypercube(k: int) -> Graph:
    """Vertices are the integers 0..2^k - 1 read as bit strings."""
    if k < 1:
        raise ConstructionError("hypercube needs k >= 1")
    n = 1 << k
    edges = [(v, v | 1 << i) for v in range(n) for i in range(k) if not v >> i & 1]
    return Graph(n, edges)


def hypercube_minus_vertex(k: int) -> Graph:
    """The k-cube with the all-ones vertex removed (labels stay 0..2^k - 2)."""
    if k < 1:
        raise ConstructionError("hypercube needs k >= 1")
    full = hypercube(k)
    top = full.n - 1
    return Graph(full.n - 1, [e for e in full.edges if top not in e])


def m_n_1(k: int) -> Graph:
    """The k-cube minus the antipodal pair all-zeros / all-ones.

    Remaining binary labels 1..2^k - 2 are shifted down by one to keep the
    vertex range contiguous.
    """
    if k < 2:
        raise ConstructionError("antipodal-pair removal needs k >= 2")
    full = hypercube(k)
    top = full.n - 1
    edges = [
        (u - 1, v - 1) for u, v in full.edges if u != 0 and top not in (u, v)
    ]
    return Graph(full.n - 2, edges)


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise ConstructionError("complete bipartite needs both sides nonempty")
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def k_2_3() -> Graph:
    return complete_bipartite(2, 3)


def grid_graph(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise ConstructionError("grid needs positive side lengths")
    edges = []
    for i in range(a):
        for j in range(b):
            if j + 1 < b:
                edges.append((i * b + j, i * b + j + 1))
            if i + 1 < a:
                edges.append((i * b + j, (i + 1) * b + j))
    return Graph(a * b, edges)


def random_bipartite(n: int, p: float, seed: int, max_tries: int = 200) -> Graph:
    """Seeded random connected bipartite graph; resamples until connected."""
    if n < 1:
        raise ConstructionError("random bipartite needs n >= 1")
    if not 0.0 <= p <= 1.0:
        raise ConstructionError("edge probability must lie in [0, 1]")
    rng = random.Random(seed)
    for _ in range(max_tries):
        a = rng.randint(1, n - 1) if n > 1 else 1
        edges = [
            (i, a + j)
            for i in range(a)
            for j in range(n - a)
            if rng.random() < p
        ]
        g = Graph(n, edges)
        if is_connected(g):
            return g
    raise ConstructionError(
        f"no connected sample within {max_tries} tries (n={n}, p={p}, seed={seed})"
    )


_FAMILY_ALIASES = {
    "p": "path",
    "path": "path",
    "c": "cycle",
    "cycle": "cycle",
    "q": "hypercube",
    "hypercube": "hypercube",
    "q-": "hypercube_minus_vertex",
    "qminus": "hypercube_minus_vertex",
    "q_minus_vertex": "hypercube_minus_vertex",
    "hypercube_minus_vertex": "hypercube_minus_vertex",
    "m": "m_n_1",
    "m_n_1": "m_n_1",
    "k23": "k_2_3",
    "k_2_3": "k_2_3",
    "k": "complete_bipartite",
    "complete_bipartite": "complete_bipartite",
    "grid": "grid",
    "random": "random_bipartite",
    "random_bipartite": "random_bipartite",
}

_FAMILY_BUILDERS = {
    "path": (path_graph, (int,)),
    "cycle": (cycle_graph, (int,)),
    "hypercube": (hypercube, (int,)),
    "hypercube_minus_vertex": (hypercube_minus_vertex, (int,)),
    "m_n_1": (m_n_1, (int,)),
    "k_2_3": (k_2_3, ()),
    "complete_bipartite": (complete_bipartite, (int, int)),
    "grid": (grid_graph, (int, int)),
    "random_bipartite": (random_bipartite, (int, float, int)),
}


def gen(family: str, *params) -> Graph:
    """Build a named family instance; see _FAMILY_BUILDERS for the catalog."""
    key = _FAMILY_ALIASES.get(family.lower())
    if key is None:
        raise ConstructionError(f"unknown family {family!r}")
    builder, sig = _FAMILY_BUILDERS[key]
    if len(params) != len(sig):
        raise ConstructionError(
            f"family {key} takes {len(sig)} parameter(s), got {len(params)}"
        )
    try:
        args = [t(p) for t, p in zip(sig, params)]
    except ValueError:
        raise ConstructionError(f"bad parameters for family {key}: {params}") from None
    return builder(*args)


# -- cartesian product ---------------------------------------------------------


@dataclass(frozen=True)
class Product:
    """Cartesian product with vertex (u, v) encoded as u * n1 + v."""

    graph: Graph
    n0: int
    n1: int

    def encode(self, u: int, v: int) -> int:
        return u * self.n1 + v

    def factor0(self, x: int) -> int:
        return x // self.n1

    def factor1(self, x: int) -> int:
        return x % self.n1


def cartesian_product(g0: Graph, g1: Graph) -> Product:
    """Vertices adjacent when one coordinate is adjacent and the other equal."""
    n1 = g1.n
    edges = []
    for u in range(g0.n):
        for v, w in g1.edges:
            edges.append((u * n1 + v, u * n1 + w))
    for u, w in g0.edges:
        for v in range(n1):
            edges.append((u * n1 + v, w * n1 + v))
    return Product(Graph(g0.n * n1, edges), g0.n, n1)


# -- proper covers and expansion ----------------------------------------------


@dataclass(frozen=True)
class ProperCover:
    v0: VertexSet
    v1: VertexSet


def proper_cover_violation(
    g: Graph, v0: VertexSetLike, v1: VertexSetLike
) -> Optional[dict]:
    """Which proper-cover clause fails, with a witness, or None."""
    m0 = _as_mask(g, v0)
    m1 = _as_mask(g, v1)
    uncovered = g.full_mask() & ~(m0 | m1)
    if uncovered:
        low = uncovered & -uncovered
        return {"clause": "cover", "missing_vertex": low.bit_length() - 1}
    if m0 & m1 == 0:
        return {"clause": "cover", "empty_intersection": True}
    only0 = m0 & ~m1
    only1 = m1 & ~m0
    for u, v in g.edges:
        if (only0 >> u & 1 and only1 >> v & 1) or (
            only1 >> u & 1 and only0 >> v & 1
        ):
            return {"clause": "cross_edge", "edge": [u, v]}
    for side, mask in ((0, m0), (1, m1)):
        sub, verts = induced_subgraph(g, VertexSet(g.n, mask))
        if not is_connected(sub):
            return {"clause": "isometry", "side": side, "disconnected": True}
        for i in range(sub.n):
            for j in range(i + 1, sub.n):
                if sub.d(i, j) != g.d(verts[i], verts[j]):
                    return {
                        "clause": "isometry",
                        "side": side,
                        "pair": [verts[i], verts[j]],
                    }
    return None


def check_proper_cover(g: Graph, v0: VertexSetLike, v1: VertexSetLike) -> bool:
    return proper_cover_violation(g, v0, v1) is None


@dataclass(frozen=True)
class Expansion:
    """Expansion along a proper cover.

    ``psi0``/``psi1`` send a host vertex of the respective cover side to its
    copy; ``pr`` projects copies back.  Copies (x, i) are ordered by 2x + i
    and compacted to a contiguous range.
    """

    graph: Graph
    psi0: dict
    psi1: dict
    pr: dict


def expansion(g: Graph, v0, v1: VertexSetLike | None = None) -> Expansion:
    if isinstance(v0, ProperCover):
        if v1 is not None:
            raise TypeError("pass either a ProperCover or two vertex sets")
        v0, v1 = v0.v0, v0.v1
    bad = proper_cover_violation(g, v0, v1)
    if bad is not None:
        raise ConstructionError(f"not a proper cover: {bad}")
    m0 = _as_mask(g, v0)
    m1 = _as_mask(g, v1)
    keys = sorted(
        [2 * x for x in VertexSet(g.n, m0)] + [2 * x + 1 for x in VertexSet(g.n, m1)]
    )
    index = {k: i for i, k in enumerate(keys)}
    psi0 = {x: index[2 * x] for x in VertexSet(g.n, m0)}
    psi1 = {x: index[2 * x + 1] for x in VertexSet(g.n, m1)}
    edges = []
    for u, v in g.edges:
        if m0 >> u & 1 and m0 >> v & 1:
            edges.append((psi0[u], psi0[v]))
        if m1 >> u & 1 and m1 >> v & 1:
            edges.append((psi1[u], psi1[v]))
    both = m0 & m1
    for x in VertexSet(g.n, both):
        edges.append((psi0[x], psi1[x]))
    pr = {i: k // 2 for k, i in index.items()}
    return Expansion(Graph(len(keys), edges), psi0, psi1, pr)


# -- class contraction ----------------------------------------------------------


@dataclass(frozen=True)
class Contraction:
    """Quotient by one relation class, with the induced proper cover.

    ``pr`` maps each original vertex to its image; ``cover_v0``/``cover_v1``
    are the images of the two half-spaces of the collapsed class, forming
    the proper cover whose expansion recovers the original graph.
    """

    graph: Graph
    pr: tuple
    cover_v0: VertexSet
    cover_v1: VertexSet


def theta_contraction(g: Graph, class_id: int) -> Contraction:
    if not is_partial_cube(g):
        from .theta import djokovic_violation

        raise NotPartialCubeError(
            "contraction collapses a relation class of a partial cube",
            witness=djokovic_violation(g),
        )
    classes = theta_classes(g)
    if not 0 <= class_id < len(classes):
        raise ConstructionError(
            f"class id {class_id} out of range 0..{len(classes) - 1}"
        )
    cls = classes[class_id]
    touched = [v for e in cls for v in e]
    assert len(set(touched)) == len(touched), "class edges must form a matching"
    rep = [-1] * g.n
    for u, v in cls:
        lo, hi = min(u, v), max(u, v)
        rep[lo] = lo
        rep[hi] = lo
    for v in range(g.n):
        if rep[v] == -1:
            rep[v] = v
    kept = sorted(set(rep))
    index = {v: i for i, v in enumerate(kept)}
    pr = tuple(index[rep[v]] for v in range(g.n))
    edges = {
        (min(pr[u], pr[v]), max(pr[u], pr[v]))
        for u, v in g.edges
        if pr[u] != pr[v]
    }
    quotient = Graph(len(kept), sorted(edges))
    a, b = cls[0]
    wab = w_mask(g, a, b)
    v0 = 0
    v1 = 0
    for v in range(g.n):
        if wab >> v & 1:
            v0 |= 1 << pr[v]
        else:
            v1 |= 1 << pr[v]
    return Contraction(
        quotient, pr, VertexSet(quotient.n, v0), VertexSet(quotient.n, v1)
    )


# -- gated amalgam ----------------------------------------------------------------


@dataclass(frozen=True)
class AmalgamSpec:
    """Two graphs and an explicit glue bijection g0-vertex -> g1-vertex."""

    g0: Graph
    g1: Graph
    glue: dict


@dataclass(frozen=True)
class Amalgam:
    """Union of two graphs identified along mutually gated subgraphs."""

    graph: Graph
    embed0: dict
    embed1: dict


def gated_amalgam(spec: AmalgamSpec) -> Amalgam:
    g0, g1, glue = spec.g0, spec.g1, spec.glue
    if not glue:
        raise ConstructionError("glue must identify at least one vertex")
    s0 = sorted(glue)
    s1 = [glue[x] for x in s0]
    if len(set(s1)) != len(s1):
        raise ConstructionError("glue is not injective")
    for x in s0:
        if not 0 <= x < g0.n or not 0 <= glue[x] < g1.n:
            raise ConstructionError("glue maps outside the vertex ranges")
    for i, x in enumerate(s0):
        for y in s0[i + 1 :]:
            if g0.has_edge(x, y) != g1.has_edge(glue[x], glue[y]):
                raise ConstructionError(
                    f"glue is not an isomorphism of induced subgraphs at ({x}, {y})"
                )
    if not is_gated(g0, s0):
        raise ConstructionError("glued set is not gated in the first factor")
    if not is_gated(g1, s1):
        raise ConstructionError("glued set is not gated in the second factor")

    embed0 = {v: v for v in range(g0.n)}
    inverse = {glue[x]: x for x in s0}
    embed1 = {}
    nxt = g0.n
    for v in range(g1.n):
        if v in inverse:
            embed1[v] = inverse[v]
        else:
            embed1[v] = nxt
            nxt += 1
    edges = set(g0.edges)
    for u, v in g1.edges:
        a, b = embed1[u], embed1[v]
        edges.add((min(a, b), max(a, b)))
    graph = Graph(nxt, sorted(edges))
    copy0 = [embed0[v] for v in range(g0.n)]
    copy1 = [embed1[v] for v in range(g1.n)]
    assert is_gated(graph, copy0) and is_gated(
        graph, copy1
    ), "amalgam factors must stay gated in the union"
    return Amalgam(graph, embed0, embed1)
