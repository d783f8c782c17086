"""The edge relation behind partial cubes.

Oriented relation testing, relation classes, W/U half-space data, three
independent partial-cube recognizers (half-space convexity, transitivity,
isometric binary labeling), and geodesic certification by class counts.

Orientation convention: on bipartite graphs, directed edges (x, y) and
(u, v) are related when d(x,u) = d(y,v) = d(x,v) - 1 = d(y,u) - 1, so the
notation of an edge fixes an orientation and (x, y) is never related to
(y, x).  The unoriented relation (the four-distance inequality) is used on
non-bipartite input and for class building.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import NamedTuple, Optional

from .errors import DisconnectedGraphError, NotPartialCubeError
from .graphs import Graph, VertexSet, is_connected, two_coloring


class DirectedEdge(NamedTuple):
    tail: int
    head: int


def _require_edge(g: Graph, a: int, b: int) -> None:
    if not (0 <= a < g.n and 0 <= b < g.n and g.has_edge(a, b)):
        raise ValueError(f"({a}, {b}) is not an edge")


# -- W and U sets -----------------------------------------------------------


def w_mask(g: Graph, a: int, b: int) -> int:
    dist = g.dist_flat
    n = g.n
    out = 0
    for x in range(n):
        if dist[a * n + x] < dist[b * n + x]:
            out |= 1 << x
    return out


def w_set(g: Graph, a: int, b: int) -> VertexSet:
    """Vertices strictly closer to a than to b, for an edge ab."""
    _require_edge(g, a, b)
    return VertexSet(g.n, w_mask(g, a, b))


def u_mask(g: Graph, a: int, b: int) -> int:
    wab = w_mask(g, a, b)
    wba = w_mask(g, b, a)
    masks = g.neighbor_masks
    out = 0
    for x in range(g.n):
        if wab >> x & 1 and masks[x] & wba:
            out |= 1 << x
    return out


def u_set(g: Graph, a: int, b: int) -> VertexSet:
    """Members of W_ab with a neighbor on the W_ba side."""
    _require_edge(g, a, b)
    return VertexSet(g.n, u_mask(g, a, b))


@dataclass(frozen=True)
class HalfSpaceData:
    """The four sets attached to an oriented edge ab."""

    w_ab: VertexSet
    w_ba: VertexSet
    u_ab: VertexSet
    u_ba: VertexSet


def half_space_data(g: Graph, a: int, b: int) -> HalfSpaceData:
    _require_edge(g, a, b)
    return HalfSpaceData(
        VertexSet(g.n, w_mask(g, a, b)),
        VertexSet(g.n, w_mask(g, b, a)),
        VertexSet(g.n, u_mask(g, a, b)),
        VertexSet(g.n, u_mask(g, b, a)),
    )


# -- the relation -----------------------------------------------------------


def _related_unoriented(dist, n: int, e, f) -> bool:
    x, y = e
    u, v = f
    return dist[x * n + u] + dist[y * n + v] != dist[x * n + v] + dist[y * n + u]


def theta_related(g: Graph, e1, e2) -> bool:
    """Relation test for two directed edges.

    Bipartite graphs use the oriented four-distance equality; anything else
    falls back to the unoriented inequality.
    """
    x, y = e1
    u, v = e2
    _require_edge(g, x, y)
    _require_edge(g, u, v)
    dist = g.dist_flat
    n = g.n
    if two_coloring(g) is None:
        return _related_unoriented(dist, n, (x, y), (u, v))
    return (
        dist[x * n + u] == dist[y * n + v]
        and dist[x * n + u] == dist[x * n + v] - 1
        and dist[x * n + u] == dist[y * n + u] - 1
    )


def _edge_classes(g: Graph):
    """(classes of edge indices, transitive flag, violation triple or None)."""

    def build():
        if not is_connected(g):
            raise DisconnectedGraphError("relation classes need a connected graph")
        edges = g.edges
        m = len(edges)
        dist = g.dist_flat
        n = g.n
        related = [[False] * m for _ in range(m)]
        parent = list(range(m))

        def find(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for i in range(m):
            related[i][i] = True
            for j in range(i + 1, m):
                if _related_unoriented(dist, n, edges[i], edges[j]):
                    related[i][j] = related[j][i] = True
                    ri, rj = find(i), find(j)
                    if ri != rj:
                        parent[rj] = ri
        groups: dict = {}
        for i in range(m):
            groups.setdefault(find(i), []).append(i)
        classes = sorted(groups.values())

        witness = None
        for cls in classes:
            for i in cls:
                for j in cls:
                    if not related[i][j]:
                        witness = _violation_chain(related, cls, i, j)
                        break
                if witness:
                    break
            if witness:
                break
        return classes, witness is None, witness

    return g._memo("theta_edge_classes", build)


def _violation_chain(related, cls, i, j):
    """Walk a relation path from i to j and extract a transitivity triple."""
    prev = {i: None}
    dq = deque([i])
    while dq:
        cur = dq.popleft()
        if cur == j:
            break
        for k in cls:
            if related[cur][k] and k not in prev:
                prev[k] = cur
                dq.append(k)
    path = [j]
    while prev[path[-1]] is not None:
        path.append(prev[path[-1]])
    path.reverse()  # i ... j along related steps
    for t in range(1, len(path)):
        if not related[i][path[t]]:
            return (i, path[t - 1], path[t])
    raise AssertionError("unrelated pair with no violating step")


def theta_classes(g: Graph) -> list:
    """Partition of the edges into relation classes; needs transitivity."""
    classes, transitive, witness = _edge_classes(g)
    if not transitive:
        e = g.edges
        raise NotPartialCubeError(
            "relation is not transitive",
            witness={"reason": "intransitive", "edges": [e[i] for i in witness]},
        )
    return [[g.edges[i] for i in cls] for cls in classes]


def class_representatives(g: Graph) -> list:
    """Lexicographically least directed edge of each class."""
    return [cls[0] for cls in theta_classes(g)]


@dataclass(frozen=True)
class ThetaStructure:
    """Materialized oriented relation on directed edges.

    ``classes`` partitions the directed edges (two oriented classes per
    unoriented one) and is None when the relation is not transitive.
    """

    relation: frozenset
    classes: Optional[tuple]
    transitive: bool


def theta_structure(g: Graph) -> ThetaStructure:
    if two_coloring(g) is None:
        raise ValueError("the oriented relation is defined for bipartite graphs")
    classes, transitive, _ = _edge_classes(g)
    dist = g.dist_flat
    n = g.n
    if transitive:
        oriented = []
        for cls in classes:
            a, b = g.edges[cls[0]]
            aligned = []
            flipped = []
            for i in cls:
                u, v = g.edges[i]
                if dist[u * n + a] < dist[u * n + b]:
                    aligned.append(DirectedEdge(u, v))
                    flipped.append(DirectedEdge(v, u))
                else:
                    aligned.append(DirectedEdge(v, u))
                    flipped.append(DirectedEdge(u, v))
            oriented.append(tuple(sorted(aligned)))
            oriented.append(tuple(sorted(flipped)))
        relation = frozenset(
            (e, f) for cls in oriented for e in cls for f in cls
        )
        return ThetaStructure(relation, tuple(oriented), True)
    directed = [DirectedEdge(u, v) for u, v in g.edges] + [
        DirectedEdge(v, u) for u, v in g.edges
    ]
    relation = frozenset(
        (e, f) for e in directed for f in directed if theta_related(g, e, f)
    )
    return ThetaStructure(relation, None, False)


# -- recognizers ------------------------------------------------------------


def djokovic_violation(g: Graph) -> Optional[dict]:
    """Witness that some half-space W is not convex, or a structural reason."""
    if not is_connected(g):
        return {"reason": "not_connected"}
    if two_coloring(g) is None:
        return {"reason": "not_bipartite"}
    from .convexity import convexity_violation

    for a, b in g.edges:
        for side in ((a, b), (b, a)):
            w = VertexSet(g.n, w_mask(g, *side))
            bad = convexity_violation(g, w)
            if bad is not None:
                return {
                    "reason": "nonconvex_halfspace",
                    "edge": [a, b],
                    "side": list(side),
                    "triple": list(bad),
                }
    return None


def is_partial_cube_djokovic(g: Graph) -> bool:
    return djokovic_violation(g) is None


def winkler_violation(g: Graph) -> Optional[dict]:
    """Witness that the relation is intransitive, or a structural reason."""
    if not is_connected(g):
        return {"reason": "not_connected"}
    if two_coloring(g) is None:
        return {"reason": "not_bipartite"}
    _, transitive, witness = _edge_classes(g)
    if transitive:
        return None
    return {"reason": "intransitive", "edges": [list(g.edges[i]) for i in witness]}


def is_partial_cube_winkler(g: Graph) -> bool:
    return winkler_violation(g) is None


def is_partial_cube(g: Graph) -> bool:
    """Cached recognizer used to gate the fast paths."""
    return g._memo("is_partial_cube", lambda: is_partial_cube_djokovic(g))


# -- hypercube labeling ------------------------------------------------------


@dataclass(frozen=True)
class CubeEmbedding:
    """Isometric binary labeling; bit i of a label is position i of the string.

    Bit i of vertex v is set when v lies on the far side of the class-i
    representative edge (a, b), i.e. strictly closer to b than to a.
    """

    n: int
    labels: tuple
    class_order: tuple

    @property
    def dimension(self) -> int:
        return len(self.class_order)

    def hamming(self, u: int, v: int) -> int:
        return (self.labels[u] ^ self.labels[v]).bit_count()

    def label_string(self, v: int) -> str:
        return "".join(
            "1" if self.labels[v] >> i & 1 else "0" for i in range(self.dimension)
        )

    def serialize(self) -> str:
        header = "# classes: " + " ".join(f"{a}-{b}" for a, b in self.class_order)
        lines = [header]
        lines.extend(f"{v} {self.label_string(v)}" for v in range(self.n))
        return "\n".join(lines) + "\n"


def cube_embedding(g: Graph) -> CubeEmbedding:
    """Label every vertex by its side in each relation class; verifies isometry."""
    witness = winkler_violation(g)
    if witness is not None:
        raise NotPartialCubeError("graph is not a partial cube", witness=witness)
    reps = class_representatives(g)
    dist = g.dist_flat
    n = g.n
    labels = []
    for v in range(n):
        bits = 0
        for i, (a, b) in enumerate(reps):
            if dist[v * n + b] < dist[v * n + a]:
                bits |= 1 << i
        labels.append(bits)
    emb = CubeEmbedding(n, tuple(labels), tuple(DirectedEdge(a, b) for a, b in reps))
    for u in range(n):
        for v in range(u + 1, n):
            if emb.hamming(u, v) != dist[u * n + v]:
                raise AssertionError(
                    f"labeling is not isometric at pair ({u}, {v})"
                )
    return emb


# -- geodesic certification ---------------------------------------------------


def geodesic_check(g: Graph, path) -> bool:
    """Certify a path as a geodesic: no two of its edges share a class."""
    verts = list(path)
    if not verts:
        raise ValueError("empty vertex sequence is not a path")
    if len(set(verts)) != len(verts):
        raise ValueError("vertex sequence repeats a vertex, not a path")
    for x, y in zip(verts, verts[1:]):
        if not g.has_edge(x, y):
            raise ValueError(f"({x}, {y}) is not an edge, not a path")
    if not is_partial_cube(g):
        raise NotPartialCubeError(
            "geodesic certification by classes needs a partial cube",
            witness=djokovic_violation(g),
        )
    dist = g.dist_flat
    n = g.n
    edges = list(zip(verts, verts[1:]))
    for i, e in enumerate(edges):
        for f in edges[i + 1 :]:
            if _related_unoriented(dist, n, e, f):
                return False
    return True
