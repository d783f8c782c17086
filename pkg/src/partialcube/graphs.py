"""Simple undirected graphs on dense integer vertices.

Vertices are 0..n-1; all set-valued machinery downstream works on bitmask
vertex sets sized to n.  Graphs are immutable after construction and cache
their BFS metric and interval table.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Optional

from . import _kernels
from .errors import BoundExceededError, DisconnectedGraphError, GraphFormatError

UNREACHABLE = -1


class VertexSet:
    """Subset of the vertices 0..n-1 of a fixed host universe (bitset)."""

    __slots__ = ("n", "mask")

    def __init__(self, n: int, mask: int = 0):
        if mask < 0 or mask >> n:
            raise ValueError(f"mask has bits outside the host universe 0..{n - 1}")
        self.n = n
        self.mask = mask

    @classmethod
    def of(cls, n: int, members: Iterable[int]) -> "VertexSet":
        mask = 0
        for v in members:
            if not 0 <= v < n:
                raise ValueError(f"vertex {v} outside host universe 0..{n - 1}")
            mask |= 1 << v
        return cls(n, mask)

    def _check_host(self, other: "VertexSet") -> None:
        if self.n != other.n:
            raise ValueError("vertex sets have different host universes")

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self.n and self.mask >> v & 1 == 1

    def __iter__(self) -> Iterator[int]:
        m = self.mask
        while m:
            low = m & -m
            yield low.bit_length() - 1
            m ^= low

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __bool__(self) -> bool:
        return self.mask != 0

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, VertexSet)
            and self.n == other.n
            and self.mask == other.mask
        )

    def __hash__(self) -> int:
        return hash((self.n, self.mask))

    def __or__(self, other: "VertexSet") -> "VertexSet":
        self._check_host(other)
        return VertexSet(self.n, self.mask | other.mask)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        self._check_host(other)
        return VertexSet(self.n, self.mask & other.mask)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        self._check_host(other)
        return VertexSet(self.n, self.mask & ~other.mask)

    def __le__(self, other: "VertexSet") -> bool:
        self._check_host(other)
        return self.mask & ~other.mask == 0

    def __lt__(self, other: "VertexSet") -> bool:
        return self <= other and self.mask != other.mask

    def to_set(self) -> frozenset:
        return frozenset(self)

    def __repr__(self) -> str:
        return f"VertexSet(n={self.n}, {{{', '.join(map(str, self))}}})"


class DistanceMatrix:
    """Symmetric matrix of BFS hop counts, indexed as dm[x, y]."""

    __slots__ = ("n", "_d")

    def __init__(self, n: int, flat):
        self.n = n
        self._d = tuple(flat)

    def __getitem__(self, pair) -> int:
        x, y = pair
        return self._d[x * self.n + y]

    def as_flat(self) -> tuple:
        return self._d

    def eccentricity(self, x: int) -> int:
        return max(self._d[x * self.n : (x + 1) * self.n])

    def diameter(self) -> int:
        return max(self._d)


class Graph:
    """Simple undirected graph; no loops, no duplicate edges.

    ``edges`` is a lexicographically sorted tuple of (u, v) pairs with
    u < v.  Instances are immutable; derived data (metric, interval table,
    relation classes) is cached lazily in ``_cache``.
    """

    __slots__ = ("n", "edges", "adjacency", "_cache")

    def __init__(self, n: int, edges: Iterable[tuple] = ()):
        if n < 1:
            raise ValueError("graph needs at least one vertex")
        norm = []
        seen = set()
        for e in edges:
            u, v = e
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {e} has a vertex outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if u > v:
                u, v = v, u
            if (u, v) in seen:
                raise ValueError(f"duplicate edge ({u}, {v})")
            seen.add((u, v))
            norm.append((u, v))
        norm.sort()
        adj: list = [[] for _ in range(n)]
        for u, v in norm:
            adj[u].append(v)
            adj[v].append(u)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(norm))
        object.__setattr__(self, "adjacency", tuple(tuple(sorted(a)) for a in adj))
        object.__setattr__(self, "_cache", {})

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph) and self.n == other.n and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={len(self.edges)})"

    def _memo(self, key, fn):
        cache = self._cache
        if key not in cache:
            cache[key] = fn()
        return cache[key]

    # -- basic accessors -------------------------------------------------

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    @property
    def neighbor_masks(self) -> tuple:
        def build():
            masks = [0] * self.n
            for u, v in self.edges:
                masks[u] |= 1 << v
                masks[v] |= 1 << u
            return tuple(masks)

        return self._memo("neighbor_masks", build)

    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def vertex_set(self, members: Iterable[int]) -> VertexSet:
        return VertexSet.of(self.n, members)

    def full_vertex_set(self) -> VertexSet:
        return VertexSet(self.n, self.full_mask())

    # -- metric ----------------------------------------------------------

    @property
    def dist_flat(self) -> tuple:
        """Flat all-pairs distance table; raises on disconnected input."""

        def build():
            d = _kernels.bfs_all_pairs(self.n, self.neighbor_masks)
            if UNREACHABLE in d:
                raise DisconnectedGraphError(
                    "distance matrix requires a connected graph"
                )
            return tuple(d)

        return self._memo("dist", build)

    def d(self, x: int, y: int) -> int:
        return self.dist_flat[x * self.n + y]

    @property
    def interval_table(self):
        """Flat table of interval bitmasks, indexed x * n + y."""
        return self._memo(
            "itable", lambda: _kernels.interval_table(self.n, self.dist_flat)
        )


# -- parsing and serialization ------------------------------------------


def parse_graph(text: str) -> Graph:
    """Parse the plain edge-list format: header "n m", then m lines "u v".

    Lines starting with '#' and blank lines are ignored.  Raises
    GraphFormatError with the offending line number on malformed input,
    out-of-range vertices, loops, or duplicate edges.
    """
    n = m = None
    edges = []
    seen = set()
    last_line = 0
    for lineno, raw in enumerate(text.splitlines(), 1):
        last_line = lineno
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2:
                raise GraphFormatError("header must be 'n m'", lineno)
            try:
                n, m = int(parts[0]), int(parts[1])
            except ValueError:
                raise GraphFormatError("header must be two integers", lineno) from None
            if n < 1 or m < 0:
                raise GraphFormatError("header needs n >= 1 and m >= 0", lineno)
            continue
        if len(edges) == m:
            raise GraphFormatError(f"more edge lines than the declared m={m}", lineno)
        if len(parts) != 2:
            raise GraphFormatError("edge line must be 'u v'", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError("edge line must be two integers", lineno) from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"vertex out of range 0..{n - 1}", lineno)
        if u == v:
            raise GraphFormatError(f"loop at vertex {u}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphFormatError(f"duplicate edge {key}", lineno)
        seen.add(key)
        edges.append(key)
    if n is None:
        raise GraphFormatError("empty input: missing 'n m' header")
    if len(edges) != m:
        raise GraphFormatError(
            f"declared m={m} but found {len(edges)} edge lines", last_line
        )
    return Graph(n, edges)


def serialize_graph(g: Graph) -> str:
    lines = [f"{g.n} {len(g.edges)}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


# -- structural predicates ------------------------------------------------


def distances(g: Graph) -> DistanceMatrix:
    return DistanceMatrix(g.n, g.dist_flat)


def is_connected(g: Graph) -> bool:
    def build():
        masks = g.neighbor_masks
        visited = 1
        frontier = 1
        while frontier:
            reach = 0
            f = frontier
            while f:
                x = (f & -f).bit_length() - 1
                reach |= masks[x]
                f &= f - 1
            frontier = reach & ~visited
            visited |= frontier
        return visited.bit_count() == g.n

    return g._memo("connected", build)


def two_coloring(g: Graph) -> Optional[tuple]:
    """A proper 2-coloring (tuple of 0/1 per vertex), or None if impossible."""

    def build():
        color = [-1] * g.n
        for s in range(g.n):
            if color[s] != -1:
                continue
            color[s] = 0
            stack = [s]
            while stack:
                x = stack.pop()
                for y in g.adjacency[x]:
                    if color[y] == -1:
                        color[y] = 1 - color[x]
                        stack.append(y)
                    elif color[y] == color[x]:
                        return None
        return tuple(color)

    return g._memo("two_coloring", build)


def is_bipartite(g: Graph) -> bool:
    return two_coloring(g) is not None


def is_tree(g: Graph) -> bool:
    return is_connected(g) and len(g.edges) == g.n - 1


def induced_subgraph(g: Graph, members: Iterable[int]) -> tuple:
    """Induced subgraph on ``members``; returns (subgraph, new_to_old)."""
    if isinstance(members, VertexSet):
        verts = sorted(members)
    else:
        verts = sorted(set(members))
    index = {v: i for i, v in enumerate(verts)}
    edges = [
        (index[u], index[v]) for u, v in g.edges if u in index and v in index
    ]
    return Graph(len(verts), edges), tuple(verts)


# -- small-graph isomorphism ----------------------------------------------


def _refined_labels(g: Graph) -> tuple:
    # iterated neighborhood refinement; enough to prune n <= 12 search
    labels = [g.degree(v) for v in range(g.n)]
    for _ in range(3):
        sigs = [
            (labels[v], tuple(sorted(labels[u] for u in g.adjacency[v])))
            for v in range(g.n)
        ]
        canon = {s: i for i, s in enumerate(sorted(set(sigs)))}
        labels = [canon[s] for s in sigs]
    return tuple(labels)


def are_isomorphic_small(g: Graph, h: Graph, bound: int = 12) -> Optional[dict]:
    """Adjacency-preserving bijection g -> h, or None.

    Backtracking over a degree-refined vertex partition; refuses graphs
    larger than ``bound`` vertices.
    """
    if g.n > bound or h.n > bound:
        raise BoundExceededError(
            f"isomorphism search limited to {bound} vertices, got {max(g.n, h.n)}"
        )
    if g.n != h.n or len(g.edges) != len(h.edges):
        return None
    gl = _refined_labels(g)
    hl = _refined_labels(h)
    if sorted(gl) != sorted(hl):
        return None

    # place rare labels first, then vertices adjacent to already placed ones
    counts: dict = {}
    for lab in gl:
        counts[lab] = counts.get(lab, 0) + 1
    order: list = []
    placed = set()
    remaining = set(range(g.n))
    while remaining:
        nxt = min(
            remaining,
            key=lambda v: (
                -sum(1 for u in g.adjacency[v] if u in placed),
                counts[gl[v]],
                v,
            ),
        )
        order.append(nxt)
        placed.add(nxt)
        remaining.discard(nxt)

    mapping = [-1] * g.n
    used = [False] * h.n

    def backtrack(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for u in range(h.n):
            if used[u] or hl[u] != gl[v]:
                continue
            ok = True
            for w in g.adjacency[v]:
                mw = mapping[w]
                if mw != -1 and not h.has_edge(u, mw):
                    ok = False
                    break
            if ok:
                # non-edges must map to non-edges too
                for w in range(g.n):
                    mw = mapping[w]
                    if mw != -1 and not g.has_edge(v, w) and h.has_edge(u, mw):
                        ok = False
                        break
            if not ok:
                continue
            mapping[v] = u
            used[u] = True
            if backtrack(i + 1):
                return True
            mapping[v] = -1
            used[u] = False
        return False

    if backtrack(0):
        return {v: mapping[v] for v in range(g.n)}
    return None
