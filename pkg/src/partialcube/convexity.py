"""Geodesic convexity engine.

Intervals, the pre-hull operator and its fixpoint (the convex hull),
convexity tests, copoints with their attaching points, ph-stability, the
pre-hull number, and gated sets.  All operations are pure functions of an
immutable Graph; vertex sets travel as VertexSet (bitsets).

Copoint enumeration has two routes: an exhaustive oracle (hulls of all 2^n
subsets, maximality by inclusion) for arbitrary graphs up to a size bound,
and a fast route for partial cubes, whose copoints are exactly their
half-spaces.  A half-space K is a copoint precisely at the vertices of
Att(K), so the fast route filters half-spaces by their attaching sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Union

from . import _kernels
from .errors import BoundExceededError, DisconnectedGraphError
from .graphs import Graph, VertexSet, is_connected, two_coloring

DEFAULT_ORACLE_BOUND = 16

VertexSetLike = Union[VertexSet, Iterable[int], int]


def _as_mask(g: Graph, a: VertexSetLike) -> int:
    if isinstance(a, VertexSet):
        if a.n != g.n:
            raise ValueError("vertex set belongs to a different host graph")
        return a.mask
    if isinstance(a, int):
        raise TypeError("pass a VertexSet or an iterable of vertices, not a bare int")
    return VertexSet.of(g.n, a).mask


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _hull(g: Graph, mask: int):
    return _kernels.hull_mask(g.n, g.interval_table, mask)


# -- intervals and hulls ---------------------------------------------------


def interval(g: Graph, x: int, y: int) -> VertexSet:
    """Vertices on some shortest (x, y)-path: {z : d(x,z) + d(z,y) = d(x,y)}."""
    return VertexSet(g.n, g.interval_table[x * g.n + y])


def pre_hull(g: Graph, a: VertexSetLike) -> VertexSet:
    """Union of the pairwise intervals over the members of ``a``."""
    mask = _as_mask(g, a)
    return VertexSet(g.n, _kernels.pre_hull_mask(g.n, g.interval_table, mask))


@dataclass(frozen=True)
class HullTrace:
    """The strictly increasing pre-hull iterates of a set, up to the fixpoint."""

    stages: tuple

    @property
    def hull(self) -> VertexSet:
        return self.stages[-1]

    @property
    def depth(self) -> int:
        """Least k whose k-th iterate is already convex."""
        return len(self.stages) - 1


def convex_hull(g: Graph, a: VertexSetLike) -> HullTrace:
    """Iterate the pre-hull operator to its fixpoint, keeping every stage."""
    mask = _as_mask(g, a)
    stages = [VertexSet(g.n, mask)]
    cur = mask
    while True:
        nxt = _kernels.pre_hull_mask(g.n, g.interval_table, cur)
        if nxt == cur:
            return HullTrace(tuple(stages))
        stages.append(VertexSet(g.n, nxt))
        cur = nxt


def convexity_violation(g: Graph, a: VertexSetLike) -> Optional[tuple]:
    """A triple (x, y, z) with x, y in the set and z in I(x, y) outside it."""
    mask = _as_mask(g, a)
    it = g.interval_table
    n = g.n
    members = list(_bits(mask))
    for i, x in enumerate(members):
        row = x * n
        for y in members[i + 1 :]:
            escaped = it[row + y] & ~mask
            if escaped:
                z = (escaped & -escaped).bit_length() - 1
                return (x, y, z)
    return None


def is_convex(g: Graph, a: VertexSetLike) -> bool:
    return convexity_violation(g, a) is None


# -- the exhaustive oracle -------------------------------------------------


def _convex_family(g: Graph, bound: int) -> list:
    """All convex sets as masks, via hulls of every subset (sorted)."""
    if g.n > bound:
        raise BoundExceededError(
            f"convex-set oracle limited to {bound} vertices, got {g.n}"
        )
    return g._memo(
        "convex_family", lambda: _kernels.hull_family(g.n, g.interval_table)
    )


def enumerate_convex_sets(
    g: Graph, bound: int = DEFAULT_ORACLE_BOUND
) -> list:
    """Every convex vertex set of ``g``, in increasing mask order."""
    return [VertexSet(g.n, m) for m in _convex_family(g, bound)]


# -- copoints and attaching points ----------------------------------------


@dataclass(frozen=True)
class Copoint:
    """A maximal convex set K avoiding the vertex ``at``.

    ``att`` is the full attaching set co(K + at) - K and ``hull_depth`` the
    number of pre-hull iterations needed to close K + {at}.
    """

    at: int
    k: VertexSet
    att: VertexSet
    hull_depth: int


def _copoint_masks_at_oracle(g: Graph, x: int, bound: int) -> list:
    fam = _convex_family(g, bound)
    cands = [c for c in fam if not c >> x & 1]
    maximal = []
    for c in cands:
        if not any(d != c and c & d == c for d in cands):
            maximal.append(c)
    return maximal


def _halfspace_copoints(g: Graph) -> list:
    """(half-space mask, attaching mask) per oriented class of a partial cube."""

    def build():
        from .theta import class_representatives, w_mask

        out = []
        for a, b in class_representatives(g):
            for k_mask, entry in ((w_mask(g, a, b), b), (w_mask(g, b, a), a)):
                closed, _ = _hull(g, k_mask | 1 << entry)
                out.append((k_mask, closed & ~k_mask))
        return out

    return g._memo("halfspace_copoints", build)


def _is_partial_cube(g: Graph) -> bool:
    from .theta import is_partial_cube

    return is_partial_cube(g)


def _copoint_pairs(g: Graph, bound: int):
    """Yield (k_mask, att_mask) over the distinct copoints of ``g``."""
    if g.n > 1 and _is_partial_cube(g):
        yield from _halfspace_copoints(g)
        return
    if g.n > bound:
        raise BoundExceededError(
            f"copoint oracle limited to {bound} vertices and no fast path applies"
        )
    seen = {}
    for x in range(g.n):
        for k_mask in _copoint_masks_at_oracle(g, x, bound):
            if k_mask not in seen:
                closed, _ = _hull(g, k_mask | 1 << x)
                seen[k_mask] = closed & ~k_mask
    yield from sorted(seen.items())


def copoints_at(g: Graph, x: int, bound: int = DEFAULT_ORACLE_BOUND) -> list:
    """The copoints at vertex x, i.e. maximal convex sets excluding x."""
    out = []
    for k_mask, att_mask in _copoint_pairs(g, bound):
        if att_mask >> x & 1:
            _, depth = _hull(g, k_mask | 1 << x)
            out.append(
                Copoint(x, VertexSet(g.n, k_mask), VertexSet(g.n, att_mask), depth)
            )
    return out


def copoints(g: Graph, bound: int = DEFAULT_ORACLE_BOUND) -> list:
    """One Copoint record per distinct copoint of ``g``.

    ``at`` is the least attaching point; ``hull_depth`` is the depth for
    that particular attaching point (depths may differ across Att(K)).
    """
    out = []
    for k_mask, att_mask in _copoint_pairs(g, bound):
        x = (att_mask & -att_mask).bit_length() - 1
        _, depth = _hull(g, k_mask | 1 << x)
        out.append(
            Copoint(x, VertexSet(g.n, k_mask), VertexSet(g.n, att_mask), depth)
        )
    return out


def attaching_points(g: Graph, k: VertexSetLike, x: int) -> VertexSet:
    """co(K + {x}) - K for a copoint K at x.

    Validates the precondition: K convex, x outside K, and K maximal among
    convex sets avoiding x (every proper convex superset captures x).
    """
    k_mask = _as_mask(g, k)
    if k_mask >> x & 1:
        raise ValueError(f"vertex {x} lies inside the claimed copoint")
    bad = convexity_violation(g, VertexSet(g.n, k_mask))
    if bad is not None:
        raise ValueError(f"set is not convex, witness triple {bad}")
    for v in range(g.n):
        if v == x or k_mask >> v & 1:
            continue
        closed, _ = _hull(g, k_mask | 1 << v)
        if not closed >> x & 1:
            raise ValueError(
                f"set is not maximal at {x}: adding vertex {v} keeps {x} outside"
            )
    closed, _ = _hull(g, k_mask | 1 << x)
    return VertexSet(g.n, closed & ~k_mask)


def att_convexity_violation(
    g: Graph, bound: int = DEFAULT_ORACLE_BOUND
) -> Optional[Copoint]:
    """A copoint whose attaching set is not convex, or None."""
    if not is_connected(g):
        raise DisconnectedGraphError("attaching-point analysis needs a connected graph")
    if two_coloring(g) is None:
        raise ValueError("attaching-point analysis is defined for bipartite graphs")
    for k_mask, att_mask in _copoint_pairs(g, bound):
        if convexity_violation(g, VertexSet(g.n, att_mask)) is not None:
            x = (att_mask & -att_mask).bit_length() - 1
            _, depth = _hull(g, k_mask | 1 << x)
            return Copoint(x, VertexSet(g.n, k_mask), VertexSet(g.n, att_mask), depth)
    return None


def is_att_convex(g: Graph, bound: int = DEFAULT_ORACLE_BOUND) -> bool:
    """True when every copoint has a convex attaching set."""
    return att_convexity_violation(g, bound) is None


# -- ph-stability and the pre-hull number ----------------------------------


def ph_stability_violation(g: Graph, a: VertexSetLike) -> Optional[tuple]:
    """A pair (u, v) in the pre-hull of A with v on no (u, w)-geodesic, w in A."""
    mask = _as_mask(g, a)
    spread = _kernels.pre_hull_mask(g.n, g.interval_table, mask)
    it = g.interval_table
    n = g.n
    anchors = list(_bits(mask))
    for u in _bits(spread):
        row = u * n
        for v in _bits(spread):
            if not any(it[row + w] >> v & 1 for w in anchors):
                return (u, v)
    return None


def is_ph_stable(g: Graph, a: VertexSetLike) -> bool:
    return ph_stability_violation(g, a) is None


def pre_hull_number(g: Graph, bound: int = DEFAULT_ORACLE_BOUND) -> int:
    """Largest hull-iteration depth over all copoint plus attaching-point pairs."""
    if not is_connected(g):
        raise DisconnectedGraphError("pre-hull number needs a connected graph")
    best = 0
    for k_mask, att_mask in _copoint_pairs(g, bound):
        for x in _bits(att_mask):
            _, depth = _hull(g, k_mask | 1 << x)
            if depth > best:
                best = depth
    return best


def ph_leq1_bipartite(g: Graph, bound: int = DEFAULT_ORACLE_BOUND) -> bool:
    """Decide pre-hull number <= 1 for a connected bipartite graph.

    Partial cubes are decided through ph-stability of the U-sets (one
    representative edge per relation class suffices, since edges in a class
    share their half-spaces); other graphs through the copoint criterion:
    every attaching set convex and N(K) intersected with Att(K) ph-stable.
    """
    if not is_connected(g):
        raise DisconnectedGraphError("ph analysis needs a connected graph")
    if two_coloring(g) is None:
        raise ValueError("ph analysis is defined for bipartite graphs")
    if g.n > 1 and _is_partial_cube(g):
        from .theta import class_representatives, u_set

        for a, b in class_representatives(g):
            if not is_ph_stable(g, u_set(g, a, b)):
                return False
            if not is_ph_stable(g, u_set(g, b, a)):
                return False
        return True
    masks = g.neighbor_masks
    for k_mask, att_mask in _copoint_pairs(g, bound):
        if convexity_violation(g, VertexSet(g.n, att_mask)) is not None:
            return False
        nbhd = 0
        for v in _bits(k_mask):
            nbhd |= masks[v]
        nbhd &= ~k_mask
        if not is_ph_stable(g, VertexSet(g.n, nbhd & att_mask)):
            return False
    return True


# -- gates -----------------------------------------------------------------


def gate(g: Graph, a: VertexSetLike, x: int) -> Optional[int]:
    """The gate of x in A: the member on a geodesic from x to every member."""
    mask = _as_mask(g, a)
    if mask == 0:
        raise ValueError("the empty set has no gates")
    if mask >> x & 1:
        return x
    dist = g.dist_flat
    n = g.n
    members = list(_bits(mask))
    for y in members:
        dxy = dist[x * n + y]
        if all(dist[x * n + z] == dxy + dist[y * n + z] for z in members):
            return y
    return None


def is_gated(g: Graph, a: VertexSetLike) -> bool:
    """True when every vertex of the graph has a gate in A."""
    mask = _as_mask(g, a)
    if mask == 0:
        raise ValueError("the empty set has no gates")
    vs = VertexSet(g.n, mask)
    return all(gate(g, vs, x) is not None for x in range(g.n))
