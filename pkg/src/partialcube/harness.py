"""Verification harness.

Enumerates a corpus of small connected bipartite graphs (exhaustive up to
isomorphism at small orders, named families with golden expectations, and
a seeded random tier), runs every structural check over it, and assembles
serializable reports.  Checks never silently pass: anything outside a
check's reach is recorded with skip status.
"""

from __future__ import annotations

import itertools
import json
import random
import sys
import time
from dataclasses import asdict, dataclass
from io import StringIO
from typing import Iterable, Optional

from . import _kernels, convexity
from .constructions import (
    AmalgamSpec,
    cartesian_product,
    complete_bipartite,
    cycle_graph,
    expansion,
    gated_amalgam,
    grid_graph,
    hypercube,
    hypercube_minus_vertex,
    k_2_3,
    m_n_1,
    path_graph,
    random_bipartite,
    theta_contraction,
)
from .convexity import (
    VertexSet,
    convex_hull,
    convexity_violation,
    enumerate_convex_sets,
    is_att_convex,
    att_convexity_violation,
    is_convex,
    is_gated,
    ph_leq1_bipartite,
    pre_hull_number,
)
from .errors import BoundExceededError, ConstructionError, NotPartialCubeError
from .graphs import (
    Graph,
    are_isomorphic_small,
    induced_subgraph,
    is_bipartite,
    is_connected,
    is_tree,
)
from .theta import (
    cube_embedding,
    djokovic_violation,
    is_partial_cube,
    is_partial_cube_djokovic,
    is_partial_cube_winkler,
    theta_classes,
    u_mask,
    w_mask,
    winkler_violation,
)

DEFAULT_EXHAUSTIVE_N = 6
DEFAULT_RANDOM_TIER = (200, (7, 10), 0xC0FFEE)
ORACLE_CUTOFF = 10  # corpus checks that need the subset oracle skip above this
ISO_BOUND = 14  # covers the 4-cube minus an antipodal pair


# -- corpus -------------------------------------------------------------------


@dataclass(frozen=True)
class CorpusEntry:
    graph_id: str
    provenance: str
    graph: Graph
    bipartite: bool


@dataclass
class Corpus:
    entries: list
    meta: dict

    def __iter__(self):
        return iter(self.entries)

    def by_id(self, graph_id: str) -> CorpusEntry:
        for entry in self.entries:
            if entry.graph_id == graph_id:
                return entry
        raise KeyError(graph_id)


def connected_bipartite_graphs(n: int) -> list:
    """All connected bipartite graphs on exactly n vertices, up to isomorphism.

    Enumerates edge subsets of each complete bipartite host K_{a,b} with
    a + b = n; distinct part-size splits cannot collide, so deduplication
    runs within a split only.
    """
    if n == 1:
        return [Graph(1)]
    out = []
    for a in range(1, n // 2 + 1):
        b = n - a
        slots = [(i, a + j) for i in range(a) for j in range(b)]
        buckets: dict = {}
        for picks in range(1 << len(slots)):
            if picks.bit_count() < n - 1:
                continue
            edges = [slots[i] for i in range(len(slots)) if picks >> i & 1]
            g = Graph(n, edges)
            if not is_connected(g):
                continue
            key = tuple(sorted(g.degree(v) for v in range(n)))
            bucket = buckets.setdefault(key, [])
            if not any(are_isomorphic_small(g, h) for h in bucket):
                bucket.append(g)
        for key in sorted(buckets):
            out.extend(buckets[key])
    return out


# family tier: name -> (builder, golden expectations asserted by check_golden_values)
FAMILY_SPECS = [
    ("P_2", lambda: path_graph(2), {"partial_cube": True, "tree": True, "ph": 0}),
    ("P_5", lambda: path_graph(5), {"partial_cube": True, "tree": True, "ph": 0}),
    ("K_1_3", lambda: complete_bipartite(1, 3), {"tree": True, "ph": 0}),
    ("C_6", lambda: cycle_graph(6), {"partial_cube": True, "tree": False, "ph": 1}),
    ("C_8", lambda: cycle_graph(8), {"partial_cube": True, "ph": 1}),
    ("Q_2", lambda: hypercube(2), {"partial_cube": True, "ph": 1}),
    ("Q_3", lambda: hypercube(3), {"partial_cube": True, "ph": 1}),
    (
        "Q_3_minus",
        lambda: hypercube_minus_vertex(3),
        {"partial_cube": True, "att_convex": True, "ph": 2},
    ),
    (
        "K_2_3",
        lambda: k_2_3(),
        {"partial_cube": False, "att_convex": False, "tree": False, "ph": 2},
    ),
    ("K_3_3", lambda: complete_bipartite(3, 3), {"partial_cube": False}),
    ("M_4_1", lambda: m_n_1(4), {"partial_cube": True, "ph": 1}),
    ("grid_3_3", lambda: grid_graph(3, 3), {"partial_cube": True, "ph": 1}),
]


def family_entries() -> list:
    out = []
    for name, build, _ in FAMILY_SPECS:
        g = build()
        out.append(CorpusEntry(f"fam-{name}", f"family:{name}", g, is_bipartite(g)))
    return out


def enumerate_corpus(
    max_exhaustive_n: int = DEFAULT_EXHAUSTIVE_N,
    random_tier: tuple = DEFAULT_RANDOM_TIER,
    include_singletons: bool = False,
    include_families: bool = True,
) -> Corpus:
    """Exhaustive tier + family tier + seeded random tier."""
    if max_exhaustive_n > 7:
        raise ValueError("exhaustive enumeration is limited to n <= 7")
    entries = []
    start = 1 if include_singletons else 2
    for n in range(start, max_exhaustive_n + 1):
        for i, g in enumerate(connected_bipartite_graphs(n)):
            entries.append(
                CorpusEntry(f"x{n}-{i}", f"exhaustive:n={n}:index={i}", g, True)
            )
    if include_families:
        entries.extend(family_entries())
    count, (lo, hi), seed = random_tier
    rng = random.Random(seed)
    for i in range(count):
        while True:  # redraw parameters when a sparse draw never connects
            n = rng.randint(lo, hi)
            p = rng.uniform(0.25, 0.75)
            sub_seed = rng.randrange(1 << 30)
            try:
                g = random_bipartite(n, p, sub_seed)
                break
            except ConstructionError:
                continue
        entries.append(
            CorpusEntry(
                f"r{i}",
                f"random:n={n}:p={p:.3f}:seed={sub_seed}",
                g,
                True,
            )
        )
    meta = {
        "max_exhaustive_n": max_exhaustive_n,
        "random_tier": {"count": count, "n_range": [lo, hi], "seed": seed},
        "include_singletons": include_singletons,
        "include_families": include_families,
    }
    return Corpus(entries, meta)


# -- reports ------------------------------------------------------------------


@dataclass
class CheckResult:
    graph_id: str
    provenance: str
    check: str
    status: str  # pass | fail | skip
    witness: Optional[dict]
    millis: float


@dataclass
class VerificationReport:
    meta: dict
    results: list

    def counts(self) -> dict:
        out = {"pass": 0, "fail": 0, "skip": 0}
        for r in self.results:
            out[r.status] += 1
        return out

    def failures(self) -> list:
        return [r for r in self.results if r.status == "fail"]

    def by_check(self) -> dict:
        out: dict = {}
        for r in self.results:
            out.setdefault(r.check, []).append(r)
        return out

    def to_json(self) -> str:
        return json.dumps(
            {"meta": self.meta, "results": [asdict(r) for r in self.results]},
            indent=2,
        )

    @classmethod
    def from_json(cls, text: str) -> "VerificationReport":
        raw = json.loads(text)
        return cls(raw["meta"], [CheckResult(**r) for r in raw["results"]])

    def to_csv(self) -> str:
        import csv

        buf = StringIO()
        writer = csv.writer(buf)
        writer.writerow(
            ["graph_id", "provenance", "check", "status", "witness", "millis"]
        )
        for r in self.results:
            writer.writerow(
                [
                    r.graph_id,
                    r.provenance,
                    r.check,
                    r.status,
                    "" if r.witness is None else json.dumps(r.witness, sort_keys=True),
                    repr(r.millis),
                ]
            )
        return buf.getvalue()


def _json_safe(value):
    if value is None or isinstance(value, (bool, int, float, str)):
        return value
    if isinstance(value, dict):
        return {str(k): _json_safe(v) for k, v in value.items()}
    if isinstance(value, VertexSet):
        return sorted(value)
    if isinstance(value, (list, tuple)):
        return [_json_safe(v) for v in value]
    if isinstance(value, (set, frozenset)):
        return sorted(_json_safe(v) for v in value)
    return str(value)


def _copoint_witness(cp: convexity.Copoint, g: Graph) -> dict:
    return {
        "at": cp.at,
        "k": sorted(cp.k),
        "att": sorted(cp.att),
        "hull_depth": cp.hull_depth,
        "att_triple": _json_safe(convexity_violation(g, cp.att)),
    }


def _run_over_entries(name: str, entries: Iterable[CorpusEntry], fn) -> list:
    """fn(entry) -> (status, witness); bound overruns become skips."""
    results = []
    for entry in entries:
        t0 = time.perf_counter()
        try:
            status, witness = fn(entry)
        except BoundExceededError as exc:
            status, witness = "skip", {"reason": "bound_exceeded", "detail": str(exc)}
        millis = (time.perf_counter() - t0) * 1000.0
        results.append(
            CheckResult(
                entry.graph_id, entry.provenance, name, status, _json_safe(witness), millis
            )
        )
    return results


def _report(meta: dict, results: list) -> VerificationReport:
    results = sorted(results, key=lambda r: (r.graph_id, r.check))
    return VerificationReport(meta, results)


def _base_meta(check: str, **extra) -> dict:
    from . import __version__

    meta = {
        "check": check,
        "versions": {
            "partialcube": __version__,
            "python": sys.version.split()[0],
            "kernel_backend": _kernels.backend_name(),
        },
    }
    meta.update(extra)
    return meta


# -- theorem checks ------------------------------------------------------------


def check_recognizer_agreement(corpus: Corpus) -> VerificationReport:
    """All three recognition routes give the same verdict on every graph."""

    def fn(entry):
        g = entry.graph
        dj = is_partial_cube_djokovic(g)
        wk = is_partial_cube_winkler(g)
        try:
            cube_embedding(g)
            emb = True
        except NotPartialCubeError:
            emb = False
        if dj == wk == emb:
            return "pass", None
        return "fail", {
            "djokovic": dj,
            "winkler": wk,
            "embedding": emb,
            "djokovic_witness": djokovic_violation(g),
            "winkler_witness": winkler_violation(g),
        }

    return _report(
        _base_meta("recognizer_agreement"),
        _run_over_entries("recognizer_agreement", corpus, fn),
    )


def check_att_convex_theorem(corpus: Corpus) -> VerificationReport:
    """Partial cube exactly when every copoint has a convex attaching set."""

    def fn(entry):
        g = entry.graph
        if not entry.bipartite:
            return "skip", {"reason": "not_bipartite"}
        pc = is_partial_cube_winkler(g)
        att = is_att_convex(g, bound=ORACLE_CUTOFF if not pc else 64)
        if pc == att:
            return "pass", None
        witness = {"partial_cube": pc, "att_convex": att}
        bad = att_convexity_violation(g, bound=ORACLE_CUTOFF if not pc else 64)
        if bad is not None:
            witness["copoint"] = _copoint_witness(bad, g)
        else:
            witness["winkler"] = winkler_violation(g)
        return "fail", witness

    return _report(
        _base_meta("att_convex_equivalence"),
        _run_over_entries("att_convex_equivalence", corpus, fn),
    )


def check_ph1_implies_pc(corpus: Corpus) -> VerificationReport:
    """No bipartite graph with pre-hull number <= 1 escapes recognition."""

    def fn(entry):
        g = entry.graph
        if not entry.bipartite:
            return "skip", {"reason": "not_bipartite"}
        ph = pre_hull_number(g, bound=ORACLE_CUTOFF + 4)
        if ph <= 1 and not is_partial_cube(g):
            return "fail", {"ph": ph, "witness": djokovic_violation(g)}
        return "pass", {"ph": ph, "partial_cube": is_partial_cube(g)}

    return _report(
        _base_meta("ph1_implies_partial_cube"),
        _run_over_entries("ph1_implies_partial_cube", corpus, fn),
    )


def check_tree_ph0(corpus: Corpus) -> VerificationReport:
    """Pre-hull number zero exactly for trees."""

    def fn(entry):
        g = entry.graph
        ph = pre_hull_number(g, bound=ORACLE_CUTOFF + 4)
        tree = is_tree(g)
        if (ph == 0) == tree:
            return "pass", {"ph": ph, "tree": tree}
        return "fail", {"ph": ph, "tree": tree}

    return _report(
        _base_meta("tree_ph_zero"), _run_over_entries("tree_ph_zero", corpus, fn)
    )


def check_copoints_halfspaces(corpus: Corpus) -> VerificationReport:
    """Distinct copoints of a partial cube are exactly its W sets.

    Copoints come from the exhaustive oracle here, independently of the
    half-space fast path.
    """

    def fn(entry):
        g = entry.graph
        if g.n < 2 or not is_partial_cube(g):
            return "skip", {"reason": "not_applicable"}
        if g.n > ORACLE_CUTOFF:
            return "skip", {"reason": "oracle_cutoff"}
        oracle_masks = set()
        for x in range(g.n):
            oracle_masks.update(convexity._copoint_masks_at_oracle(g, x, ORACLE_CUTOFF))
        w_masks = set()
        for a, b in g.edges:
            w_masks.add(w_mask(g, a, b))
            w_masks.add(w_mask(g, b, a))
        if oracle_masks == w_masks:
            return "pass", None
        extra = [sorted(VertexSet(g.n, m)) for m in oracle_masks - w_masks]
        missing = [sorted(VertexSet(g.n, m)) for m in w_masks - oracle_masks]
        return "fail", {"copoints_not_w": extra, "w_not_copoints": missing}

    return _report(
        _base_meta("copoints_are_halfspaces"),
        _run_over_entries("copoints_are_halfspaces", corpus, fn),
    )


def _ph_pair_equivalence(name, items, build_graph):
    results = []
    for idx, item in enumerate(items):
        t0 = time.perf_counter()
        g0, g1, combined, label = build_graph(item)
        ph0 = pre_hull_number(g0)
        ph1 = pre_hull_number(g1)
        phc = pre_hull_number(combined)
        ok = (phc <= 1) == (ph0 <= 1 and ph1 <= 1) and is_partial_cube(combined)
        witness = {"label": label, "ph0": ph0, "ph1": ph1, "ph_combined": phc}
        results.append(
            CheckResult(
                f"{name}-{idx}",
                label,
                name,
                "pass" if ok else "fail",
                _json_safe(witness),
                (time.perf_counter() - t0) * 1000.0,
            )
        )
    return results


def check_closure_product(pairs: Iterable[tuple]) -> VerificationReport:
    """ph <= 1 for a product of partial cubes iff it holds for both factors."""

    def build(pair):
        (name0, g0), (name1, g1) = pair
        return g0, g1, cartesian_product(g0, g1).graph, f"{name0} x {name1}"

    return _report(
        _base_meta("closure_cartesian_product"),
        _ph_pair_equivalence("closure_cartesian_product", list(pairs), build),
    )


def check_closure_amalgam(specs: Iterable[tuple]) -> VerificationReport:
    """ph <= 1 for a gated amalgam of partial cubes iff for both factors."""

    def build(item):
        label, spec = item
        return spec.g0, spec.g1, gated_amalgam(spec).graph, label

    return _report(
        _base_meta("closure_gated_amalgam"),
        _ph_pair_equivalence("closure_gated_amalgam", list(specs), build),
    )


def _gated_masks(g: Graph, bound: int) -> list:
    out = []
    for vs in enumerate_convex_sets(g, bound):
        if vs and is_gated(g, vs):
            out.append(vs)
    return out


def check_gated_subgraph(corpus: Corpus) -> VerificationReport:
    """Gated subgraphs of partial cubes with ph <= 1 keep ph <= 1."""

    def fn(entry):
        g = entry.graph
        if not is_partial_cube(g):
            return "skip", {"reason": "not_partial_cube"}
        if pre_hull_number(g) > 1:
            return "skip", {"reason": "premise_ph_above_1"}
        if g.n > ORACLE_CUTOFF:
            return "skip", {"reason": "oracle_cutoff"}
        for vs in _gated_masks(g, ORACLE_CUTOFF):
            sub, verts = induced_subgraph(g, vs)
            ph = pre_hull_number(sub)
            if ph > 1:
                return "fail", {"gated_set": sorted(vs), "ph": ph}
        return "pass", None

    return _report(
        _base_meta("gated_subgraph_ph"),
        _run_over_entries("gated_subgraph_ph", corpus, fn),
    )


def check_convex_subgraph_non_closure() -> VerificationReport:
    """The 4-cube minus an antipodal pair has ph 1 yet contains a convex
    induced copy of the 3-cube minus a vertex, which has ph 2."""
    t0 = time.perf_counter()
    host = m_n_1(4)
    target = hypercube_minus_vertex(3)
    found = None
    for vs in enumerate_convex_sets(host):
        if len(vs) != target.n:
            continue
        sub, verts = induced_subgraph(host, vs)
        if are_isomorphic_small(sub, target) is not None:
            found = (vs, sub)
            break
    status = "fail"
    witness: dict = {}
    if found is not None:
        vs, sub = found
        ph_host = pre_hull_number(host)
        ph_sub = pre_hull_number(sub)
        witness = {
            "subgraph": sorted(vs),
            "ph_host": ph_host,
            "ph_subgraph": ph_sub,
        }
        if ph_host == 1 and ph_sub == 2:
            status = "pass"
    else:
        witness = {"reason": "no_convex_copy_found"}
    result = CheckResult(
        "fam-M_4_1",
        "family:M_4_1",
        "convex_subgraph_non_closure",
        status,
        _json_safe(witness),
        (time.perf_counter() - t0) * 1000.0,
    )
    return _report(_base_meta("convex_subgraph_non_closure"), [result])


def check_expansion_contraction(corpus: Corpus) -> VerificationReport:
    """Contract any class, expand along the induced cover, recover the graph;
    expansions of partial cubes stay partial cubes."""

    def fn(entry):
        g = entry.graph
        if not is_partial_cube(g):
            return "skip", {"reason": "not_partial_cube"}
        if g.n > ISO_BOUND:
            return "skip", {"reason": "isomorphism_bound"}
        for class_id in range(len(theta_classes(g))):
            contraction = theta_contraction(g, class_id)
            if not is_partial_cube(contraction.graph):
                return "fail", {"class_id": class_id, "stage": "contraction_not_pc"}
            rebuilt = expansion(
                contraction.graph, contraction.cover_v0, contraction.cover_v1
            )
            if not is_partial_cube(rebuilt.graph):
                return "fail", {"class_id": class_id, "stage": "expansion_not_pc"}
            if are_isomorphic_small(rebuilt.graph, g, bound=ISO_BOUND) is None:
                return "fail", {"class_id": class_id, "stage": "roundtrip_mismatch"}
        return "pass", {"classes": len(theta_classes(g))}

    return _report(
        _base_meta("expansion_contraction_duality"),
        _run_over_entries("expansion_contraction_duality", corpus, fn),
    )


def check_golden_values(corpus: Corpus) -> VerificationReport:
    """Family-tier graphs reproduce their known structural facts."""
    expectations = {f"fam-{name}": spec for name, _, spec in FAMILY_SPECS}

    def fn(entry):
        spec = expectations.get(entry.graph_id)
        if spec is None:
            return "skip", {"reason": "no_expectations"}
        g = entry.graph
        got = {}
        if "partial_cube" in spec:
            got["partial_cube"] = is_partial_cube_winkler(g)
        if "tree" in spec:
            got["tree"] = is_tree(g)
        if "ph" in spec:
            got["ph"] = pre_hull_number(g)
        if "att_convex" in spec:
            got["att_convex"] = is_att_convex(g)
        mismatches = {k: [spec[k], got[k]] for k in got if got[k] != spec[k]}
        if mismatches:
            return "fail", {"expected_vs_got": mismatches}
        return "pass", got

    return _report(
        _base_meta("golden_values"), _run_over_entries("golden_values", corpus, fn)
    )


# -- sampling for the closure checks -------------------------------------------


def _pc_pool() -> list:
    return [
        ("P_2", path_graph(2)),
        ("P_3", path_graph(3)),
        ("P_4", path_graph(4)),
        ("P_6", path_graph(6)),
        ("K_1_3", complete_bipartite(1, 3)),
        ("C_4", cycle_graph(4)),
        ("C_6", cycle_graph(6)),
        ("C_8", cycle_graph(8)),
        ("Q_2", hypercube(2)),
        ("Q_3", hypercube(3)),
        ("grid_2_3", grid_graph(2, 3)),
        ("Q_3_minus", hypercube_minus_vertex(3)),
    ]


def sample_factor_pairs(count: int, seed: int) -> list:
    """Seeded factor pairs for the product closure check (ph 2 factors included)."""
    rng = random.Random(seed)
    pool = _pc_pool()
    pairs = []
    for _ in range(count):
        pairs.append((rng.choice(pool), rng.choice(pool)))
    return pairs


def sample_amalgam_specs(count: int, seed: int) -> list:
    """Seeded gated-amalgam specs: vertex glues, edge glues, gated self-glues."""
    rng = random.Random(seed)
    pool = _pc_pool()
    specs = []
    while len(specs) < count:
        kind = rng.choice(("vertex", "edge", "gated_self"))
        name0, g0 = rng.choice(pool)
        name1, g1 = rng.choice(pool)
        if kind == "vertex":
            glue = {rng.randrange(g0.n): rng.randrange(g1.n)}
            label = f"{name0}+{name1} on a vertex"
        elif kind == "edge":
            if not g0.edges or not g1.edges:
                continue
            a, b = rng.choice(g0.edges)
            c, d = rng.choice(g1.edges)
            glue = {a: c, b: d}
            label = f"{name0}+{name1} on an edge"
        else:
            g1 = g0
            gated = [vs for vs in _gated_masks(g0, ORACLE_CUTOFF) if len(vs) >= 2]
            if not gated:
                continue
            vs = rng.choice(gated)
            glue = {x: x for x in vs}
            label = f"{name0}+{name0} on a gated set of size {len(vs)}"
        specs.append((label, AmalgamSpec(g0, g1, glue)))
    return specs


# -- property suites -------------------------------------------------------------


def _subsets_upto(n: int, k: int):
    verts = range(n)
    for size in range(k + 1):
        yield from itertools.combinations(verts, size)


def _sampled_masks(rng: random.Random, n: int, count: int, max_size: Optional[int] = None):
    for _ in range(count):
        if max_size is None:
            yield rng.randrange(1 << n)
        else:
            size = rng.randint(0, max_size)
            yield sum(1 << v for v in rng.sample(range(n), size))


def prop_hull_laws(corpus: Corpus, seed: int = 0) -> VerificationReport:
    """Hull idempotence, hull convexity, and monotonicity of the hull map."""
    rng = random.Random(seed)

    def fn(entry):
        g = entry.graph
        n = g.n
        if n <= 6:
            masks_b = range(1 << n)
        else:
            masks_b = list(_sampled_masks(rng, n, 40))
        for mb in masks_b:
            trace = convex_hull(g, VertexSet(n, mb))
            h = trace.hull
            if not is_convex(g, h):
                return "fail", {"law": "hull_convex", "set": sorted(VertexSet(n, mb))}
            if convex_hull(g, h).hull != h:
                return "fail", {"law": "idempotence", "set": sorted(VertexSet(n, mb))}
            # monotonicity over submasks of mb (all for small n, sampled above)
            submasks = (
                _all_submasks(mb) if n <= 6 else [mb & m for m in _sampled_masks(rng, n, 6)]
            )
            for ma in submasks:
                if convex_hull(g, VertexSet(n, ma)).hull.mask & ~h.mask:
                    return "fail", {
                        "law": "monotonicity",
                        "a": sorted(VertexSet(n, ma)),
                        "b": sorted(VertexSet(n, mb)),
                    }
        return "pass", None

    return _report(
        _base_meta("prop_hull_laws", seed=seed),
        _run_over_entries("prop_hull_laws", corpus, fn),
    )


def _all_submasks(mask: int):
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def prop_att_independence(corpus: Corpus, seed: int = 0) -> VerificationReport:
    """co(K + y) is the same closed set for every attaching point y of K."""

    def fn(entry):
        g = entry.graph
        if not entry.bipartite or not is_connected(g):
            return "skip", {"reason": "not_applicable"}
        if not is_partial_cube(g) and g.n > ORACLE_CUTOFF:
            return "skip", {"reason": "oracle_cutoff"}
        for cp in convexity.copoints(g, bound=ORACLE_CUTOFF):
            closed = cp.k.mask | cp.att.mask
            for y in cp.att:
                got, _ = convexity._hull(g, cp.k.mask | 1 << y)
                if got != closed:
                    return "fail", {
                        "copoint": _copoint_witness(cp, g),
                        "attaching_point": y,
                    }
        return "pass", None

    return _report(
        _base_meta("prop_att_independence"),
        _run_over_entries("prop_att_independence", corpus, fn),
    )


def _symmetric_ph_stable(g: Graph, a_mask: int) -> Optional[tuple]:
    """Symmetric form: both vertices ride one geodesic between two anchors."""
    spread = _kernels.pre_hull_mask(g.n, g.interval_table, a_mask)
    dist = g.dist_flat
    n = g.n
    anchors = [v for v in range(n) if a_mask >> v & 1]
    spread_list = [v for v in range(n) if spread >> v & 1]
    for u in spread_list:
        for v in spread_list:
            ok = False
            for w1 in anchors:
                for w2 in anchors:
                    d = dist[w1 * n + w2]
                    if (
                        dist[w1 * n + u] + dist[u * n + v] + dist[v * n + w2] == d
                        or dist[w1 * n + v] + dist[v * n + u] + dist[u * n + w2] == d
                    ):
                        ok = True
                        break
                if ok:
                    break
            if not ok:
                return (u, v)
    return None


def prop_ph_stability_forms(corpus: Corpus, seed: int = 0) -> VerificationReport:
    """The one-sided and symmetric ph-stability conditions agree."""
    rng = random.Random(seed)

    def fn(entry):
        g = entry.graph
        n = g.n
        candidate_masks = set()
        if n <= 6:
            for combo in _subsets_upto(n, 4):
                candidate_masks.add(sum(1 << v for v in combo))
        else:
            candidate_masks.update(_sampled_masks(rng, n, 30, max_size=4))
        for a, b in g.edges[:8]:
            candidate_masks.add(u_mask(g, a, b))
            candidate_masks.add(u_mask(g, b, a))
        for mask in sorted(candidate_masks):
            one_sided = convexity.ph_stability_violation(g, VertexSet(n, mask)) is None
            symmetric = _symmetric_ph_stable(g, mask) is None
            if one_sided != symmetric:
                return "fail", {
                    "set": sorted(VertexSet(n, mask)),
                    "one_sided": one_sided,
                    "symmetric": symmetric,
                }
        return "pass", None

    return _report(
        _base_meta("prop_ph_stability_forms", seed=seed),
        _run_over_entries("prop_ph_stability_forms", corpus, fn),
    )


def prop_interval_convexity(corpus: Corpus, seed: int = 0) -> VerificationReport:
    """Every interval of a partial cube is convex."""

    def fn(entry):
        g = entry.graph
        if not is_partial_cube(g):
            return "skip", {"reason": "not_partial_cube"}
        for x in range(g.n):
            for y in range(x, g.n):
                bad = convexity_violation(g, convexity.interval(g, x, y))
                if bad is not None:
                    return "fail", {"pair": [x, y], "triple": list(bad)}
        return "pass", None

    return _report(
        _base_meta("prop_interval_convexity"),
        _run_over_entries("prop_interval_convexity", corpus, fn),
    )


def prop_boundary_halfspace(corpus: Corpus, seed: int = 0) -> VerificationReport:
    """A convex set lies inside W_ab for every boundary edge ab leaving it."""

    def fn(entry):
        g = entry.graph
        if not entry.bipartite:
            return "skip", {"reason": "not_bipartite"}
        if g.n > ORACLE_CUTOFF:
            return "skip", {"reason": "oracle_cutoff"}
        for vs in enumerate_convex_sets(g, ORACLE_CUTOFF):
            mask = vs.mask
            if mask == 0:
                continue
            for u, v in g.edges:
                inside_u = mask >> u & 1
                inside_v = mask >> v & 1
                if inside_u == inside_v:
                    continue
                a, b = (u, v) if inside_u else (v, u)
                if mask & ~w_mask(g, a, b):
                    return "fail", {"convex_set": sorted(vs), "edge": [a, b]}
        return "pass", None

    return _report(
        _base_meta("prop_boundary_halfspace"),
        _run_over_entries("prop_boundary_halfspace", corpus, fn),
    )


def prop_halfspaces_are_w(corpus: Corpus, seed: int = 0) -> VerificationReport:
    """Proper nonempty half-spaces of a partial cube are exactly its W sets."""

    def fn(entry):
        g = entry.graph
        if g.n < 2 or not is_partial_cube(g):
            return "skip", {"reason": "not_applicable"}
        if g.n > ORACLE_CUTOFF:
            return "skip", {"reason": "oracle_cutoff"}
        full = g.full_mask()
        family = set(convexity._convex_family(g, ORACLE_CUTOFF))
        halves = {
            m
            for m in family
            if 0 < m < full and (full & ~m) in family
        }
        w_masks = set()
        for a, b in g.edges:
            w_masks.add(w_mask(g, a, b))
            w_masks.add(w_mask(g, b, a))
        if halves == w_masks:
            return "pass", None
        return "fail", {
            "halfspaces_not_w": [sorted(VertexSet(g.n, m)) for m in halves - w_masks],
            "w_not_halfspaces": [sorted(VertexSet(g.n, m)) for m in w_masks - halves],
        }

    return _report(
        _base_meta("prop_halfspaces_are_w"),
        _run_over_entries("prop_halfspaces_are_w", corpus, fn),
    )


def prop_maximal_convex_halfspace(corpus: Corpus, seed: int = 0) -> VerificationReport:
    """In a convex subgraph of a partial cube, maximal proper convex subsets
    are half-spaces of the subgraph."""
    rng = random.Random(seed)

    def fn(entry):
        g = entry.graph
        if not is_partial_cube(g):
            return "skip", {"reason": "not_partial_cube"}
        if g.n > ORACLE_CUTOFF:
            return "skip", {"reason": "oracle_cutoff"}
        candidates = [vs for vs in enumerate_convex_sets(g, ORACLE_CUTOFF) if len(vs) >= 2]
        rng.shuffle(candidates)
        for vs in candidates[:8]:
            sub, verts = induced_subgraph(g, vs)
            family = convexity._convex_family(sub, ORACLE_CUTOFF)
            full = sub.full_mask()
            proper = [m for m in family if m != full]
            fam_set = set(family)
            maximal = [
                m
                for m in proper
                if not any(o != m and m & o == m for o in proper)
            ]
            for m in maximal:
                if (full & ~m) not in fam_set:
                    return "fail", {
                        "subgraph": sorted(vs),
                        "maximal_set": sorted(VertexSet(sub.n, m)),
                    }
        return "pass", None

    return _report(
        _base_meta("prop_maximal_convex_halfspace", seed=seed),
        _run_over_entries("prop_maximal_convex_halfspace", corpus, fn),
    )


def prop_polytope_partial_cube(corpus: Corpus, seed: int = 0) -> VerificationReport:
    """Partial cube exactly when every hull of at most six vertices induces one."""
    rng = random.Random(seed)

    def fn(entry):
        g = entry.graph
        if not entry.bipartite:
            return "skip", {"reason": "not_bipartite"}
        if g.n > ORACLE_CUTOFF:
            return "skip", {"reason": "oracle_cutoff"}
        if g.n > 8 and rng.random() > 0.25:
            return "skip", {"reason": "sampled_out"}
        hulls = set()
        for combo in _subsets_upto(g.n, 6):
            mask = sum(1 << v for v in combo)
            hulls.add(convexity._hull(g, mask)[0])
        all_pc = True
        bad = None
        for mask in sorted(hulls):
            if mask == 0:
                continue
            sub, verts = induced_subgraph(g, VertexSet(g.n, mask))
            if not is_partial_cube(sub):
                all_pc = False
                bad = sorted(VertexSet(g.n, mask))
                break
        if all_pc == is_partial_cube(g):
            return "pass", None
        return "fail", {"graph_is_pc": is_partial_cube(g), "bad_hull": bad}

    return _report(
        _base_meta("prop_polytope_partial_cube", seed=seed),
        _run_over_entries("prop_polytope_partial_cube", corpus, fn),
    )


def prop_copoint_fastpath(corpus: Corpus, seed: int = 0) -> VerificationReport:
    """Half-space copoint route agrees with the exhaustive oracle, per vertex."""

    def fn(entry):
        g = entry.graph
        if g.n < 2 or not is_partial_cube(g):
            return "skip", {"reason": "not_applicable"}
        if g.n > ORACLE_CUTOFF:
            return "skip", {"reason": "oracle_cutoff"}
        for x in range(g.n):
            oracle = set(convexity._copoint_masks_at_oracle(g, x, ORACLE_CUTOFF))
            fast = {cp.k.mask for cp in convexity.copoints_at(g, x)}
            if oracle != fast:
                return "fail", {
                    "at": x,
                    "oracle_only": [
                        sorted(VertexSet(g.n, m)) for m in oracle - fast
                    ],
                    "fast_only": [sorted(VertexSet(g.n, m)) for m in fast - oracle],
                }
        for cp in convexity.copoints(g):
            if convexity.attaching_points(g, cp.k, cp.at) != cp.att:
                return "fail", {"copoint": _copoint_witness(cp, g)}
        return "pass", None

    return _report(
        _base_meta("prop_copoint_fastpath"),
        _run_over_entries("prop_copoint_fastpath", corpus, fn),
    )


def prop_ph_consistency(corpus: Corpus, seed: int = 0) -> VerificationReport:
    """The direct ph <= 1 decision matches the computed pre-hull number."""

    def fn(entry):
        g = entry.graph
        if not entry.bipartite:
            return "skip", {"reason": "not_bipartite"}
        ph = pre_hull_number(g, bound=ORACLE_CUTOFF + 4)
        quick = ph_leq1_bipartite(g, bound=ORACLE_CUTOFF + 4)
        if quick == (ph <= 1):
            return "pass", {"ph": ph}
        return "fail", {"ph": ph, "ph_leq1": quick}

    return _report(
        _base_meta("prop_ph_consistency"),
        _run_over_entries("prop_ph_consistency", corpus, fn),
    )


PROPERTY_SUITES: dict = {
    "hull_laws": prop_hull_laws,
    "att_independence": prop_att_independence,
    "ph_stability_forms": prop_ph_stability_forms,
    "interval_convexity": prop_interval_convexity,
    "boundary_halfspace": prop_boundary_halfspace,
    "halfspaces_are_w": prop_halfspaces_are_w,
    "maximal_convex_halfspace": prop_maximal_convex_halfspace,
    "polytope_partial_cube": prop_polytope_partial_cube,
    "copoint_fastpath": prop_copoint_fastpath,
    "ph_consistency": prop_ph_consistency,
}


def run_property_suite(name: str, corpus: Corpus, seed: int = 0) -> VerificationReport:
    return PROPERTY_SUITES[name](corpus, seed=seed)


# -- mutation probe and the full run ---------------------------------------------


def mutation_probe(seed: int = 0) -> VerificationReport:
    """Corrupt family graphs by a seeded edge deletion and rerun the golden
    checks; the failures this produces show the checks are not vacuous."""
    rng = random.Random(seed)
    mutated = []
    for entry in family_entries():
        g = entry.graph
        if not g.edges:
            continue
        candidates = list(g.edges)
        rng.shuffle(candidates)
        for edge in candidates:
            h = Graph(g.n, [e for e in g.edges if e != edge])
            if is_connected(h):
                mutated.append(
                    CorpusEntry(entry.graph_id, entry.provenance + ":mutated", h, True)
                )
                break
    report = check_golden_values(Corpus(mutated, {"mutation_seed": seed}))
    report.meta["mutation_seed"] = seed
    return report


def run_all_checks(
    corpus: Corpus,
    seed: int = DEFAULT_RANDOM_TIER[2],
    product_pairs: int = 50,
    amalgam_specs: int = 20,
    property_suites: bool = True,
) -> VerificationReport:
    """Every theorem check plus the property suites, merged into one report."""
    reports = [
        check_recognizer_agreement(corpus),
        check_att_convex_theorem(corpus),
        check_ph1_implies_pc(corpus),
        check_tree_ph0(corpus),
        check_copoints_halfspaces(corpus),
        check_gated_subgraph(corpus),
        check_expansion_contraction(corpus),
        check_golden_values(corpus),
        check_convex_subgraph_non_closure(),
        check_closure_product(sample_factor_pairs(product_pairs, seed)),
        check_closure_amalgam(sample_amalgam_specs(amalgam_specs, seed + 1)),
    ]
    if property_suites:
        for name in PROPERTY_SUITES:
            reports.append(run_property_suite(name, corpus, seed=seed))
    meta = _base_meta(
        "all",
        corpus=corpus.meta,
        seed=seed,
        product_pairs=product_pairs,
        amalgam_specs=amalgam_specs,
    )
    results = [r for rep in reports for r in rep.results]
    return _report(meta, results)
