"""Acceptance suite.

One test per acceptance criterion, each at its stated tolerance, printing
a single summary line.  The corpus is the full default one: exhaustive
connected bipartite graphs to 6 vertices up to isomorphism, the named
family tier, and 200 seeded random graphs on 7..10 vertices.
"""

import time

import pytest

from partialcube import (
    NotPartialCubeError,
    are_isomorphic_small,
    cube_embedding,
    induced_subgraph,
    is_att_convex,
    is_partial_cube,
    is_partial_cube_djokovic,
    is_partial_cube_winkler,
    pre_hull_number,
)
from partialcube.constructions import (
    cycle_graph,
    hypercube,
    hypercube_minus_vertex,
    k_2_3,
    m_n_1,
    path_graph,
)
from partialcube.harness import (
    PROPERTY_SUITES,
    check_att_convex_theorem,
    check_closure_amalgam,
    check_closure_product,
    check_convex_subgraph_non_closure,
    check_expansion_contraction,
    check_gated_subgraph,
    check_ph1_implies_pc,
    enumerate_corpus,
    run_property_suite,
    sample_amalgam_specs,
    sample_factor_pairs,
)


@pytest.fixture(scope="module")
def corpus():
    return enumerate_corpus()  # defaults: N=6 + families + 200 random n in 7..10


def _announce(number, text):
    print(f"acceptance criterion {number}: PASS ({text})")


def test_criterion_1_golden_pre_hull_numbers():
    cases = [
        ("K_2_3", k_2_3, 2),
        ("Q_3_minus", lambda: hypercube_minus_vertex(3), 2),
        ("M_4_1", lambda: m_n_1(4), 1),
        ("P_7", lambda: path_graph(7), 0),
        ("star_1_5", lambda: __import__("partialcube").gen("K", 1, 5), 0),
        ("Q_2", lambda: hypercube(2), 1),
        ("Q_3", lambda: hypercube(3), 1),
        ("C_6", lambda: cycle_graph(6), 1),
    ]
    timings = []
    for name, build, expected in cases:
        g = build()  # fresh instance, no warm caches
        t0 = time.perf_counter()
        got = pre_hull_number(g)
        elapsed = time.perf_counter() - t0
        assert got == expected, f"{name}: ph {got} != {expected}"
        assert elapsed < 1.0, f"{name}: {elapsed:.3f}s exceeds the 1s budget"
        timings.append(elapsed)
    _announce(1, f"8 golden values exact, slowest {max(timings) * 1000:.1f} ms")


def test_criterion_2_recognizer_triple_agreement():
    sweep = enumerate_corpus(include_families=False)  # exhaustive N=6 + 200 random
    t0 = time.perf_counter()
    disagreements = []
    for entry in sweep:
        g = entry.graph
        dj = is_partial_cube_djokovic(g)
        wk = is_partial_cube_winkler(g)
        try:
            cube_embedding(g)
            emb = True
        except NotPartialCubeError:
            emb = False
        if not dj == wk == emb:
            disagreements.append(entry.graph_id)
    elapsed = time.perf_counter() - t0
    assert disagreements == []
    assert elapsed < 120.0, f"sweep took {elapsed:.1f}s, budget is 2 minutes"
    _announce(2, f"{len(sweep.entries)} graphs, 3 recognizers, {elapsed:.2f}s")


def test_criterion_3_att_convex_equivalence(corpus):
    report = check_att_convex_theorem(corpus)
    assert report.counts()["fail"] == 0
    exhaustive = [e for e in corpus if e.provenance.startswith("exhaustive")]
    below_five = [e for e in exhaustive if e.graph.n < 5]
    assert all(is_partial_cube(e.graph) and is_att_convex(e.graph) for e in below_five)
    negatives_at_five = [
        e
        for e in exhaustive
        if e.graph.n == 5 and not is_partial_cube(e.graph)
    ]
    assert len(negatives_at_five) == 1
    assert are_isomorphic_small(negatives_at_five[0].graph, k_2_3()) is not None
    assert not is_att_convex(negatives_at_five[0].graph)
    _announce(3, "equivalence exhaustive; minimum negative instance is K_2_3 at n=5")


def test_criterion_4_ph1_implies_partial_cube(corpus):
    report = check_ph1_implies_pc(corpus)
    assert report.counts()["fail"] == 0
    assert pre_hull_number(k_2_3()) == 2 and not is_partial_cube(k_2_3())
    q3m = hypercube_minus_vertex(3)
    assert pre_hull_number(q3m) == 2 and is_partial_cube(q3m)
    _announce(4, "no violations; the two ph=2 landmarks behave as stated")


def test_criterion_5_closure_theorems(corpus):
    products = check_closure_product(sample_factor_pairs(50, 0xC0FFEE))
    assert products.counts() == {"pass": 50, "fail": 0, "skip": 0}
    amalgams = check_closure_amalgam(sample_amalgam_specs(20, 0xC0FFEE + 1))
    assert amalgams.counts() == {"pass": 20, "fail": 0, "skip": 0}
    gated = check_gated_subgraph(corpus)
    assert gated.counts()["fail"] == 0
    assert gated.counts()["pass"] > 0
    _announce(5, "50 products, 20 amalgams, gated subgraph sweep, zero failures")


def test_criterion_6_convex_subgraph_non_closure():
    report = check_convex_subgraph_non_closure()
    (result,) = report.results
    assert result.status == "pass"
    found = result.witness["subgraph"]
    host = m_n_1(4)
    sub, _ = induced_subgraph(host, found)
    assert are_isomorphic_small(sub, hypercube_minus_vertex(3)) is not None
    assert result.witness["ph_host"] == 1 and result.witness["ph_subgraph"] == 2
    _announce(6, f"convex 7-vertex copy found at {found}, ph 1 vs 2")


def test_criterion_7_expansion_contraction_duality(corpus):
    report = check_expansion_contraction(corpus)
    counts = report.counts()
    assert counts["fail"] == 0
    # every corpus partial cube must actually be exercised, none skipped
    skipped = [
        r
        for r in report.results
        if r.status == "skip" and r.witness.get("reason") != "not_partial_cube"
    ]
    assert skipped == []
    assert counts["pass"] > 0
    _announce(7, f"{counts['pass']} partial cubes, every class contracted and rebuilt")


def test_criterion_8_property_suites(corpus):
    tallies = {}
    for name in sorted(PROPERTY_SUITES):
        report = run_property_suite(name, corpus, seed=0xC0FFEE)
        counts = report.counts()
        assert counts["fail"] == 0, (name, report.failures()[:3])
        assert counts["pass"] > 0, name
        tallies[name] = counts["pass"]
    _announce(8, f"{len(tallies)} suites green: " + ", ".join(sorted(tallies)))
