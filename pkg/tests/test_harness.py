"""Corpus enumeration, report plumbing, golden values, mutation probe."""

import json

import pytest

from partialcube import are_isomorphic_small, serialize_graph
from partialcube.constructions import cycle_graph, complete_bipartite, path_graph
from partialcube.harness import (
    VerificationReport,
    check_att_convex_theorem,
    check_closure_amalgam,
    check_closure_product,
    check_convex_subgraph_non_closure,
    check_copoints_halfspaces,
    check_expansion_contraction,
    check_gated_subgraph,
    check_golden_values,
    check_ph1_implies_pc,
    check_recognizer_agreement,
    check_tree_ph0,
    connected_bipartite_graphs,
    enumerate_corpus,
    mutation_probe,
    run_all_checks,
    sample_amalgam_specs,
    sample_factor_pairs,
)


@pytest.fixture(scope="module")
def small_corpus():
    return enumerate_corpus(max_exhaustive_n=5, random_tier=(12, (7, 9), 0xC0FFEE))


# -- corpus ---------------------------------------------------------------------


def test_corpus_n3_is_p2_and_p3():
    corpus = enumerate_corpus(max_exhaustive_n=3, random_tier=(0, (7, 8), 1),
                              include_families=False)
    graphs = [e.graph for e in corpus]
    assert len(graphs) == 2
    assert any(are_isomorphic_small(g, path_graph(2)) for g in graphs)
    assert any(are_isomorphic_small(g, path_graph(3)) for g in graphs)


def test_corpus_singleton_flag():
    corpus = enumerate_corpus(max_exhaustive_n=2, random_tier=(0, (7, 8), 1),
                              include_families=False, include_singletons=True)
    assert any(e.graph.n == 1 for e in corpus)


def test_corpus_n4_contains_expected_graphs():
    graphs = connected_bipartite_graphs(4)
    assert len(graphs) == 3
    for target in (cycle_graph(4), path_graph(4), complete_bipartite(1, 3)):
        assert any(are_isomorphic_small(g, target) for g in graphs)


def test_exhaustive_counts_match_known_sequence():
    # connected bipartite graphs up to isomorphism, a published sequence
    assert [len(connected_bipartite_graphs(n)) for n in range(1, 8)] == [
        1,
        1,
        1,
        3,
        5,
        17,
        44,
    ]


def test_corpus_deterministic():
    def snapshot():
        corpus = enumerate_corpus(max_exhaustive_n=4, random_tier=(8, (7, 9), 99))
        return [(e.graph_id, e.provenance, serialize_graph(e.graph)) for e in corpus]

    assert snapshot() == snapshot()


def test_corpus_rejects_large_exhaustive_tier():
    with pytest.raises(ValueError):
        enumerate_corpus(max_exhaustive_n=9)


def test_corpus_entries_connected_bipartite(small_corpus):
    from partialcube import is_bipartite, is_connected

    for entry in small_corpus:
        assert is_connected(entry.graph)
        assert entry.bipartite == is_bipartite(entry.graph)


# -- individual checks ------------------------------------------------------------


@pytest.mark.parametrize(
    "check",
    [
        check_recognizer_agreement,
        check_att_convex_theorem,
        check_ph1_implies_pc,
        check_tree_ph0,
        check_copoints_halfspaces,
        check_gated_subgraph,
        check_expansion_contraction,
        check_golden_values,
    ],
)
def test_checks_have_no_failures(small_corpus, check):
    report = check(small_corpus)
    assert report.counts()["fail"] == 0
    assert all(r.status in ("pass", "fail", "skip") for r in report.results)


def test_closure_checks_have_no_failures():
    product_report = check_closure_product(sample_factor_pairs(12, 3))
    assert product_report.counts() == {"pass": 12, "fail": 0, "skip": 0}
    amalgam_report = check_closure_amalgam(sample_amalgam_specs(8, 4))
    assert amalgam_report.counts() == {"pass": 8, "fail": 0, "skip": 0}


def test_closure_samples_cover_both_directions():
    pairs = sample_factor_pairs(50, 0xC0FFEE)
    from partialcube import pre_hull_number

    labels = {
        (pre_hull_number(g0) <= 1, pre_hull_number(g1) <= 1)
        for (_, g0), (_, g1) in pairs
    }
    assert (True, True) in labels
    assert any(False in pair for pair in labels)


def test_convex_subgraph_non_closure_check():
    report = check_convex_subgraph_non_closure()
    assert report.counts()["fail"] == 0
    (result,) = report.results
    assert result.status == "pass"
    assert result.witness["ph_host"] == 1
    assert result.witness["ph_subgraph"] == 2


def test_run_all_checks_sorted_and_green(small_corpus):
    report = run_all_checks(small_corpus, product_pairs=6, amalgam_specs=4)
    assert report.counts()["fail"] == 0
    keys = [(r.graph_id, r.check) for r in report.results]
    assert keys == sorted(keys)


# -- mutation probe -----------------------------------------------------------------


def test_mutation_probe_detects_corruption():
    report = mutation_probe(seed=0)
    assert report.counts()["fail"] >= 1


def test_mutation_probe_deterministic():
    a = mutation_probe(seed=3).to_json()
    b = mutation_probe(seed=3).to_json()
    # timings differ; compare everything else
    strip = lambda text: [
        {k: v for k, v in r.items() if k != "millis"}
        for r in json.loads(text)["results"]
    ]
    assert strip(a) == strip(b)


# -- reports ---------------------------------------------------------------------------


def test_report_json_roundtrip(small_corpus):
    report = check_tree_ph0(small_corpus)
    again = VerificationReport.from_json(report.to_json())
    assert again == report


def test_report_csv_shape(small_corpus):
    report = check_recognizer_agreement(small_corpus)
    lines = report.to_csv().strip().splitlines()
    assert lines[0] == "graph_id,provenance,check,status,witness,millis"
    assert len(lines) == len(report.results) + 1


def test_report_witnesses_are_json_native(small_corpus):
    report = run_all_checks(small_corpus, product_pairs=4, amalgam_specs=3)
    for r in report.results:
        json.dumps(r.witness)  # must not raise
