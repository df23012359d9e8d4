from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings

from fracpack.expand import (
    AddEdge, CliqueSubstitute, ExpandCertificate, RemoveVertex, apply_operation,
    certificate_via_projections, check_labelmap, conjecture_scan, expand_sequence_search,
    is_in_expand, labelmap_to_sequence, merge_operations, merge_vertices, monotonicity_check,
    replay, verify_certificate,
)
from fracpack.graph import (
    Graph, blowup, complement, complete, cycle, empty, graphs_up_to, is_isomorphic, path,
    petersen, strong_product,
)
from fracpack.invariants import independence_number
from fracpack.relative import relative

from oracles import expand_labelmap_brute, graphs


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------

def test_operation_examples():
    fig = apply_operation(path(3), CliqueSubstitute(1, 3))
    assert is_isomorphic(fig, blowup(path(3), [1, 3, 1]))
    assert apply_operation(cycle(6), RemoveVertex(5)) == path(5)
    assert apply_operation(path(4), AddEdge(0, 3)) == cycle(4)
    assert apply_operation(cycle(5), CliqueSubstitute(2, 1)) == cycle(5)


def test_operation_errors():
    with pytest.raises(IndexError):
        apply_operation(cycle(4), RemoveVertex(4))
    with pytest.raises(ValueError):
        apply_operation(cycle(4), AddEdge(0, 1))
    with pytest.raises(ValueError):
        apply_operation(cycle(4), AddEdge(2, 2))
    with pytest.raises(ValueError):
        apply_operation(cycle(4), CliqueSubstitute(0, 0))


def test_substitution_keeps_vertex_and_labels():
    g = path(3).with_labels(["a", "b", "c"])
    out = apply_operation(g, CliqueSubstitute(0, 3))
    assert out.labels == ("a", "b", "c", "a", "a")
    assert out.adjacent(0, 3) and out.adjacent(3, 4) and out.adjacent(4, 1) and not out.adjacent(3, 2)


def test_merge():
    assert merge_vertices(complete(3), 0, 1) == complete(2)
    c4 = cycle(4)
    merged = merge_vertices(c4, 0, 2)
    # both neighbours of 2 are already neighbours of 0, so only the deletion is needed
    assert merge_operations(c4, 0, 2) == [RemoveVertex(2)]
    assert merged == replay(c4, [RemoveVertex(2)]) and is_isomorphic(merged, path(3))
    with pytest.raises(ValueError):
        merge_vertices(complete(1), 0, 0)


@settings(max_examples=60)
@given(graphs(min_n=2, max_n=6))
def test_merge_is_in_expand_and_never_raises_alpha(g):
    u, v = 0, g.n - 1
    merged = merge_vertices(g, u, v)
    assert independence_number(merged) <= independence_number(g)
    assert is_in_expand(merged, g) is not None


# ---------------------------------------------------------------------------
# Membership
# ---------------------------------------------------------------------------

def test_membership_examples():
    cert = is_in_expand(cycle(5), cycle(7))
    assert cert is not None and check_labelmap(cycle(5), cycle(7), cert.phi)
    assert is_in_expand(cycle(7), cycle(5)) is None
    for g in graphs_up_to(5):
        assert is_in_expand(g, g) is not None


@settings(max_examples=80)
@given(graphs(max_n=5), graphs(max_n=4))
def test_labelmap_search_matches_brute_force(g, h):
    cert = is_in_expand(g, h)
    assert (cert is not None) == expand_labelmap_brute(g, h)
    if cert is not None:
        assert verify_certificate(g, h, cert)
        assert verify_certificate(g, h, labelmap_to_sequence(g, h, cert.phi))


def test_sequence_search_examples():
    cert = expand_sequence_search(cycle(4), cycle(6))
    kinds = sorted(type(op).__name__ for op in cert.sequence)
    assert kinds == ["AddEdge", "RemoveVertex", "RemoveVertex"]
    assert verify_certificate(cycle(4), cycle(6), cert)
    assert expand_sequence_search(cycle(5), cycle(5)).sequence == []
    assert expand_sequence_search(complete(3), complete(1)).sequence == [CliqueSubstitute(0, 3)]
    assert expand_sequence_search(cycle(7), cycle(5)) is None
    assert expand_sequence_search(cycle(4), cycle(6), size_bound=3) is None
    with pytest.raises(ValueError):
        expand_sequence_search(cycle(4), cycle(6), strategy="dfs")


def test_staged_and_bfs_strategies_agree():
    gs = graphs_up_to(3) + [cycle(4), path(4)]
    for g in gs:
        for h in gs:
            staged = expand_sequence_search(g, h)
            bfs = expand_sequence_search(g, h, strategy="bfs")
            assert (staged is None) == (bfs is None), (g, h)
            if bfs is not None:
                assert verify_certificate(g, h, bfs)


def test_oracle_agreement_connected_four_vertices():
    gs = graphs_up_to(4, connected=True)
    for g in gs:
        for h in gs:
            cert = is_in_expand(g, h)
            seq = expand_sequence_search(g, h)
            assert (cert is None) == (seq is None)
            if seq is not None:
                assert verify_certificate(g, h, seq)


def test_membership_implies_value_at_most_one():
    rng = random.Random(5)
    gs = graphs_up_to(5, connected=True)
    for _ in range(150):
        g, h = rng.choice(gs), rng.choice(gs)
        if is_in_expand(g, h) is not None:
            assert relative(g, h).upper <= 1


def test_verify_rejects_bad_certificates():
    g, h = cycle(4), cycle(6)
    assert verify_certificate(g, h, ExpandCertificate("labelmap", phi=(0, 1, 2, 3)))
    assert not verify_certificate(g, h, ExpandCertificate("labelmap", phi=(0, 1, 0, 1)))
    assert not verify_certificate(g, h, ExpandCertificate("sequence", [RemoveVertex(0)]))
    good = expand_sequence_search(g, h)
    bad = ExpandCertificate("sequence", good.sequence, mapping=(0, 0, 1, 2))
    assert not verify_certificate(g, h, bad)


def test_labelmap_to_sequence_rejects_invalid_maps():
    with pytest.raises(ValueError):
        labelmap_to_sequence(empty(2), complete(2), (0, 1))


# ---------------------------------------------------------------------------
# Constructive certificates
# ---------------------------------------------------------------------------

def test_projection_certificates():
    out = certificate_via_projections(cycle(5), cycle(5))
    assert out.route == "cycle" and verify_certificate(cycle(5), cycle(5), out.certificate)
    out = certificate_via_projections(cycle(4), cycle(6))
    assert out.route == "perfect" and out.case == "clique-partition"
    assert verify_certificate(cycle(4), cycle(6), out.certificate)
    out = certificate_via_projections(cycle(5), complete(3))
    assert out.certificate is None and "hypothesis fails" in out.diagnostic
    out = certificate_via_projections(cycle(5), cycle(9))
    assert verify_certificate(cycle(5), cycle(9), out.certificate)


def test_projection_certificates_for_cycles_against_all_small_h():
    for n in (4, 5, 6, 7):
        g = cycle(n)
        for h in graphs_up_to(6, connected=True):
            if independence_number(strong_product(complement(g), h)) >= n:
                out = certificate_via_projections(g, h, route="cycle")
                assert out.certificate is not None, (n, h, out.diagnostic)
                assert verify_certificate(g, h, out.certificate)


def test_forced_route_validation():
    assert certificate_via_projections(path(4), cycle(5), route="cycle").certificate is None
    with pytest.raises(ValueError):
        certificate_via_projections(cycle(5), cycle(5), route="magic")


def test_projection_route_absent_for_irregular_imperfect_graphs():
    g = Graph.from_edges(6, cycle(5).edges() + [(0, 5)])
    assert certificate_via_projections(g, cycle(5)).route == "none"
    assert certificate_via_projections(petersen(), cycle(5)).route == "vertex-transitive-case1"


# ---------------------------------------------------------------------------
# Monotonicity and the scan
# ---------------------------------------------------------------------------

def test_monotonicity_examples():
    ws = graphs_up_to(4)
    for v in range(5):
        assert monotonicity_check(cycle(5), RemoveVertex(v), ws)["passed"]
    rep = monotonicity_check(path(4), AddEdge(0, 3), [complete(1)])
    assert rep["passed"]
    rep = monotonicity_check(cycle(5), CliqueSubstitute(0, 1), ws)
    assert rep["passed"] and rep["equalities"] == rep["checked"]


def test_conjecture_scan_small():
    rep = conjecture_scan(5)
    assert rep["passed"]
    assert rep["critical_events"] == [] and rep["triv_violations"] == []
    assert sum(rep["method_counts"].values()) == rep["pairs"]
    assert conjecture_scan(4, jobs=2)["pairs"] == conjecture_scan(4)["pairs"]
    with pytest.raises(ValueError):
        conjecture_scan(8)


def test_scan_values_are_exact_ratios():
    rep = conjecture_scan(4)
    assert rep["members"] <= rep["below_one"] or rep["triv_violations"]
    assert all(isinstance(r.value, Fraction) for r in rep["conjecture_candidates"])
