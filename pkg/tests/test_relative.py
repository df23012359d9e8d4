from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings

from fracpack.graph import (
    bits, blowup, complement, complete, cycle, graphs_up_to, is_isomorphic, is_perfect,
    path, petersen, projection, strong_product,
)
from fracpack.invariants import InconsistencyError, fractional_packing, independence_number
from fracpack.relative import (
    BOUNDS, CYCLE_FORMULA, PERFECT, VERTEX_TRANSITIVE, PreconditionError, cycle_formula,
    cycle_table, cycle_witness_set, find_ratio_witness, hales_witness, parity_obstruction_check,
    printed_cycle_formula, ratio, ratio_bound_check, relative, relative_bounds, relative_perfect,
    relative_vertex_transitive,
)

from oracles import alpha_nx, graphs


def brute_vt(n: int, m: int) -> Fraction:
    """n / α(C_nᶜ ⊠ C_m) with α from networkx."""
    return Fraction(n, alpha_nx(strong_product(complement(cycle(n)), cycle(m))))


# ---------------------------------------------------------------------------
# Closed forms
# ---------------------------------------------------------------------------

def test_vertex_transitive_formula():
    assert relative_vertex_transitive(complete(1), cycle(5)) == Fraction(1, 2)
    assert relative_vertex_transitive(cycle(5), cycle(5)) == 1
    assert relative_vertex_transitive(cycle(4), cycle(6)) == Fraction(2, 3)
    with pytest.raises(PreconditionError):
        relative_vertex_transitive(path(3), cycle(5))


def test_perfect_formula():
    assert relative_perfect(cycle(4), cycle(5)) == 1
    assert relative_perfect(complete(1), cycle(7)) == Fraction(1, 3)
    assert relative_perfect(cycle(3), cycle(5)) == Fraction(1, 2)
    with pytest.raises(PreconditionError):
        relative_perfect(cycle(5), cycle(5))


def test_cycle_formula_anchors():
    assert cycle_formula(5, 7) == Fraction(5, 7)
    assert cycle_formula(7, 5) == Fraction(7, 4)
    assert cycle_formula(6, 5) == Fraction(3, 2)
    assert cycle_formula(4, 6) == Fraction(2, 3)
    assert cycle_formula(5, 4) == Fraction(5, 4)
    assert alpha_nx(strong_product(complement(cycle(5)), cycle(4))) == 4
    with pytest.raises(ValueError):
        cycle_formula(3, 5)


@pytest.mark.parametrize("n", range(4, 8))
def test_cycle_formula_against_networkx(n):
    for m in range(3, 8):
        assert cycle_formula(n, m) == brute_vt(n, m)


def test_triangle_rows_disagree_with_printed_formula():
    assert printed_cycle_formula(3, 5) == Fraction(3, 5)
    assert alpha_nx(strong_product(complement(cycle(3)), cycle(5))) == 6
    assert brute_vt(3, 5) == Fraction(1, 2)


def test_cycle_table_flags_only_triangle_rows():
    rows = cycle_table(7)
    assert {(r.n, r.m) for r in rows if r.flagged} == {(3, m) for m in range(3, 8)}
    assert all(r.agree for r in rows if r.n >= 4)
    row = next(r for r in rows if (r.n, r.m) == (3, 5))
    assert (row.perfect_formula, row.formula, row.brute_force) == (Fraction(1, 2), Fraction(3, 5), Fraction(1, 2))
    with pytest.raises(ValueError):
        cycle_table(10)


def test_witness_sets():
    a55 = cycle_witness_set(5, 5)
    assert a55.bit_count() == 5
    for n, m in [(5, 5), (5, 7), (5, 9), (7, 9), (7, 7)]:
        a = cycle_witness_set(n, m)
        assert a.bit_count() == m
        assert strong_product(complement(cycle(n)), cycle(m)).is_independent(a)
    assert sorted(bits(projection(cycle_witness_set(5, 9), 0, "left", 5, 9))) == [0, 5, 7]
    assert projection(cycle_witness_set(5, 7), 0, "left", 5, 7).bit_count() == 2
    with pytest.raises(PreconditionError):
        cycle_witness_set(7, 5)


def test_parity_obstruction():
    assert parity_obstruction_check(7, 5)
    assert independence_number(strong_product(complement(cycle(7)), cycle(5))) == 4
    assert parity_obstruction_check(9, 5)
    assert parity_obstruction_check(5, 3)
    assert independence_number(strong_product(complement(cycle(5)), cycle(3))) == 2
    with pytest.raises(PreconditionError):
        parity_obstruction_check(5, 7)


# ---------------------------------------------------------------------------
# Dispatch and bounds
# ---------------------------------------------------------------------------

def test_dispatch_examples():
    r = relative(cycle(7), cycle(5))
    assert r.exact and r.value == Fraction(7, 4) and r.method == CYCLE_FORMULA
    r = relative(cycle(4), cycle(7))
    assert r.value == Fraction(2, 3) and r.method == PERFECT
    assert set(r.cross_checks) == {PERFECT, CYCLE_FORMULA, VERTEX_TRANSITIVE}
    r = relative(petersen(), cycle(5))
    assert r.method == VERTEX_TRANSITIVE
    assert r.value == Fraction(10, alpha_nx(strong_product(complement(petersen()), cycle(5))))
    r = relative(complete(1), cycle(5))
    assert r.value == Fraction(1, 2)


def test_triangle_dispatch_notes_the_printed_formula():
    r = relative(cycle(3), cycle(5))
    assert r.value == Fraction(1, 2) and r.method == PERFECT
    assert any("3/5" in note for note in r.notes)


def test_bounds_route_for_non_symmetric_imperfect_graphs():
    # C5 with a pendant vertex: neither perfect nor vertex-transitive
    g = cycle(5)
    g = type(g).from_edges(6, g.edges() + [(0, 5)])
    r = relative(g, cycle(5), budget=5)
    assert r.method == BOUNDS and r.lower <= r.upper
    assert r.lower_witness is not None


def test_relative_bounds_examples():
    r = relative_bounds(cycle(5), cycle(5))
    assert (r.lower, r.upper) == (1, Fraction(5, 4))
    r = relative_bounds(complete(1), cycle(5))
    assert r.lower == Fraction(1, 2)
    assert ratio(complete(1), cycle(5), cycle(5)) == Fraction(2, 5)
    for g in graphs_up_to(4):
        assert relative_bounds(g, g).lower == 1


def test_interval_contains_exact_value():
    r = relative(cycle(7), cycle(5), budget=10)
    assert r.interval.lower <= r.value <= r.interval.upper


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=4), graphs(max_n=4), graphs(max_n=3))
def test_no_witness_beats_the_value(g, h, w):
    res = relative(g, h)
    assert ratio(g, h, w) <= res.upper


def test_ratio_bound_check():
    rep = ratio_bound_check(cycle(7), cycle(5))
    assert rep["alpha_ratio"] == Fraction(3, 2) and rep["fractional_ratio"] == Fraction(7, 5)
    assert rep["alpha_ok"] and rep["fractional_ok"]
    rep = ratio_bound_check(cycle(6), cycle(6))
    assert rep["alpha_ratio"] == rep["fractional_ratio"] == rep["upper"] == 1
    rep = ratio_bound_check(complete(1), cycle(5))
    assert rep["alpha_ratio"] == rep["upper"] == Fraction(1, 2)


def test_reduction_formula():
    for h in graphs_up_to(6, connected=True):
        assert relative_vertex_transitive(complete(1), h) == Fraction(1, alpha_nx(h))


# ---------------------------------------------------------------------------
# Witnesses
# ---------------------------------------------------------------------------

def test_hales_examples():
    w, r = hales_witness(cycle(5))
    assert is_isomorphic(w, cycle(5)) and r == Fraction(5, 2)
    w, r = hales_witness(complete(3))
    assert r == 1
    w, r = hales_witness(cycle(4))
    assert r == 2


def test_hales_ratio_against_networkx():
    for g in graphs_up_to(5, connected=True):
        w, r = hales_witness(g)
        assert Fraction(alpha_nx(strong_product(g, w)), alpha_nx(w)) == r == fractional_packing(g)


def test_hales_inconsistency_is_detected(monkeypatch):
    import fracpack.relative as rel
    monkeypatch.setattr(rel, "lp_multiplicities", lambda g: [1] + [0] * (g.n - 1))
    with pytest.raises(InconsistencyError):
        rel.hales_witness(cycle(5))


def test_ratio_witness_endpoints():
    for g in graphs_up_to(5, connected=True):
        w = find_ratio_witness(g, independence_number(g))
        assert w.route == "single-vertex" and w.graph == complete(1)
    w = find_ratio_witness(cycle(5), Fraction(5, 2))
    assert w.route == "hales"


def test_ratio_witness_intermediate():
    w = find_ratio_witness(cycle(5), Fraction(9, 4))
    assert w is not None and w.ratio == Fraction(9, 4)
    g = w.graph
    assert Fraction(alpha_nx(strong_product(cycle(5), g)), alpha_nx(g)) == Fraction(9, 4)
    assert find_ratio_witness(cycle(5), Fraction(9, 4), budget=3) is None
    with pytest.raises(PreconditionError):
        find_ratio_witness(cycle(5), Fraction(3))


def test_ratio_witness_random_targets():
    rng = random.Random(3)
    gs = [g for g in graphs_up_to(6, connected=True) if not is_perfect(g)]
    for g in rng.sample(gs, 4):
        lo, hi = independence_number(g), fractional_packing(g)
        a = lo + (hi - lo) * Fraction(rng.randint(1, 4), 5)
        w = find_ratio_witness(g, a, budget=200)
        assert w is not None
        assert Fraction(independence_number(strong_product(g, w.graph)), independence_number(w.graph)) == a


def test_blowup_multiplicities_do_not_change_ratio():
    g = cycle(5)
    base = complement(g).induced([0, 1, 2])
    grown = blowup(base, [3, 1, 2])
    assert Fraction(independence_number(strong_product(g, grown)), independence_number(grown)) == \
        Fraction(independence_number(strong_product(g, base)), independence_number(base))
