from __future__ import annotations

from fractions import Fraction

import pytest

from fracpack import theorems
from fracpack.graph import cycle, strong_product
from fracpack.invariants import generalized_independence
from fracpack.relative import hales_witness

from oracles import alpha_k_milp


FAST_CHECKS = [
    theorems.check_cycle_table,
    theorems.check_triangle_discrepancy,
    theorems.check_parity_obstruction,
    theorems.check_cycle_witness_sets,
    theorems.check_reduction_formula,
    theorems.check_ratio_bound,
    theorems.check_projection_independence,
    theorems.check_monotonicity,
    theorems.check_compact_witnesses,
    theorems.check_alpha2_c5,
    theorems.check_superadditivity,
    theorems.check_generalized_sandwich,
    theorems.check_product_inequality,
    theorems.check_hales,
    theorems.check_sup_ratio_generalized,
    theorems.check_one_n,
    theorems.check_collection,
    theorems.check_limit_sandwich,
    theorems.check_constraint_families,
]


@pytest.mark.parametrize("check", FAST_CHECKS, ids=lambda f: f.__name__)
def test_check_passes(check):
    result = check()
    assert result.passed, result.to_json()
    assert result.checked > 0


def test_failure_is_reported_with_counterexample():
    res = theorems._first_failure("demo", [(1,), (2,), (3,)], lambda x: {"x": x} if x == 2 else None)
    assert not res.passed and res.checked == 2 and res.counterexample == {"x": 2}


def test_suite_names():
    assert theorems.SUITES == ("main", "appendix", "all")
    with pytest.raises(ValueError):
        theorems.run_suite("bogus")


def test_appendix_suite_is_seed_deterministic():
    a = [c.to_json() for c in theorems.appendix_suite(seed=4)]
    b = [c.to_json() for c in theorems.appendix_suite(seed=4)]
    assert a == b and all(c["passed"] for c in a)


def test_generalized_hales_witness_is_not_always_tight():
    # the clique-blowup witness reaches α* for α, but not for α₂ on C5:
    # α₂(C5⊠C5) = 12, one short of α*(C5) · α₂(C5) = 25/2
    w, r = hales_witness(cycle(5))
    assert r == Fraction(5, 2)
    prod = strong_product(cycle(5), w)
    assert generalized_independence(prod, 2)[0] == 12 == alpha_k_milp(prod, 2)
    assert generalized_independence(w, 2)[0] == 5
