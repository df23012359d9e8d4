from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fracpack.graph import complete, cycle, graphs_up_to
from fracpack.ratlp import (
    CertificateError, InfeasibleOrigin, LinearProgram, LPSolution, UnboundedLP, lp_from_cliques,
    simplex_max, verify_certificate,
)

from oracles import fractional_scipy, rational


def test_single_constraint():
    sol = simplex_max(LinearProgram.build([1, 1], [([1, 1], 1)]))
    assert sol.value == 1


def test_c5_lp_and_dual():
    lp = lp_from_cliques(cycle(5))
    assert len(lp.constraints) == 5
    sol = simplex_max(lp)
    assert sol.value == Fraction(5, 2)
    assert sol.x == (Fraction(1, 2),) * 5
    # a fractional clique cover of the same weight
    assert sum(sol.dual) == Fraction(5, 2)


def test_k4_lp():
    lp = lp_from_cliques(complete(4))
    assert len(lp.constraints) == 1
    assert simplex_max(lp).value == 1


def test_k_scaling():
    assert simplex_max(lp_from_cliques(cycle(5), 2)).value == 5
    with pytest.raises(ValueError):
        lp_from_cliques(cycle(5), 0)


def test_unbounded():
    with pytest.raises(UnboundedLP):
        simplex_max(LinearProgram.build([1, 1], [([1, 0], 1)]))


def test_negative_rhs_rejected():
    with pytest.raises(InfeasibleOrigin):
        simplex_max(LinearProgram.build([1], [([1], -1)]))


def test_shape_validation():
    with pytest.raises(ValueError):
        LinearProgram.build([1, 1], [([1], 1)])


def test_certificate_rejects_wrong_claims():
    lp = LinearProgram.build([1, 1], [([1, 1], 1)])
    with pytest.raises(CertificateError):
        verify_certificate(lp, LPSolution(Fraction(2), (Fraction(1), Fraction(1)), (Fraction(2),)))
    with pytest.raises(CertificateError):
        verify_certificate(lp, LPSolution(Fraction(1), (Fraction(1), Fraction(0)), (Fraction(1, 2),)))
    verify_certificate(lp, LPSolution(Fraction(1), (Fraction(1), Fraction(0)), (Fraction(1),)))


def test_degenerate_lp_terminates():
    # classic cycling-prone instance; Bland's rule must terminate
    lp = LinearProgram.build(
        [Fraction(3, 4), -150, Fraction(1, 50), -6],
        [([Fraction(1, 4), -60, Fraction(-1, 25), 9], 0),
         ([Fraction(1, 2), -90, Fraction(-1, 50), 3], 0),
         ([0, 0, 1, 0], 1)],
    )
    assert simplex_max(lp).value == Fraction(1, 20)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_random_lps_match_scipy(data):
    from scipy.optimize import linprog

    n = data.draw(st.integers(1, 4))
    m = data.draw(st.integers(1, 4))
    coef = st.integers(0, 5)
    obj = data.draw(st.lists(st.integers(0, 5), min_size=n, max_size=n))
    rows = [(data.draw(st.lists(coef, min_size=n, max_size=n)), data.draw(st.integers(0, 6))) for _ in range(m)]
    lp = LinearProgram.build(obj, rows)
    res = linprog([-c for c in obj], A_ub=[r for r, _ in rows], b_ub=[b for _, b in rows],
                  bounds=[(0, None)] * n, method="highs")
    if res.status == 3:
        with pytest.raises(UnboundedLP):
            simplex_max(lp)
        return
    sol = simplex_max(lp)
    assert abs(float(sol.value) + res.fun) < 1e-7


def test_clique_lps_match_scipy():
    for g in graphs_up_to(6):
        value = simplex_max(lp_from_cliques(g)).value
        assert value == rational(fractional_scipy(g))
