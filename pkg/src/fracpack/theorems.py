"""Exhaustive small-graph verification suites, one named check per claim.

Each check returns a :class:`Check`; the CLI turns a suite into a report whose exit code
is nonzero iff some check failed. Ranges default to the acceptance ranges.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .expand import (
    AddEdge, CliqueSubstitute, RemoveVertex, conjecture_scan, expand_sequence_search,
    is_in_expand, monotonicity_check, verify_certificate,
)
from .graph import (
    complement, complete, cycle, graphs_up_to, is_perfect, path,
    projection, strong_product,
)
from .invariants import (
    all_cliques, clique_partition, fractional_packing, generalized_fractional,
    generalized_independence, independence_number, max_independent_set, scaling_denominator,
)
from .relative import (
    cycle_table, cycle_witness_set, find_ratio_witness, hales_witness, parity_obstruction_check,
    ratio_bound_check, relative, relative_vertex_transitive,
)


@dataclass
class Check:
    name: str
    passed: bool
    checked: int = 0
    detail: str = ""
    counterexample: dict | None = None
    info: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {"name": self.name, "passed": self.passed, "checked": self.checked}
        if self.detail:
            out["detail"] = self.detail
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        if self.info:
            out["info"] = self.info
        return out


def _first_failure(name: str, cases, predicate: Callable) -> Check:
    count = 0
    for case in cases:
        count += 1
        bad = predicate(*case)
        if bad:
            return Check(name, False, count, counterexample=bad)
    return Check(name, True, count)


# ---------------------------------------------------------------------------
# Main-text claims
# ---------------------------------------------------------------------------

def check_cycle_table(max_n: int = 9) -> Check:
    rows = [r for r in cycle_table(max_n, include_triangle=False)]
    bad = [r for r in rows if not r.agree]
    return Check("cycle_formula_vs_brute_force", not bad, len(rows),
                 counterexample=bad[0].to_json() if bad else None)


def check_triangle_discrepancy(max_n: int = 9) -> Check:
    rows = cycle_table(max_n)
    flagged = {(r.n, r.m) for r in rows if r.flagged}
    expected = {(3, m) for m in range(3, max_n + 1)}
    row35 = next(r for r in rows if (r.n, r.m) == (3, 5))
    ok = flagged == expected and row35.brute_force == Fraction(1, 2) and row35.formula == Fraction(3, 5)
    return Check("cycle_formula_fails_at_n3", ok, len(rows),
                 detail=f"flagged rows {sorted(flagged)}; (3,5): brute {row35.brute_force}, printed {row35.formula}")


def check_parity_obstruction(max_n: int = 9) -> Check:
    cases = [(n, m) for n in range(5, max_n + 1, 2) for m in range(3, n, 2)]
    return _first_failure("parity_obstruction", cases,
                          lambda n, m: None if parity_obstruction_check(n, m) else {"n": n, "m": m})


def check_cycle_witness_sets(max_m: int = 9) -> Check:
    def bad(n, m):
        a = cycle_witness_set(n, m)
        prod = strong_product(complement(cycle(n)), cycle(m))
        if a.bit_count() != m or not prod.is_independent(a):
            return {"n": n, "m": m}
    cases = [(n, m) for n in range(5, max_m + 1, 2) for m in range(n, max_m + 1, 2)]
    return _first_failure("cycle_witness_set_independent", cases, bad)


def check_reduction_formula(max_vertices: int = 6) -> Check:
    k1 = complete(1)

    def bad(h):
        v = relative_vertex_transitive(k1, h)
        if v != Fraction(1, independence_number(h)):
            return {"H": h, "value": v}
    return _first_failure("reduction_formula", [(h,) for h in graphs_up_to(max_vertices, connected=True)], bad)


def check_ratio_bound(max_vertices: int = 4) -> Check:
    pairs = [(g, h) for g in graphs_up_to(max_vertices, connected=True)
             for h in graphs_up_to(max_vertices, connected=True)]
    pairs += [(cycle(7), cycle(5)), (cycle(9), cycle(7))]

    def bad(g, h):
        rep = ratio_bound_check(g, h, relative(g, h))
        if not (rep["alpha_ok"] and rep["fractional_ok"]):
            return {"G": g, "H": h, **rep}
    return _first_failure("ratio_bound", pairs, bad)


def check_rosenfeld(max_vertices: int = 5) -> Check:
    perfect = [g for g in graphs_up_to(max_vertices) if is_perfect(g)]
    others = graphs_up_to(max_vertices)

    def bad(g, h):
        if independence_number(strong_product(g, h)) != independence_number(g) * independence_number(h):
            return {"G": g, "H": h}
    return _first_failure("rosenfeld_identity", [(g, h) for g in perfect for h in others], bad)


def check_perfect_graph_theorem(max_vertices: int = 7) -> Check:
    return _first_failure("perfect_graph_theorem", [(g,) for g in graphs_up_to(max_vertices)],
                          lambda g: None if is_perfect(g) == is_perfect(complement(g)) else {"G": g})


def check_clique_partition_lemma(max_vertices: int = 7) -> Check:
    def bad(g):
        blocks = clique_partition(g)
        cover = 0
        for b in blocks:
            if not g.is_clique(b) or cover & b:
                return {"G": g, "reason": "not a partition into cliques"}
            cover |= b
        if cover != g.full_mask or len(blocks) != independence_number(g):
            return {"G": g, "blocks": len(blocks), "alpha": independence_number(g)}
    return _first_failure("clique_partition_lemma",
                          [(g,) for g in graphs_up_to(max_vertices) if is_perfect(g)], bad)


def check_lp_sandwich(max_vertices: int = 7) -> Check:
    def bad(g):
        a, f = independence_number(g), fractional_packing(g)
        if a > f or (is_perfect(g) and a != f):
            return {"G": g, "alpha": a, "fractional": f}
    return _first_failure("alpha_le_fractional_eq_on_perfect", [(g,) for g in graphs_up_to(max_vertices)], bad)


def check_projection_independence(max_vertices: int = 4) -> Check:
    def bad(g, h):
        ind = max_independent_set(strong_product(g, h))
        for v in range(g.n):
            if not h.is_independent(projection(ind, v, "left", g.n, h.n)):
                return {"G": g, "H": h, "side": "left", "v": v}
        for v in range(h.n):
            if not g.is_independent(projection(ind, v, "right", g.n, h.n)):
                return {"G": g, "H": h, "side": "right", "v": v}
    gs = graphs_up_to(max_vertices)
    return _first_failure("projection_independence", [(g, h) for g in gs for h in gs], bad)


def check_expand_oracle(max_vertices: int = 5) -> Check:
    gs = graphs_up_to(max_vertices, connected=True)

    def bad(g, h):
        cert = is_in_expand(g, h)
        seq = expand_sequence_search(g, h, g.n + h.n)
        if (cert is None) != (seq is None):
            return {"G": g, "H": h, "labelmap": cert is not None, "sequence": seq is not None}
        if cert is not None and not (verify_certificate(g, h, cert) and verify_certificate(g, h, seq)):
            return {"G": g, "H": h, "reason": "certificate failed to verify"}
    return _first_failure("expand_oracle_agreement", [(g, h) for g in gs for h in gs], bad)


def check_conjecture_scan(max_vertices: int = 6, jobs: int = 1) -> Check:
    rep = conjecture_scan(max_vertices, jobs=jobs)
    bad = rep["critical_events"] or rep["triv_violations"] or rep["constructive_failures"]
    info = {k: rep[k] for k in ("pairs", "members", "below_one", "method_counts")}
    info["conjecture_candidates"] = len(rep["conjecture_candidates"])
    return Check("conjecture_scan", rep["passed"], rep["pairs"], info=info,
                 counterexample=bad[0].to_json() if bad else None)


def check_monotonicity(max_w: int = 4) -> Check:
    witnesses = graphs_up_to(max_w)
    cases = []
    for h in (cycle(5), path(4), cycle(4)):
        cases += [(h, RemoveVertex(v)) for v in range(h.n)]
        cases += [(h, AddEdge(u, v)) for u in range(h.n) for v in range(u + 1, h.n) if not h.adjacent(u, v)]
        cases += [(h, CliqueSubstitute(v, k)) for v in range(h.n) for k in (1, 2, 3)]

    def bad(h, op):
        rep = monotonicity_check(h, op, witnesses)
        if not rep["passed"]:
            return {"H": h, **rep}
    return _first_failure("expand_monotonicity", cases, bad)


def check_compact_witnesses(max_vertices: int = 5, max_den: int = 4, budget: int = 40) -> Check:
    cases = []
    for g in graphs_up_to(max_vertices, connected=True):
        lo, hi = independence_number(g), fractional_packing(g)
        targets = sorted({Fraction(p, q) for q in range(1, max_den + 1)
                          for p in range(lo * q, math.floor(hi * q) + 1)})
        cases += [(g, a) for a in targets]
    found = {}

    def bad(g, a):
        w = find_ratio_witness(g, a, budget)
        if w is None:
            return {"G": g, "a": a, "reason": "no witness within budget"}
        found[w.route] = found.get(w.route, 0) + 1
        if Fraction(independence_number(strong_product(g, w.graph)), independence_number(w.graph)) != a:
            return {"G": g, "a": a, "reason": "witness ratio mismatch"}
    chk = _first_failure("compact_ratio_witnesses", cases, bad)
    chk.info = dict(sorted(found.items()))
    return chk


# ---------------------------------------------------------------------------
# Generalized independence number
# ---------------------------------------------------------------------------

def check_alpha2_c5() -> Check:
    a2, _ = generalized_independence(cycle(5), 2)
    ok = a2 == 5 and 2 * independence_number(cycle(5)) == 4
    return Check("alpha2_C5_is_5", ok, 1, detail=f"α₂(C5) = {a2}, 2·α(C5) = {2 * independence_number(cycle(5))}")


def check_fractional_scaling(max_vertices: int = 7, ks=(1, 2, 3)) -> Check:
    cases = [(g, k) for g in graphs_up_to(max_vertices) for k in ks]
    return _first_failure("fractional_scaling", cases,
                          lambda g, k: None if generalized_fractional(g, k) == k * fractional_packing(g)
                          else {"G": g, "k": k})


def check_superadditivity(max_vertices: int = 6, max_k: int = 3) -> Check:
    def bad(g):
        a = {k: generalized_independence(g, k)[0] for k in range(1, 2 * max_k + 1)}
        for k1 in range(1, max_k + 1):
            for k2 in range(1, max_k + 1):
                if a[k1] + a[k2] > a[k1 + k2]:
                    return {"G": g, "k1": k1, "k2": k2}
    return _first_failure("superadditivity", [(g,) for g in graphs_up_to(max_vertices)], bad)


def check_generalized_sandwich(max_vertices: int = 6, max_k: int = 6) -> Check:
    def bad(g):
        a, f = independence_number(g), fractional_packing(g)
        for k in range(1, max_k + 1):
            ak = generalized_independence(g, k)[0]
            if not k * a <= ak <= k * f:
                return {"G": g, "k": k, "alpha_k": ak}
    return _first_failure("generalized_sandwich", [(g,) for g in graphs_up_to(max_vertices)], bad)


def check_product_inequality(max_vertices: int = 4, max_k: int = 2) -> Check:
    gs = graphs_up_to(max_vertices)

    def bad(g, w):
        f = fractional_packing(g)
        for k in range(1, max_k + 1):
            lhs = generalized_independence(strong_product(g, w), k)[0]
            if lhs > f * generalized_independence(w, k)[0]:
                return {"G": g, "W": w, "k": k}
    return _first_failure("product_inequality", [(g, w) for g in gs for w in gs], bad)


def check_hales(max_vertices: int = 6) -> Check:
    def bad(g):
        _, r = hales_witness(g)
        if r != fractional_packing(g):
            return {"G": g, "ratio": r}
    return _first_failure("hales_maximizer", [(g,) for g in graphs_up_to(max_vertices, connected=True)], bad)


def check_sup_ratio_generalized(max_vertices: int = 5, ks=(1, 2)) -> Check:
    """Upper side of sup_W αₖ(G⊠W)/αₖ(W) = α*(G) over candidate W; attainment is reported."""
    gs = graphs_up_to(max_vertices, connected=True)
    small = graphs_up_to(3)
    attained = {k: 0 for k in ks}
    witness_attained = {k: 0 for k in ks}

    def bad(g):
        f = fractional_packing(g)
        hw, _ = hales_witness(g)
        for k in ks:
            best = Fraction(0)
            for w in [hw, complement(g), *small]:
                r = Fraction(generalized_independence(strong_product(g, w), k)[0],
                             generalized_independence(w, k)[0])
                if r > f:
                    return {"G": g, "W": w, "k": k, "ratio": r}
                if w is hw and r == f:
                    witness_attained[k] += 1
                best = max(best, r)
            attained[k] += best == f
    chk = _first_failure("sup_ratio_generalized_upper", [(g,) for g in gs], bad)
    chk.info = {"graphs": len(gs),
                "attained_by_stated_witness": {str(k): v for k, v in witness_attained.items()},
                "attained_by_some_candidate": {str(k): v for k, v in attained.items()}}
    return chk


def check_one_n(max_vertices: int = 6) -> Check:
    def bad(g):
        big_n = scaling_denominator(g)
        if generalized_independence(g, big_n)[0] != big_n * fractional_packing(g):
            return {"G": g, "N": big_n}
    return _first_failure("scaling_attainment", [(g,) for g in graphs_up_to(max_vertices)], bad)


def check_collection(max_vertices: int = 5, samples: int = 60, seed: int = 0) -> Check:
    gs = graphs_up_to(max_vertices)
    rng = random.Random(seed)
    triples = [tuple(rng.sample(gs, 3)) for _ in range(samples)]

    def bad(*graphs):
        ns = [scaling_denominator(g) for g in graphs]
        for k in (math.lcm(*ns), math.prod(ns)):
            for g in graphs:
                if generalized_independence(g, k)[0] != k * fractional_packing(g):
                    return {"graphs": list(graphs), "k": k}
    return _first_failure("collection_scaling", triples, bad)


def check_limit_sandwich(max_vertices: int = 6, max_m: int = 12) -> Check:
    def bad(g):
        big_n, f = scaling_denominator(g), fractional_packing(g)
        for m in range(1, max_m + 1):
            am = generalized_independence(g, m)[0]
            if not (m - big_n) * f <= am <= m * f:
                return {"G": g, "M": m, "alpha_M": am, "N": big_n}
    return _first_failure("limit_sandwich", [(g,) for g in graphs_up_to(max_vertices)], bad)


def check_constraint_families(max_vertices: int = 5, max_k: int = 3) -> Check:
    def bad(g):
        for k in range(1, max_k + 1):
            if generalized_independence(g, k)[0] != generalized_independence(g, k, all_cliques(g))[0]:
                return {"G": g, "k": k}
    return _first_failure("clique_family_equivalence", [(g,) for g in graphs_up_to(max_vertices)], bad)


# ---------------------------------------------------------------------------
# Suites
# ---------------------------------------------------------------------------

def main_suite(jobs: int = 1, scan_vertices: int = 6, oracle_vertices: int = 5) -> list[Check]:
    return [
        check_cycle_table(),
        check_triangle_discrepancy(),
        check_parity_obstruction(),
        check_cycle_witness_sets(),
        check_reduction_formula(),
        check_ratio_bound(),
        check_rosenfeld(),
        check_perfect_graph_theorem(),
        check_clique_partition_lemma(),
        check_lp_sandwich(),
        check_projection_independence(),
        check_expand_oracle(oracle_vertices),
        check_conjecture_scan(scan_vertices, jobs),
        check_monotonicity(),
        check_compact_witnesses(),
    ]


def appendix_suite(seed: int = 0) -> list[Check]:
    return [
        check_alpha2_c5(),
        check_fractional_scaling(),
        check_superadditivity(),
        check_generalized_sandwich(),
        check_product_inequality(),
        check_hales(),
        check_sup_ratio_generalized(),
        check_one_n(),
        check_collection(seed=seed),
        check_limit_sandwich(),
        check_constraint_families(),
    ]


SUITES = ("main", "appendix", "all")


def run_suite(name: str, jobs: int = 1, seed: int = 0) -> list[Check]:
    if name == "main":
        return main_suite(jobs)
    if name == "appendix":
        return appendix_suite(seed)
    if name == "all":
        return main_suite(jobs) + appendix_suite(seed)
    raise ValueError(f"unknown suite {name!r}")
