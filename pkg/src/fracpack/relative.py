"""The relative fractional packing number α*(G|H) = sup_W α(G⊠W) / α(H⊠W).

Exact values come from three closed forms (perfect G, vertex-transitive G, two cycles).
Anything else gets a certified interval: the lower end is an explicit witness ratio, the
upper end is α*(G)/α(H).
"""

from __future__ import annotations

import logging
from math import gcd
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterator

from .formats import emit_graph6
from .graph import (
    Graph, GraphSizeError, blowup, complement, complete, cycle, cycle_length, disjoint_union,
    empty, graphs_up_to, is_perfect, is_vertex_transitive, mask_of, strong_product,
)
from .invariants import (
    InconsistencyError, fractional_packing, fractional_solution, independence_number,
    scaling_denominator,
)

log = logging.getLogger(__name__)

VERTEX_TRANSITIVE = "vertex-transitive-exact"
PERFECT = "perfect-exact"
CYCLE_FORMULA = "cycle-formula-exact"
BOUNDS = "bounds"

# products larger than this are not used for optional cross-checks
CROSS_CHECK_LIMIT = 400


class PreconditionError(ValueError):
    pass


@dataclass
class RelativeResult:
    method: str
    lower: Fraction
    upper: Fraction
    value: Fraction | None = None
    lower_witness: Graph | None = None
    skipped: int = 0
    cross_checks: dict[str, Fraction] = field(default_factory=dict)
    interval: RelativeResult | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def exact(self) -> bool:
        return self.value is not None

    def to_json(self) -> dict:
        out = {"method": self.method, "lower": self.lower, "upper": self.upper}
        if self.value is not None:
            out["value"] = self.value
        if self.lower_witness is not None:
            out["witness"] = self.lower_witness
            out["skipped"] = self.skipped
        if self.cross_checks:
            out["cross_checks"] = self.cross_checks
        if self.interval is not None:
            out["interval"] = self.interval
        if self.notes:
            out["notes"] = self.notes
        return out


def _exact(method: str, value: Fraction) -> RelativeResult:
    return RelativeResult(method, value, value, value)


def ratio(g: Graph, h: Graph, w: Graph) -> Fraction:
    """α(G⊠W) / α(H⊠W)."""
    return Fraction(independence_number(strong_product(g, w)), independence_number(strong_product(h, w)))


# ---------------------------------------------------------------------------
# Closed forms
# ---------------------------------------------------------------------------

def relative_vertex_transitive(g: Graph, h: Graph, check: bool = True) -> Fraction:
    if check and not is_vertex_transitive(g):
        raise PreconditionError("G is not vertex-transitive")
    return Fraction(g.n, independence_number(strong_product(complement(g), h)))


def relative_perfect(g: Graph, h: Graph, check: bool = True) -> Fraction:
    if check and not is_perfect(g):
        raise PreconditionError("G is not perfect")
    return Fraction(independence_number(g), independence_number(h))


def printed_cycle_formula(n: int, m: int) -> Fraction:
    """The four-case cycle formula evaluated without a domain check (also at n = 3)."""
    if m % 2 == 0:
        return Fraction(n, m)
    if n % 2 == 0:
        return Fraction(n, m - 1)
    return Fraction(n, m) if n <= m else Fraction(n, m - 1)


def cycle_formula(n: int, m: int) -> Fraction:
    """α*(C_n | C_m) for n >= 4, m >= 3.

    The second case is read as "n even, m odd". At n = 3 the closed form is wrong
    (α(C_3ᶜ) = 3, not 2); C_3 = K_3 is perfect, use :func:`relative_perfect`.
    """
    if n == 3:
        raise ValueError("cycle formula does not hold for n = 3; C3 is perfect, use relative_perfect")
    if n < 3 or m < 3:
        raise ValueError(f"cycles need at least 3 vertices (n={n}, m={m})")
    return printed_cycle_formula(n, m)


def cycle_witness_set(n: int, m: int) -> int:
    """An independent set of size m in C_nᶜ ⊠ C_m, for odd 5 <= n <= m.

    Diagonal pairs (u_i, v_i) for i <= n, then u_1, u_2, u_1, ... paired with v_{n+1}..v_m.
    Vertex (u, v) sits at index u * m + v.
    """
    if n % 2 == 0 or m % 2 == 0 or not 5 <= n <= m:
        raise PreconditionError(f"need odd 5 <= n <= m, got n={n}, m={m}")
    pairs = [(i, i) for i in range(n)]
    pairs += [((j - n) % 2, j) for j in range(n, m)]
    return mask_of(u * m + v for u, v in pairs)


def parity_obstruction_check(n: int, m: int) -> bool:
    """Brute-force confirmation that α(C_nᶜ ⊠ C_m) = m - 1 for odd m < n."""
    if n % 2 == 0 or m % 2 == 0 or not 3 <= m < n:
        raise PreconditionError(f"need odd 3 <= m < n, got n={n}, m={m}")
    return independence_number(strong_product(complement(cycle(n)), cycle(m))) == m - 1


@dataclass
class CycleRow:
    n: int
    m: int
    formula: Fraction
    brute_force: Fraction
    agree: bool
    flagged: bool
    perfect_formula: Fraction | None = None

    def to_json(self) -> dict:
        out = {"n": self.n, "m": self.m, "f": self.formula, "brute_force": self.brute_force,
               "agree": self.agree, "flagged": self.flagged,
               "graphs": [emit_graph6(cycle(self.n)), emit_graph6(cycle(self.m))]}
        if self.perfect_formula is not None:
            out["perfect_formula"] = self.perfect_formula
        return out


def cycle_table(max_n: int, include_triangle: bool = True) -> list[CycleRow]:
    """f(n, m) against n / α(C_nᶜ ⊠ C_m) for 3 <= m <= max_n and n from 4 (or 3)."""
    if max_n > 9:
        raise ValueError("cycle table is limited to max_n <= 9")
    rows = []
    for n in range(3 if include_triangle else 4, max_n + 1):
        for m in range(3, max_n + 1):
            brute = relative_vertex_transitive(cycle(n), cycle(m), check=False)
            if n == 3:
                printed = printed_cycle_formula(n, m)
                perfect = relative_perfect(cycle(3), cycle(m), check=False)
                rows.append(CycleRow(n, m, printed, brute, printed == brute, True, perfect))
            else:
                f = cycle_formula(n, m)
                rows.append(CycleRow(n, m, f, brute, f == brute, f != brute))
    return rows


# ---------------------------------------------------------------------------
# Witnesses
# ---------------------------------------------------------------------------

def lp_multiplicities(g: Graph) -> list[int]:
    """The α* optimal solution scaled by the lcm of its denominators."""
    big_n = scaling_denominator(g)
    return [int(x * big_n) for x in fractional_solution(g).x]


def hales_witness(g: Graph) -> tuple[Graph, Fraction]:
    """W = Gᶜ blown up by the scaled LP solution, and α(G⊠W)/α(W) (asserted = α*(G))."""
    w = blowup(complement(g), lp_multiplicities(g))
    r = Fraction(independence_number(strong_product(g, w)), independence_number(w))
    if r != fractional_packing(g):
        raise InconsistencyError(f"Hales witness ratio {r} differs from α*(G) = {fractional_packing(g)}")
    return w, r


def _enumerated_witnesses(limit: int, max_vertices: int = 7) -> Iterator[Graph]:
    count = 0
    for n in range(1, max_vertices + 1):
        for w in sorted(graphs_up_to(n, connected=True, min_n=n), key=emit_graph6):
            if count >= limit:
                return
            count += 1
            yield w


def witness_candidates(g: Graph, h: Graph, budget: int) -> Iterator[Graph]:
    yield complete(1)
    yield complement(g)
    yield complement(h)
    mult = lp_multiplicities(g)
    yield blowup(complement(g), mult)
    yield complement(blowup(g, mult))
    yield from _enumerated_witnesses(budget)


def relative_bounds(g: Graph, h: Graph, budget: int = 0) -> RelativeResult:
    """Certified interval for α*(G|H).

    The upper end uses α(G⊠W) <= α*(G)·α(W) and α(H⊠W) >= α(H)·α(W). The lower end is the
    best ratio among K1, Gᶜ, Hᶜ, the LP-scaled blowups and the first ``budget``
    connected graphs (by vertex count, then graph6 order).
    """
    upper = fractional_packing(g) / independence_number(h)
    best, best_w, skipped = None, None, 0
    for w in witness_candidates(g, h, budget):
        try:
            r = ratio(g, h, w)
        except GraphSizeError:
            skipped += 1
            continue
        if r > upper:
            raise InconsistencyError(f"witness ratio {r} exceeds the upper bound {upper}")
        if best is None or r > best:
            best, best_w = r, w
    res = RelativeResult(BOUNDS, best, upper, lower_witness=best_w, skipped=skipped)
    if best == upper:
        res.value = best
    return res


def _cross_check_product_ok(g: Graph, h: Graph) -> bool:
    return g.n * h.n <= CROSS_CHECK_LIMIT


def relative(g: Graph, h: Graph, budget: int | None = None) -> RelativeResult:
    """α*(G|H): exact through a closed form when one applies, otherwise an interval.

    Routes are tried perfect → cycles → vertex-transitive → bounds; every other closed form
    that also applies is evaluated and must agree. With ``budget`` set, the witness
    interval is attached as well.
    """
    checks: dict[str, Fraction] = {}
    notes: list[str] = []
    n_cyc, m_cyc = cycle_length(g), cycle_length(h)
    both_cycles = n_cyc is not None and m_cyc is not None
    perfect = g.n <= 64 and is_perfect(g)
    if perfect:
        checks[PERFECT] = relative_perfect(g, h, check=False)
    if both_cycles:
        if n_cyc >= 4:
            checks[CYCLE_FORMULA] = cycle_formula(n_cyc, m_cyc)
        else:
            notes.append(f"printed cycle formula gives {printed_cycle_formula(n_cyc, m_cyc)} at n=3; "
                         "not applicable, C3 is perfect")
    vt_needed = not checks
    if vt_needed or _cross_check_product_ok(g, h):
        if (both_cycles or is_vertex_transitive(g)):
            checks[VERTEX_TRANSITIVE] = relative_vertex_transitive(g, h, check=False)
    if checks:
        method = next(m for m in (PERFECT, CYCLE_FORMULA, VERTEX_TRANSITIVE) if m in checks)
        values = set(checks.values())
        if len(values) > 1:
            raise InconsistencyError(f"closed forms disagree: {checks}")
        res = _exact(method, checks[method])
        res.cross_checks = checks
    else:
        res = relative_bounds(g, h, budget or 0)
    res.notes.extend(notes)
    if budget is not None and res.method != BOUNDS:
        res.interval = relative_bounds(g, h, budget)
        if not res.interval.lower <= res.value <= res.interval.upper:
            raise InconsistencyError(f"exact value {res.value} outside interval "
                                     f"[{res.interval.lower}, {res.interval.upper}]")
    return res


def ratio_bound_check(g: Graph, h: Graph, result: RelativeResult | None = None) -> dict:
    """α(G)/α(H) and α*(G)/α*(H) must not exceed α*(G|H) (or its upper bound)."""
    if result is None:
        result = relative(g, h)
    upper = result.value if result.exact else result.upper
    alpha_ratio = Fraction(independence_number(g), independence_number(h))
    frac_ratio = fractional_packing(g) / fractional_packing(h)
    return {
        "upper": upper,
        "alpha_ratio": alpha_ratio,
        "alpha_ok": alpha_ratio <= upper,
        "fractional_ratio": frac_ratio,
        "fractional_ok": frac_ratio <= upper,
    }


# ---------------------------------------------------------------------------
# Intermediate ratios
# ---------------------------------------------------------------------------

@dataclass
class RatioWitness:
    graph: Graph
    ratio: Fraction
    route: str


def _self_ratio(g: Graph, w: Graph) -> Fraction:
    return Fraction(independence_number(strong_product(g, w)), independence_number(w))


def find_ratio_witness(g: Graph, a: Fraction, budget: int = 12) -> RatioWitness | None:
    """Search for W with α(G⊠W)/α(W) = a exactly, using graphs of at most ``budget`` vertices.

    Tried in order: K1 and the Hales witness at the endpoints, induced subgraphs of Gᶜ
    (clique multiplicities never change either α, so supports are all that matter), small
    connected graphs, and finally a disjoint union of K1's with copies of the Hales
    witness, whose ratio is the mediant of the two endpoint ratios.
    """
    a = Fraction(a)
    lo, hi = Fraction(independence_number(g)), fractional_packing(g)
    if not lo <= a <= hi:
        raise PreconditionError(f"a = {a} outside [α(G), α*(G)] = [{lo}, {hi}]")
    if a == lo:
        return RatioWitness(complete(1), lo, "single-vertex")
    hw, _ = hales_witness(g)
    if a == hi and hw.n <= budget:
        return RatioWitness(hw, hi, "hales")

    gc = complement(g)
    for size in range(1, min(g.n, budget) + 1):
        for support in combinations(range(g.n), size):
            w = gc.induced(list(support))
            if _self_ratio(g, w) == a:
                return RatioWitness(w, a, "complement-blowup")

    for w in _enumerated_witnesses(10 ** 9, max_vertices=min(budget, 6)):
        if _self_ratio(g, w) == a:
            return RatioWitness(w, a, "small-graph")

    # (s·α + t·P) / (s + t·Q) = a with P/Q the Hales ratio numerator/denominator
    p_num = independence_number(strong_product(g, hw))
    q_den = independence_number(hw)
    s = a.denominator * p_num - a.numerator * q_den
    t = a.numerator - a.denominator * int(lo)
    d = gcd(s, t)
    s, t = s // d, t // d
    if s + t * hw.n <= budget:
        w = disjoint_union(empty(s), *([hw] * t))
        r = _self_ratio(g, w)
        if r != a:
            raise InconsistencyError(f"mediant construction gave {r}, expected {a}")
        return RatioWitness(w, a, "disjoint-union")
    return None
