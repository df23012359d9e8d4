"""Exact independence-type invariants: α, α*, αₖ, α*ₖ and minimum clique partitions."""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .graph import Graph, GraphSizeError, bits, maximal_cliques
from .ratlp import LPSolution, lp_from_cliques, simplex_max


class InconsistencyError(AssertionError):
    """Two independent computations of the same quantity disagreed."""


# ---------------------------------------------------------------------------
# Independence number
# ---------------------------------------------------------------------------

def _clique_cover_size(rows: tuple[int, ...], p: int) -> int:
    """Greedy partition of ``p`` into cliques; the block count bounds α(G[p])."""
    count = 0
    while p:
        low = p & -p
        cand = p & rows[low.bit_length() - 1]
        block = low
        while cand:
            u = cand & -cand
            block |= u
            cand &= rows[u.bit_length() - 1]
        p &= ~block
        count += 1
    return count


def max_independent_set(g: Graph) -> int:
    """A maximum independent set as a bitset, by branch and bound."""
    rows = g.rows
    best_size = 0
    best_mask = 0

    def rec(p: int, cur: int, size: int) -> None:
        nonlocal best_size, best_mask
        # vertices of degree <= 1 inside p can always be taken
        changed = True
        while changed and p:
            changed = False
            for v in bits(p):
                if (rows[v] & p).bit_count() <= 1:
                    cur |= 1 << v
                    size += 1
                    p &= ~(rows[v] | 1 << v)
                    changed = True
                    break
        if not p:
            if size > best_size:
                best_size, best_mask = size, cur
            return
        if size + _clique_cover_size(rows, p) <= best_size:
            return
        v = max(bits(p), key=lambda u: ((rows[u] & p).bit_count(), -u))
        rec(p & ~(rows[v] | 1 << v), cur | 1 << v, size + 1)
        rec(p & ~(1 << v), cur, size)

    rec(g.full_mask, 0, 0)
    return best_mask


@lru_cache(maxsize=4096)
def independence_number(g: Graph) -> int:
    return max_independent_set(g).bit_count()


# ---------------------------------------------------------------------------
# Fractional packing
# ---------------------------------------------------------------------------

@lru_cache(maxsize=4096)
def fractional_solution(g: Graph) -> LPSolution:
    """Optimal basic solution of the clique-constrained LP (deterministic)."""
    return simplex_max(lp_from_cliques(g, 1))


def fractional_packing(g: Graph) -> Fraction:
    return fractional_solution(g).value


def generalized_fractional(g: Graph, k: int) -> Fraction:
    direct = simplex_max(lp_from_cliques(g, k)).value
    scaled = k * fractional_packing(g)
    if direct != scaled:
        raise InconsistencyError(f"LP with rhs {k} gave {direct}, but {k}·α* = {scaled}")
    return direct


def scaling_denominator(g: Graph) -> int:
    """lcm of the denominators of the deterministic optimal α* solution."""
    return math.lcm(*(x.denominator for x in fractional_solution(g).x)) if g.n else 1


# ---------------------------------------------------------------------------
# Generalized independence number
# ---------------------------------------------------------------------------

def generalized_independence(g: Graph, k: int, cliques: list[int] | None = None) -> tuple[int, tuple[int, ...]]:
    """αₖ(G) and an optimal multiplicity vector.

    Integer weights with at most ``k`` on each clique in ``cliques`` (default: the maximal
    cliques). Depth-first branch and bound, vertices by decreasing degree, multiplicities
    high to low; bounds are a capacity-aware clique cover and ⌊k·α*(residual)⌋.
    """
    if k < 1:
        raise ValueError("k must be positive")
    n = g.n
    if n == 0:
        return 0, ()
    if cliques is None:
        cliques = maximal_cliques(g)
    order = sorted(range(n), key=lambda v: (-g.degree(v), v))
    member = [[c for c, cl in enumerate(cliques) if cl >> v & 1] for v in range(n)]
    cap = [k] * len(cliques)
    x = [0] * n
    suffix = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = suffix[i + 1] | 1 << order[i]

    global_ub = math.floor(k * fractional_packing(g))
    # incumbent: k copies of a maximum independent set
    mis = max_independent_set(g)
    best_val = k * mis.bit_count()
    best_x = [k if mis >> v & 1 else 0 for v in range(n)]

    lp_memo: dict[int, int] = {}

    def lp_bound(rest: int) -> int:
        if rest not in lp_memo:
            lp_memo[rest] = math.floor(k * fractional_packing(g.induced(list(bits(rest)))))
        return lp_memo[rest]

    def cover_bound(rest: int) -> int:
        total = 0
        while rest:
            v = (rest & -rest).bit_length() - 1
            c = min(member[v], key=lambda c: (Fraction(cap[c], (cliques[c] & rest).bit_count()), c))
            total += cap[c]
            rest &= ~cliques[c]
        return total

    def rec(i: int, cur: int) -> None:
        nonlocal best_val, best_x
        if best_val == global_ub:
            return
        if i == n:
            if cur > best_val:
                best_val, best_x = cur, x.copy()
            return
        rest = suffix[i]
        if cur + cover_bound(rest) <= best_val:
            return
        if cur + lp_bound(rest) <= best_val:
            return
        v = order[i]
        hi = min(cap[c] for c in member[v])
        for val in range(hi, -1, -1):
            x[v] = val
            for c in member[v]:
                cap[c] -= val
            rec(i + 1, cur + val)
            for c in member[v]:
                cap[c] += val
        x[v] = 0

    rec(0, 0)
    return best_val, tuple(best_x)


# ---------------------------------------------------------------------------
# Minimum clique partition
# ---------------------------------------------------------------------------

CLIQUE_PARTITION_GUARD = 20


def clique_partition(g: Graph) -> list[int]:
    """A minimum partition of V(G) into cliques (a minimum colouring of the complement)."""
    if g.n > CLIQUE_PARTITION_GUARD:
        raise GraphSizeError(f"exact clique partition limited to {CLIQUE_PARTITION_GUARD} vertices")
    n = g.n
    if n == 0:
        return []
    rows = g.rows
    order = sorted(range(n), key=lambda v: (g.degree(v), v))
    lower = independence_number(g)
    best: list[int] = []
    blocks: list[int] = []
    # greedy start
    for v in order:
        for i, b in enumerate(blocks):
            if rows[v] & b == b:
                blocks[i] |= 1 << v
                break
        else:
            blocks.append(1 << v)
    best = blocks.copy()
    blocks = []

    def rec(i: int) -> None:
        nonlocal best
        if len(best) == lower or len(blocks) >= len(best):
            return
        if i == n:
            best = blocks.copy()
            return
        v = order[i]
        for j, b in enumerate(blocks):
            if rows[v] & b == b:
                blocks[j] |= 1 << v
                rec(i + 1)
                blocks[j] &= ~(1 << v)
        blocks.append(1 << v)
        rec(i + 1)
        blocks.pop()

    rec(0)
    return sorted(best, key=lambda b: list(bits(b)))


def all_cliques(g: Graph) -> list[int]:
    """Every nonempty clique (exponential; for small cross-checks only)."""
    out = []

    def rec(clique: int, cand: int) -> None:
        for v in bits(cand):
            c = clique | 1 << v
            out.append(c)
            rec(c, cand & g.rows[v] & ~((1 << (v + 1)) - 1))

    rec(0, g.full_mask)
    return out

