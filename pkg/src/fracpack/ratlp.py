"""Exact rational simplex for ``max c·x  s.t.  Ax <= b, x >= 0`` with ``b >= 0``.

Dense tableau over :class:`fractions.Fraction`, Bland's least-index rule. Every solve
ends by checking a dual certificate, so a returned optimum is self-verified.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

from .graph import Graph, bits, maximal_cliques


class LPError(ArithmeticError):
    pass


class UnboundedLP(LPError):
    pass


class InfeasibleOrigin(LPError):
    """The origin violates a constraint; this solver has no phase one."""


class CertificateError(LPError):
    """The solver's own optimality certificate failed to verify (a solver bug)."""


@dataclass(frozen=True)
class LinearProgram:
    num_vars: int
    objective: tuple[Fraction, ...]
    constraints: tuple[tuple[tuple[Fraction, ...], Fraction], ...]

    def __post_init__(self):
        if len(self.objective) != self.num_vars:
            raise ValueError("objective length must equal num_vars")
        for coeffs, _ in self.constraints:
            if len(coeffs) != self.num_vars:
                raise ValueError("every constraint row must have num_vars coefficients")

    @classmethod
    def build(cls, objective: Sequence, constraints: Sequence[tuple[Sequence, object]]) -> LinearProgram:
        obj = tuple(Fraction(c) for c in objective)
        rows = tuple((tuple(Fraction(a) for a in coeffs), Fraction(rhs)) for coeffs, rhs in constraints)
        return cls(len(obj), obj, rows)


class LPSolution(NamedTuple):
    value: Fraction
    x: tuple[Fraction, ...]
    dual: tuple[Fraction, ...]


def simplex_max(lp: LinearProgram) -> LPSolution:
    n = lp.num_vars
    m = len(lp.constraints)
    for i, (_, rhs) in enumerate(lp.constraints):
        if rhs < 0:
            raise InfeasibleOrigin(f"constraint {i} has negative right-hand side {rhs}")

    zero = Fraction(0)
    # columns 0..n-1 structural, n..n+m-1 slack
    tab = []
    for i, (coeffs, rhs) in enumerate(lp.constraints):
        row = list(coeffs) + [zero] * m + [rhs]
        row[n + i] = Fraction(1)
        tab.append(row)
    # reduced costs c_j - z_j; objective value kept negated in the last slot
    cost = list(lp.objective) + [zero] * m + [zero]
    basis = [n + i for i in range(m)]

    while True:
        enter = next((j for j in range(n + m) if cost[j] > 0), None)
        if enter is None:
            break
        leave, best = None, None
        for i in range(m):
            a = tab[i][enter]
            if a > 0:
                ratio = tab[i][-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    leave, best = i, ratio
        if leave is None:
            raise UnboundedLP(f"variable {enter} can increase without bound")
        _pivot(tab, cost, leave, enter)
        basis[leave] = enter

    x = [zero] * (n + m)
    for i, j in enumerate(basis):
        x[j] = tab[i][-1]
    dual = tuple(-cost[n + i] for i in range(m))
    value = -cost[-1]
    sol = LPSolution(value, tuple(x[:n]), dual)
    verify_certificate(lp, sol)
    return sol


def _pivot(tab: list[list[Fraction]], cost: list[Fraction], r: int, c: int) -> None:
    prow = tab[r]
    piv = prow[c]
    if piv != 1:
        prow[:] = [a / piv for a in prow]
    nz = [j for j, a in enumerate(prow) if a]
    for i, row in enumerate(tab):
        if i != r:
            f = row[c]
            if f:
                for j in nz:
                    row[j] -= f * prow[j]
    f = cost[c]
    if f:
        for j in nz:
            cost[j] -= f * prow[j]


def verify_certificate(lp: LinearProgram, sol: LPSolution) -> None:
    """Primal feasibility, dual feasibility and equal objectives, all exact."""
    x, y = sol.x, sol.dual
    if any(v < 0 for v in x) or any(v < 0 for v in y):
        raise CertificateError("negative primal or dual component")
    for coeffs, rhs in lp.constraints:
        if sum(a * v for a, v in zip(coeffs, x)) > rhs:
            raise CertificateError("primal solution violates a constraint")
    for j in range(lp.num_vars):
        if sum(coeffs[j] * yi for (coeffs, _), yi in zip(lp.constraints, y)) < lp.objective[j]:
            raise CertificateError(f"dual constraint {j} violated")
    primal = sum(c * v for c, v in zip(lp.objective, x))
    dual = sum(rhs * yi for (_, rhs), yi in zip(lp.constraints, y))
    if not primal == dual == sol.value:
        raise CertificateError(f"objective mismatch: primal {primal}, dual {dual}, reported {sol.value}")


def lp_from_cliques(g: Graph, k: int = 1, cliques: Sequence[int] | None = None) -> LinearProgram:
    """Maximise the total weight with at most ``k`` on every maximal clique."""
    if k < 1:
        raise ValueError("k must be positive")
    if cliques is None:
        cliques = maximal_cliques(g)
    one, zero = Fraction(1), Fraction(0)
    rows = []
    for c in cliques:
        coeffs = [zero] * g.n
        for v in bits(c):
            coeffs[v] = one
        rows.append((tuple(coeffs), Fraction(k)))
    return LinearProgram(g.n, (one,) * g.n, tuple(rows))
