"""Expand(H): graphs reachable from H by vertex deletion, edge addition and clique substitution.

Membership is decided through a label map φ: V(G) → V(H) such that
  (a) φ(u) = φ(v), u ≠ v  ⇒  uv ∈ E(G)
  (b) φ(u)φ(v) ∈ E(H)     ⇒  uv ∈ E(G)
i.e. a homomorphism Gᶜ → Hᶜ. An explicit operation-sequence search is kept as an
independent oracle for that normal form.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence, Union

from .graph import (
    Graph, bits, canonical_form, complement, cycle_length, find_isomorphism, graphs_up_to,
    is_perfect, is_vertex_transitive, projection, strong_product,
)
from .invariants import clique_partition, independence_number, max_independent_set

log = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RemoveVertex:
    v: int


@dataclass(frozen=True)
class AddEdge:
    u: int
    v: int


@dataclass(frozen=True)
class CliqueSubstitute:
    v: int
    k: int


ExpandOperation = Union[RemoveVertex, AddEdge, CliqueSubstitute]


def op_to_json(op: ExpandOperation) -> dict:
    if isinstance(op, RemoveVertex):
        return {"op": "remove_vertex", "v": op.v}
    if isinstance(op, AddEdge):
        return {"op": "add_edge", "u": op.u, "v": op.v}
    return {"op": "clique_substitute", "v": op.v, "k": op.k}


def apply_operation(g: Graph, op: ExpandOperation) -> Graph:
    """Apply one operation.

    RemoveVertex shifts higher indices down by one. CliqueSubstitute(v, k) keeps v in place
    and appends k - 1 new copies adjacent to v, to each other and to all neighbours of v.
    Labels, when present, follow their vertices; copies inherit the label of v.
    """
    if isinstance(op, RemoveVertex):
        _check_vertex(g, op.v)
        keep = [u for u in range(g.n) if u != op.v]
        return g.induced(keep)
    if isinstance(op, AddEdge):
        _check_vertex(g, op.u)
        _check_vertex(g, op.v)
        if op.u == op.v:
            raise ValueError("cannot add a loop")
        if g.adjacent(op.u, op.v):
            raise ValueError(f"edge ({op.u}, {op.v}) already present")
        rows = list(g.rows)
        rows[op.u] |= 1 << op.v
        rows[op.v] |= 1 << op.u
        return Graph(g.n, tuple(rows), g.labels)
    if isinstance(op, CliqueSubstitute):
        _check_vertex(g, op.v)
        if op.k < 1:
            raise ValueError("clique size must be positive")
        n, extra = g.n, op.k - 1
        group = 1 << op.v | (((1 << extra) - 1) << n)
        nbrs = g.rows[op.v]
        rows = list(g.rows) + [0] * extra
        for u in bits(nbrs):
            rows[u] |= group
        for w in bits(group):
            rows[w] = (nbrs | group) & ~(1 << w)
        labels = None if g.labels is None else g.labels + (g.labels[op.v],) * extra
        return Graph(n + extra, tuple(rows), labels)
    raise TypeError(f"unknown operation {op!r}")


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise IndexError(f"vertex {v} out of range for a graph on {g.n} vertices")


def merge_operations(g: Graph, u: int, v: int) -> list[ExpandOperation]:
    """Contract v into u: delete v, then join u to v's former neighbours."""
    _check_vertex(g, u)
    _check_vertex(g, v)
    if u == v:
        raise ValueError("merging needs two distinct vertices")
    shift = lambda w: w - (w > v)  # noqa: E731
    ops: list[ExpandOperation] = [RemoveVertex(v)]
    for w in bits(g.rows[v] & ~g.rows[u] & ~(1 << u)):
        ops.append(AddEdge(shift(u), shift(w)))
    return ops


def merge_vertices(g: Graph, u: int, v: int) -> Graph:
    return replay(g, merge_operations(g, u, v))


def replay(g: Graph, ops: Sequence[ExpandOperation]) -> Graph:
    for op in ops:
        g = apply_operation(g, op)
    return g


# ---------------------------------------------------------------------------
# Certificates
# ---------------------------------------------------------------------------

@dataclass
class ExpandCertificate:
    kind: str  # "sequence" or "labelmap"
    sequence: list[ExpandOperation] = field(default_factory=list)
    phi: tuple[int, ...] | None = None
    # for sequences: mapping[i] is the vertex of G that vertex i of the replayed graph is
    mapping: tuple[int, ...] | None = None

    def to_json(self) -> dict:
        if self.kind == "labelmap":
            return {"kind": "labelmap", "phi": list(self.phi)}
        out = {"kind": "sequence", "operations": [op_to_json(op) for op in self.sequence]}
        if self.mapping is not None:
            out["mapping"] = list(self.mapping)
        return out


def check_labelmap(g: Graph, h: Graph, phi: Sequence[int]) -> bool:
    if len(phi) != g.n or any(not 0 <= x < h.n for x in phi):
        return False
    for u, v in combinations(range(g.n), 2):
        if not g.adjacent(u, v):
            if phi[u] == phi[v] or h.adjacent(phi[u], phi[v]):
                return False
    return True


def verify_certificate(g: Graph, h: Graph, cert: ExpandCertificate) -> bool:
    """Replay a sequence (exact mapping if recorded, else isomorphism) or check a label map."""
    if cert.kind == "labelmap":
        return cert.phi is not None and check_labelmap(g, h, cert.phi)
    out = replay(h, cert.sequence)
    if out.n != g.n:
        return False
    if cert.mapping is None:
        return find_isomorphism(out, g) is not None
    if sorted(cert.mapping) != list(range(g.n)):
        return False
    return out.relabel(cert.mapping) == g


class _Builder:
    """Replays operations on a working graph while tracking a tag per vertex."""

    def __init__(self, h: Graph, tags: list):
        self.g = h
        self.tags = list(tags)
        self.ops: list[ExpandOperation] = []

    def apply(self, op: ExpandOperation) -> None:
        self.g = apply_operation(self.g, op)
        self.ops.append(op)
        if isinstance(op, RemoveVertex):
            del self.tags[op.v]
        elif isinstance(op, CliqueSubstitute):
            self.tags.extend([self.tags[op.v]] * (op.k - 1))

    def remove_all(self, vertices) -> None:
        for v in sorted(vertices, reverse=True):
            self.apply(RemoveVertex(v))

    def merge(self, u: int, v: int) -> None:
        for op in merge_operations(self.g, u, v):
            self.apply(op)

    def complete_to(self, target: Graph, mapping: Sequence[int]) -> None:
        """Add every edge of ``target`` missing under ``mapping`` (work vertex -> target vertex)."""
        inv = {t: i for i, t in enumerate(mapping)}
        for a, b in target.edges():
            i, j = inv[a], inv[b]
            if not self.g.adjacent(i, j):
                self.apply(AddEdge(min(i, j), max(i, j)))


def labelmap_to_sequence(g: Graph, h: Graph, phi: Sequence[int]) -> ExpandCertificate:
    """Turn a label map into an explicit operation sequence replaying H into G."""
    fibres = [[u for u in range(g.n) if phi[u] == v] for v in range(h.n)]
    b = _Builder(h, list(range(h.n)))
    b.remove_all(v for v in range(h.n) if not fibres[v])
    for i in range(b.g.n):
        src = b.tags[i]
        if len(fibres[src]) > 1:
            b.apply(CliqueSubstitute(i, len(fibres[src])))
    used = {v: iter(fibres[v]) for v in range(h.n)}
    mapping = [next(used[src]) for src in b.tags]
    bad = [(i, j) for i, j in b.g.edges() if not g.adjacent(mapping[i], mapping[j])]
    if bad:
        raise ValueError(f"label map violates the membership conditions at {bad[0]}")
    b.complete_to(g, mapping)
    return ExpandCertificate("sequence", b.ops, mapping=tuple(mapping))


# ---------------------------------------------------------------------------
# Membership via label maps
# ---------------------------------------------------------------------------

def is_in_expand(g: Graph, h: Graph) -> ExpandCertificate | None:
    """A label map certifying G ∈ Expand(H), or None if there is none.

    Backtracking over a homomorphism Gᶜ → Hᶜ with forward checking on bitset domains.
    """
    if g.n == 0:
        return ExpandCertificate("labelmap", phi=())
    if h.n == 0:
        return None
    gc, hc = complement(g), complement(h)
    domains = [h.full_mask] * g.n
    phi = [-1] * g.n

    def rec(domains: list[int], left: int) -> bool:
        if not left:
            return True
        # most constrained unassigned vertex, ties to most non-neighbours then least index
        u = min(bits(left), key=lambda x: (domains[x].bit_count(), -gc.degree(x), x))
        for w in bits(domains[u]):
            new = list(domains)
            ok = True
            for x in bits(gc.rows[u] & left):
                new[x] &= hc.rows[w]
                if not new[x]:
                    ok = False
                    break
            if ok:
                phi[u] = w
                if rec(new, left & ~(1 << u)):
                    return True
        phi[u] = -1
        return False

    if not rec(domains, g.full_mask):
        return None
    return ExpandCertificate("labelmap", phi=tuple(phi))


# ---------------------------------------------------------------------------
# Operation-sequence search (the independent oracle)
# ---------------------------------------------------------------------------

def _spanning_embedding(b: Graph, g: Graph) -> list[int] | None:
    """A bijection π: V(B) → V(G) carrying every edge of B onto an edge of G."""
    if b.n != g.n or b.edge_count() > g.edge_count():
        return None
    n = b.n
    order = sorted(range(n), key=lambda v: (-b.degree(v), v))
    pi = [-1] * n

    def rec(i: int, used: int) -> bool:
        if i == n:
            return True
        v = order[i]
        need = b.degree(v)
        for w in range(n):
            if used >> w & 1 or g.degree(w) < need:
                continue
            if all(g.adjacent(w, pi[u]) for u in bits(b.rows[v]) if pi[u] >= 0):
                pi[v] = w
                if rec(i + 1, used | 1 << w):
                    return True
                pi[v] = -1
        return False

    return pi if rec(0, 0) else None


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def expand_sequence_search(g: Graph, h: Graph, size_bound: int | None = None,
                           strategy: str = "staged") -> ExpandCertificate | None:
    """Search for an explicit operation sequence turning H into (a copy of) G.

    ``strategy="bfs"`` explores every graph reachable from H with at most ``size_bound``
    vertices, deduplicated by canonical form. ``strategy="staged"`` searches sequences of
    the form deletions, then substitutions, then edge additions; any bounded sequence can
    be rewritten into that shape (deletions commute to the front, edge additions to the
    back, substituting a copy merges into one substitution) without raising its peak
    size, so both strategies decide the same bounded question.
    """
    if size_bound is None:
        size_bound = g.n + h.n
    if size_bound < max(g.n, h.n):
        return None
    if strategy == "bfs":
        return _bfs_search(g, h, size_bound)
    if strategy != "staged":
        raise ValueError(f"unknown strategy {strategy!r}")
    if g.n == 0:
        return ExpandCertificate("sequence", [RemoveVertex(0)] * h.n, mapping=())
    seen_sub: set = set()
    # largest kept sets first, so substitutions are used only when needed
    for size in range(min(h.n, g.n), 0, -1):
        for keep in combinations(range(h.n), size):
            sub = h.induced(list(keep))
            key = canonical_form(sub)
            if key in seen_sub:
                continue
            seen_sub.add(key)
            seen_blow: set = set()
            for mult in _compositions(g.n, size):
                b = _Builder(h, list(range(h.n)))
                b.remove_all(v for v in range(h.n) if v not in keep)
                for i, k in enumerate(mult):
                    if k > 1:
                        b.apply(CliqueSubstitute(i, k))
                bkey = canonical_form(b.g)
                if bkey in seen_blow:
                    continue
                seen_blow.add(bkey)
                pi = _spanning_embedding(b.g, g)
                if pi is not None:
                    b.complete_to(g, pi)
                    return ExpandCertificate("sequence", b.ops, mapping=tuple(pi))
    return None


def _bfs_search(g: Graph, h: Graph, size_bound: int) -> ExpandCertificate | None:
    target_key = canonical_form(g)
    target_alpha = independence_number(g)
    start_key = canonical_form(h)
    parent: dict = {start_key: (None, None, h)}
    queue = deque([start_key])
    while queue:
        key = queue.popleft()
        cur = parent[key][2]
        if key == target_key:
            ops = []
            while parent[key][0] is not None:
                prev, op, _ = parent[key]
                ops.append(op)
                key = prev
            ops.reverse()
            mapping = find_isomorphism(replay(h, ops), g)
            return ExpandCertificate("sequence", ops, mapping=tuple(mapping))
        succ: list[ExpandOperation] = [RemoveVertex(v) for v in range(cur.n)]
        succ += [AddEdge(u, v) for u, v in combinations(range(cur.n), 2) if not cur.adjacent(u, v)]
        succ += [CliqueSubstitute(v, k) for v in range(cur.n) for k in range(2, size_bound - cur.n + 2)]
        for op in succ:
            nxt = apply_operation(cur, op)
            # none of the operations can raise α, so states below α(G) are dead ends
            if nxt.n > size_bound or independence_number(nxt) < target_alpha:
                continue
            nkey = canonical_form(nxt)
            if nkey not in parent:
                parent[nkey] = (key, op, nxt)
                queue.append(nkey)
    return None


# ---------------------------------------------------------------------------
# Constructive certificates from projections
# ---------------------------------------------------------------------------

@dataclass
class ProjectionOutcome:
    certificate: ExpandCertificate | None
    route: str
    case: str | None = None
    diagnostic: str = ""

    def to_json(self) -> dict:
        return {"route": self.route, "case": self.case, "diagnostic": self.diagnostic,
                "certificate": self.certificate}


def _cycle_order(g: Graph, start: int) -> list[int]:
    order, prev, cur = [start], -1, start
    while len(order) < g.n:
        nxt = next(w for w in g.neighbors(cur) if w != prev and w not in order[-2:])
        order.append(nxt)
        prev, cur = cur, nxt
    return order


def _case1(g: Graph, h: Graph, independent: int) -> ExpandCertificate | None:
    """Blow each H-vertex up to its projection, merge equal labels, add G's edges."""
    fibres = [list(bits(projection(independent, v, "right", g.n, h.n))) for v in range(h.n)]
    b = _Builder(h, list(range(h.n)))
    b.remove_all(v for v in range(h.n) if not fibres[v])
    for i in range(b.g.n):
        k = len(fibres[b.tags[i]])
        if k > 1:
            b.apply(CliqueSubstitute(i, k))
    # turn H-source tags into G labels, one fibre member per copy
    pools = {v: iter(fibres[v]) for v in range(h.n)}
    b.tags = [next(pools[t]) for t in b.tags]
    for label in range(g.n):
        while b.tags.count(label) > 1:
            idx = [i for i, t in enumerate(b.tags) if t == label]
            b.merge(idx[0], idx[1])
    if sorted(b.tags) != list(range(g.n)):
        return None
    if any(not g.adjacent(b.tags[i], b.tags[j]) for i, j in b.g.edges()):
        return None
    b.complete_to(g, b.tags)
    return ExpandCertificate("sequence", b.ops, mapping=tuple(b.tags))


def _cycle_case2(g: Graph, h: Graph, independent: int, empty_vertex: int) -> tuple[ExpandCertificate | None, str]:
    n = g.n
    ring = _cycle_order(g, empty_vertex)  # ring[0] is u_1
    size_of = [projection(independent, u, "left", g.n, h.n).bit_count() for u in range(n)]
    s_set = [ring[i] for i in range(1, n, 2)]  # u_2, u_4, ...
    t_set = [ring[i] for i in range(2, n, 2)]  # u_3, u_5, ...
    need = (n + 1) // 2
    for name, side in (("S", s_set), ("T", t_set)):
        if sum(size_of[u] for u in side) < need:
            continue
        side_mask = sum(1 << u for u in side)
        keep = [v for v in range(h.n) if projection(independent, v, "right", g.n, h.n) & side_mask]
        if not h.is_independent(sum(1 << v for v in keep)):
            return None, f"surviving H-vertices for {name} are not independent"
        if len(keep) < need:
            return None, f"only {len(keep)} H-vertices survive for {name}, need {need}"
        chosen = keep[:need]
        b = _Builder(h, list(range(h.n)))
        b.remove_all(v for v in range(h.n) if v not in chosen)
        for i in range(n // 2):
            b.apply(CliqueSubstitute(i, 2))
        # pair i gets ring vertices (2i, 2i+1); a leftover single vertex gets ring[-1]
        labels: list[int] = []
        for i in range(need):
            labels.append(ring[2 * i] if 2 * i < n else ring[-1])
        for i in range(n // 2):
            labels.append(ring[2 * i + 1])
        if n % 2:
            labels[need - 1] = ring[n - 1]
        b.tags = labels
        if any(not g.adjacent(labels[i], labels[j]) for i, j in b.g.edges()):
            return None, "matching blowup is not a subgraph of G"
        b.complete_to(g, labels)
        return ExpandCertificate("sequence", b.ops, mapping=tuple(labels)), f"case 2 via {name}"
    return None, "neither S nor T carries enough projection mass"


PROJECTION_ROUTES = ("perfect", "cycle", "vertex-transitive-case1")


def certificate_via_projections(g: Graph, h: Graph, route: str | None = None) -> ProjectionOutcome:
    """Build an Expand certificate the way the membership proofs for cycles and perfect graphs do.

    The first applicable route in ``PROJECTION_ROUTES`` is used unless ``route`` forces one
    (even cycles are perfect, so the cycle construction is otherwise only reached for odd n).
    """
    applicable = {
        "perfect": lambda: g.n <= 64 and is_perfect(g),
        "cycle": lambda: cycle_length(g) is not None,
        "vertex-transitive-case1": lambda: is_vertex_transitive(g),
    }
    if route is not None:
        if route not in applicable:
            raise ValueError(f"unknown route {route!r}")
        if not applicable[route]():
            return ProjectionOutcome(None, route, diagnostic=f"route {route} does not apply to G")
    else:
        route = next((r for r in PROJECTION_ROUTES if applicable[r]()), None)
        if route is None:
            return ProjectionOutcome(None, "none", diagnostic="G is neither perfect, a cycle nor vertex-transitive")

    if route == "perfect":
        if independence_number(g) > independence_number(h):
            return ProjectionOutcome(None, route, diagnostic="hypothesis fails: α(G) > α(H)")
        blocks = clique_partition(g)
        if len(blocks) != independence_number(g):
            return ProjectionOutcome(None, route, diagnostic="clique partition larger than α(G)")
        ind_h = list(bits(max_independent_set(h)))[: len(blocks)]
        b = _Builder(h, list(range(h.n)))
        b.remove_all(v for v in range(h.n) if v not in ind_h)
        for i, blk in enumerate(blocks):
            if blk.bit_count() > 1:
                b.apply(CliqueSubstitute(i, blk.bit_count()))
        labels = [list(bits(blk))[0] for blk in blocks]
        for blk in blocks:
            labels.extend(list(bits(blk))[1:])
        b.tags = labels
        b.complete_to(g, labels)
        return ProjectionOutcome(ExpandCertificate("sequence", b.ops, mapping=tuple(labels)), route, "clique-partition")

    product = strong_product(complement(g), h)
    independent = max_independent_set(product)
    if independent.bit_count() < g.n:
        return ProjectionOutcome(None, route, diagnostic=f"hypothesis fails: α(Gᶜ⊠H) = "
                                 f"{independent.bit_count()} < {g.n}, so α*(G|H) > 1")
    empties = [u for u in range(g.n) if not projection(independent, u, "left", g.n, h.n)]
    if not empties:
        cert = _case1(g, h, independent)
        diag = "" if cert else "case 1 construction did not produce a subgraph of G"
        return ProjectionOutcome(cert, route, "case 1", diag)
    if route != "cycle":
        return ProjectionOutcome(None, route, "case 2",
                                 f"vertex {empties[0]} has an empty projection; no construction for this family")
    cert, diag = _cycle_case2(g, h, independent, empties[0])
    return ProjectionOutcome(cert, route, "case 2", "" if cert else diag)


# ---------------------------------------------------------------------------
# Monotonicity and the conjecture scan
# ---------------------------------------------------------------------------

def monotonicity_check(h: Graph, op: ExpandOperation, witnesses: Sequence[Graph] | None = None,
                       max_vertices: int = 5) -> dict:
    """α(op(H)⊠W) <= α(H⊠W) for every W (default: all connected graphs up to 5 vertices)."""
    if witnesses is None:
        witnesses = graphs_up_to(max_vertices, connected=True)
    after = apply_operation(h, op)
    violations = []
    equal = 0
    for w in witnesses:
        a_new = independence_number(strong_product(after, w))
        a_old = independence_number(strong_product(h, w))
        if a_new > a_old:
            violations.append({"W": w, "after": a_new, "before": a_old})
        equal += a_new == a_old
    return {"operation": op_to_json(op), "checked": len(witnesses), "equalities": equal,
            "violations": violations, "passed": not violations}


@dataclass
class PairRecord:
    g: Graph
    h: Graph
    method: str
    value: Fraction
    below_one: bool
    member: bool
    constructive: bool | None = None

    def to_json(self) -> dict:
        return {"G": self.g, "H": self.h, "method": self.method, "value": self.value,
                "below_one": self.below_one, "member": self.member, "constructive": self.constructive}


def _graph_profile(g: Graph) -> dict:
    return {"cycle": cycle_length(g) is not None, "perfect": is_perfect(g),
            "vt": is_vertex_transitive(g)}


def scan_pair(g: Graph, h: Graph, profile: dict | None = None, constructive: bool = True) -> PairRecord | None:
    """Exact α*(G|H) (when a closed form applies) next to Expand membership."""
    profile = profile or _graph_profile(g)
    if profile["perfect"]:
        method, value = "perfect-exact", Fraction(independence_number(g), independence_number(h))
    elif profile["vt"] or profile["cycle"]:
        method = "cycle-formula-exact" if profile["cycle"] and cycle_length(h) else "vertex-transitive-exact"
        value = Fraction(g.n, independence_number(strong_product(complement(g), h)))
    else:
        return None
    member = is_in_expand(g, h) is not None
    rec = PairRecord(g, h, method, value, value <= 1, member)
    if constructive and rec.below_one and (profile["perfect"] or profile["cycle"]):
        out = certificate_via_projections(g, h)
        rec.constructive = out.certificate is not None and verify_certificate(g, h, out.certificate)
    return rec


def _scan_chunk(args) -> list:
    pairs, constructive = args
    out = []
    for g, h in pairs:
        out.append(scan_pair(g, h, constructive=constructive))
    return out


def conjecture_scan(max_vertices: int, jobs: int = 1, constructive: bool = True) -> dict:
    """Check "α*(G|H) <= 1 iff G ∈ Expand(H)" over all connected pairs with exact α*(G|H)."""
    if max_vertices > 7:
        raise ValueError("conjecture scan is limited to 7 vertices")
    graphs = graphs_up_to(max_vertices, connected=True)
    profiles = [_graph_profile(g) for g in graphs]
    records: list[PairRecord] = []
    work = [(g, h) for g, p in zip(graphs, profiles) if p["perfect"] or p["vt"] for h in graphs]
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor
        size = max(1, len(work) // (jobs * 8))
        chunks = [(work[i:i + size], constructive) for i in range(0, len(work), size)]
        with ProcessPoolExecutor(jobs) as pool:
            for part in pool.map(_scan_chunk, chunks):
                records.extend(r for r in part if r is not None)
    else:
        prof = {id(g): p for g, p in zip(graphs, profiles)}
        for g, h in work:
            r = scan_pair(g, h, prof[id(g)], constructive)
            if r is not None:
                records.append(r)

    counts: dict[str, int] = {}
    critical, candidates, triv_violations, constructive_failures = [], [], [], []
    for r in records:
        counts[r.method] = counts.get(r.method, 0) + 1
        if r.member and not r.below_one:
            triv_violations.append(r)
        if r.below_one != r.member:
            prof_g = _graph_profile(r.g)
            (critical if prof_g["cycle"] or prof_g["perfect"] else candidates).append(r)
        if r.constructive is False:
            constructive_failures.append(r)
    return {
        "max_vertices": max_vertices,
        "pairs": len(records),
        "method_counts": dict(sorted(counts.items())),
        "members": sum(r.member for r in records),
        "below_one": sum(r.below_one for r in records),
        "critical_events": critical,
        "conjecture_candidates": candidates,
        "triv_violations": triv_violations,
        "constructive_failures": constructive_failures,
        "passed": not critical and not triv_violations and not constructive_failures,
    }
