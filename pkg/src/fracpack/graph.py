"""Simple undirected graphs with bitset adjacency and the constructions built on them.

Vertices are ``0..n-1``; ``rows[v]`` is an int whose bit ``u`` is set iff ``uv`` is an
edge. Graphs are immutable values; every construction returns a new graph.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 4096


class GraphSizeError(ValueError):
    """A construction would exceed the vertex cap (or a size guard of an exact search)."""


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    n: int
    rows: tuple[int, ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.n < 0 or self.n > MAX_VERTICES:
            raise GraphSizeError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if len(self.rows) != self.n:
            raise ValueError("need exactly one adjacency row per vertex")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.rows):
            if row & ~full or row >> v & 1:
                raise ValueError(f"row {v} has a loop or an out-of-range neighbour")
            for u in bits(row):
                if not self.rows[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric at ({u}, {v})")
        if self.labels is not None and len(self.labels) != self.n:
            raise ValueError("labels must have one entry per vertex")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], labels=None) -> Graph:
        if n > MAX_VERTICES:
            raise GraphSizeError(f"vertex count {n} exceeds {MAX_VERTICES}")
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise IndexError(f"edge ({u}, {v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows), None if labels is None else tuple(labels))

    # -- basic queries -------------------------------------------------------

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.rows[v]))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.rows[u] >> (u + 1) << (u + 1))]

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def is_independent(self, mask: int) -> bool:
        return all(not (self.rows[v] & mask) for v in bits(mask))

    def is_clique(self, mask: int) -> bool:
        return all((self.rows[v] | 1 << v) & mask == mask for v in bits(mask))

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen, frontier = 1, 1
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= self.rows[v]
            frontier = nxt & ~seen
            seen |= frontier
        return seen == self.full_mask

    def induced(self, vertices: Sequence[int]) -> Graph:
        """Induced subgraph on ``vertices``, renumbered in the given order."""
        pos = {v: i for i, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            rows.append(mask_of(pos[u] for u in bits(self.rows[v]) if u in pos))
        labels = None if self.labels is None else tuple(self.labels[v] for v in vertices)
        return Graph(len(vertices), tuple(rows), labels)

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph whose vertex ``perm[v]`` plays the role of vertex ``v`` here."""
        rows = [0] * self.n
        for v in range(self.n):
            rows[perm[v]] = mask_of(perm[u] for u in bits(self.rows[v]))
        return Graph(self.n, tuple(rows))

    def with_labels(self, labels: Sequence[str] | None) -> Graph:
        return Graph(self.n, self.rows, None if labels is None else tuple(labels))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


# ---------------------------------------------------------------------------
# Fixtures
# ---------------------------------------------------------------------------

def empty(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle needs at least 3 vertices, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def disjoint_union(*graphs: Graph) -> Graph:
    rows: list[int] = []
    offset = 0
    for g in graphs:
        rows.extend(r << offset for r in g.rows)
        offset += g.n
    if offset > MAX_VERTICES:
        raise GraphSizeError(f"union has {offset} vertices, cap is {MAX_VERTICES}")
    return Graph(offset, tuple(rows))


# ---------------------------------------------------------------------------
# Constructions
# ---------------------------------------------------------------------------

def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph(g.n, tuple(full & ~r & ~(1 << v) for v, r in enumerate(g.rows)), g.labels)


def strong_product(g: Graph, h: Graph) -> Graph:
    """Strong product with vertex ``(u, v)`` stored at index ``u * h.n + v``."""
    n = g.n * h.n
    if n > MAX_VERTICES:
        raise GraphSizeError(f"strong product would have {n} vertices, cap is {MAX_VERTICES}")
    hn = h.n
    closed_h = [r | 1 << v for v, r in enumerate(h.rows)]
    rows = []
    for u in range(g.n):
        closed_u = g.rows[u] | 1 << u
        for v in range(hn):
            row = 0
            for u2 in bits(closed_u):
                row |= closed_h[v] << (u2 * hn)
            rows.append(row & ~(1 << (u * hn + v)))
    labels = None
    if g.labels is not None or h.labels is not None:
        gl = g.labels or tuple(str(i) for i in range(g.n))
        hl = h.labels or tuple(str(i) for i in range(h.n))
        labels = tuple(f"({a},{b})" for a in gl for b in hl)
    return Graph(n, tuple(rows), labels)


def strong_power(g: Graph, k: int) -> Graph:
    if k < 1:
        raise ValueError("strong power needs k >= 1")
    if g.n ** k > MAX_VERTICES:
        raise GraphSizeError(f"G^{k} would have {g.n ** k} vertices, cap is {MAX_VERTICES}")
    out = g
    for _ in range(k - 1):
        out = strong_product(out, g)
    return out


def blowup(g: Graph, multiplicities: Sequence[int]) -> Graph:
    """Replace vertex ``v`` by a clique of ``multiplicities[v]`` copies (0 deletes it).

    Copies are numbered source-major, so all copies of vertex 0 come first. Labels record
    the source vertex of each copy.
    """
    if len(multiplicities) != g.n:
        raise ValueError("need one multiplicity per vertex")
    if any(m < 0 for m in multiplicities):
        raise ValueError("multiplicities must be nonnegative")
    total = sum(multiplicities)
    if total > MAX_VERTICES:
        raise GraphSizeError(f"blowup would have {total} vertices, cap is {MAX_VERTICES}")
    start, group = [], []
    pos = 0
    for m in multiplicities:
        start.append(pos)
        group.append(((1 << m) - 1) << pos)
        pos += m
    rows, labels = [], []
    src = g.labels or tuple(str(v) for v in range(g.n))
    for v in range(g.n):
        nbr = group[v]
        for u in bits(g.rows[v]):
            nbr |= group[u]
        for i in range(multiplicities[v]):
            rows.append(nbr & ~(1 << (start[v] + i)))
            labels.append(src[v])
    return Graph(total, tuple(rows), tuple(labels))


def projection(product_set: int, v: int, side: str, g_n: int, h_n: int) -> int:
    """Project a vertex set of ``G ⊠ H`` (row-major) onto vertex ``v`` of one factor.

    ``side="left"`` fixes ``v`` in G and returns the H-vertices ``w`` with ``(v, w)`` in the
    set; ``side="right"`` fixes ``v`` in H and returns G-vertices.
    """
    if product_set >> (g_n * h_n):
        raise IndexError("set has members outside the product")
    if side == "left":
        if not 0 <= v < g_n:
            raise IndexError(f"vertex {v} not in left factor of size {g_n}")
        return (product_set >> (v * h_n)) & ((1 << h_n) - 1)
    if side == "right":
        if not 0 <= v < h_n:
            raise IndexError(f"vertex {v} not in right factor of size {h_n}")
        return mask_of(u for u in range(g_n) if product_set >> (u * h_n + v) & 1)
    raise ValueError(f"side must be 'left' or 'right', not {side!r}")


def are_disconnected(s: int, t: int, g: Graph) -> bool:
    if s & t:
        return False
    return all(not (g.rows[v] & t) for v in bits(s))


# ---------------------------------------------------------------------------
# Cliques
# ---------------------------------------------------------------------------

def maximal_cliques(g: Graph) -> list[int]:
    """All inclusion-maximal cliques as bitsets, sorted by their sorted member lists."""
    out: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(r)
            return
        # Tomita pivot: maximise |P ∩ N(u)|
        pivot = max(bits(p | x), key=lambda u: (p & g.rows[u]).bit_count())
        for v in bits(p & ~g.rows[pivot]):
            expand(r | 1 << v, p & g.rows[v], x & g.rows[v])
            p &= ~(1 << v)
            x |= 1 << v

    if g.n:
        expand(0, g.full_mask, 0)
    out.sort(key=lambda c: list(bits(c)))
    return out


# ---------------------------------------------------------------------------
# Canonical form, isomorphism, automorphisms
# ---------------------------------------------------------------------------

def _refine(g: Graph, colors: list[int] | None = None) -> list[int]:
    """Colour refinement to a stable, isomorphism-invariant ordered colouring."""
    if colors is None:
        colors = [g.degree(v) for v in range(g.n)]
    # normalise initial colours to ranks
    ranks = {c: i for i, c in enumerate(sorted(set(colors)))}
    colors = [ranks[c] for c in colors]
    while True:
        sigs = [(colors[v], tuple(sorted(colors[u] for u in bits(g.rows[v])))) for v in range(g.n)]
        ranks = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranks[s] for s in sigs]
        if len(ranks) == len(set(colors)):
            return new
        colors = new


def canonical_form(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Canonical adjacency code: equal for two graphs iff they are isomorphic.

    Vertices are ordered by refined colour class; within classes the order maximising the
    graph6-order upper-triangle bit string is found by pruned exhaustive search.
    """
    n = g.n
    if n == 0:
        return (0, ())
    colors = _refine(g)
    cell_of_pos = sorted(colors)
    rows = g.rows
    best: list[int] | None = None
    perm: list[int] = []
    code: list[int] = []

    def search(placed: int, better: bool) -> None:
        nonlocal best
        p = len(perm)
        if p == n:
            if best is None or code > best:
                best = code.copy()
            return
        want = cell_of_pos[p]
        for v in range(n):
            if placed >> v & 1 or colors[v] != want:
                continue
            col = 0
            for i, w in enumerate(perm):
                if rows[v] >> w & 1:
                    col |= 1 << (p - 1 - i)
            # columns compared as bit strings x(0,p) x(1,p) ... (first bit most significant)
            now_better = better
            if best is not None and not better:
                if col < best[p]:
                    continue
                now_better = col > best[p]
            perm.append(v)
            code.append(col)
            search(placed | 1 << v, now_better)
            perm.pop()
            code.pop()

    search(0, False)
    return (n, tuple(best))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count() != h.edge_count():
        return False
    return canonical_form(g) == canonical_form(h)


def find_isomorphism(g: Graph, h: Graph) -> list[int] | None:
    """A bijection ``phi`` with ``uv ∈ E(g)`` iff ``phi[u]phi[v] ∈ E(h)``, or None."""
    if g.n != h.n or g.edge_count() != h.edge_count():
        return None
    joint = _refine(disjoint_union(g, h))
    cg, ch = joint[: g.n], joint[g.n:]
    if sorted(cg) != sorted(ch):
        return None
    return _match(g, h, cg, ch, {})


def _match(g: Graph, h: Graph, cg, ch, fixed: dict[int, int]) -> list[int] | None:
    n = g.n
    order = sorted(range(n), key=lambda v: (v not in fixed, sum(1 for c in cg if c == cg[v]), v))
    phi = [-1] * n
    used = 0
    for v, w in fixed.items():
        phi[v] = w
        used |= 1 << w

    def consistent(v: int, w: int) -> bool:
        for u in range(n):
            if phi[u] >= 0 and u != v:
                if g.adjacent(u, v) != h.adjacent(phi[u], w):
                    return False
        return True

    if not all(consistent(v, w) for v, w in fixed.items()):
        return None

    def rec(i: int) -> bool:
        nonlocal used
        if i == n:
            return True
        v = order[i]
        if phi[v] >= 0:
            return rec(i + 1)
        for w in range(n):
            if used >> w & 1 or ch[w] != cg[v] or not consistent(v, w):
                continue
            phi[v] = w
            used |= 1 << w
            if rec(i + 1):
                return True
            phi[v] = -1
            used &= ~(1 << w)
        return False

    return phi if rec(0) else None


def is_vertex_transitive(g: Graph) -> bool:
    """Whether the automorphism group moves vertex 0 to every vertex."""
    if g.n <= 1:
        return True
    colors = _refine(g)
    if len(set(colors)) > 1:
        return False
    gens: list[list[int]] = []
    orbit = {0}
    for target in range(1, g.n):
        if target in orbit:
            continue
        sigma = _match(g, g, colors, colors, {0: target})
        if sigma is None:
            return False
        gens.append(sigma)
        frontier = list(orbit)
        while frontier:
            x = frontier.pop()
            for s in gens:
                if s[x] not in orbit:
                    orbit.add(s[x])
                    frontier.append(s[x])
    return True


# ---------------------------------------------------------------------------
# Perfectness
# ---------------------------------------------------------------------------

PERFECT_GUARD = 64


def _has_odd_hole(g: Graph) -> bool:
    """Search for an induced cycle of odd length >= 5, smallest vertex first."""
    rows = g.rows
    for s in range(g.n):
        higher = g.full_mask & ~((1 << (s + 1)) - 1)

        def grow(path: list[int], on_path: int, blocked: int) -> bool:
            # blocked: vertices adjacent to some path vertex other than the last one
            last = path[-1]
            for v in bits(rows[last] & higher & ~on_path & ~blocked):
                if rows[v] >> s & 1:
                    if len(path) == 1:
                        continue
                    length = len(path) + 1
                    if length >= 5 and length % 2 == 1:
                        return True
                    continue
                if grow(path + [v], on_path | 1 << v, blocked | rows[last]):
                    return True
            return False

        # the neighbour v1 may touch s; later vertices may not, except when closing
        for v1 in bits(rows[s] & higher):
            if grow([s, v1], 1 << s | 1 << v1, 0):
                return True
    return False


def is_perfect(g: Graph) -> bool:
    """No odd hole and no odd antihole (strong perfect graph characterisation)."""
    if g.n > PERFECT_GUARD:
        raise GraphSizeError(f"perfectness test limited to {PERFECT_GUARD} vertices")
    return not _has_odd_hole(g) and not _has_odd_hole(complement(g))


def cycle_length(g: Graph) -> int | None:
    """``n`` if ``g`` is isomorphic to the cycle ``C_n``, else None."""
    if g.n >= 3 and all(g.degree(v) == 2 for v in range(g.n)) and g.is_connected():
        return g.n
    return None


# ---------------------------------------------------------------------------
# Exhaustive enumeration of small graphs up to isomorphism
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def all_graphs(n: int) -> tuple[Graph, ...]:
    """One representative per isomorphism class on ``n`` vertices, canonical order."""
    if n == 0:
        return (empty(0),)
    seen: dict[tuple, Graph] = {}
    for base in all_graphs(n - 1):
        for nbrs in range(1 << (n - 1)):
            rows = list(base.rows) + [nbrs]
            for u in bits(nbrs):
                rows[u] |= 1 << (n - 1)
            cand = Graph(n, tuple(rows))
            key = canonical_form(cand)
            if key not in seen:
                seen[key] = cand
    return tuple(_canonical_graph(key) for key in sorted(seen))


def _canonical_graph(key: tuple[int, tuple[int, ...]]) -> Graph:
    n, cols = key
    edges = []
    for p, col in enumerate(cols):
        for i in range(p):
            if col >> (p - 1 - i) & 1:
                edges.append((i, p))
    return Graph.from_edges(n, edges)


def canonical_relabel(g: Graph) -> Graph:
    return _canonical_graph(canonical_form(g))


def connected_graphs(n: int) -> tuple[Graph, ...]:
    return tuple(g for g in all_graphs(n) if g.is_connected())


def graphs_up_to(max_n: int, connected: bool = False, min_n: int = 1) -> list[Graph]:
    out: list[Graph] = []
    for n in range(min_n, max_n + 1):
        out.extend(connected_graphs(n) if connected else all_graphs(n))
    return out


def subsets(n: int, size: int) -> Iterator[int]:
    for combo in combinations(range(n), size):
        yield mask_of(combo)
