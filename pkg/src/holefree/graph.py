"""Immutable bitset-backed graphs with exact vertex weights.

Vertices are integers 0..n-1.  Vertex sets are int bitmasks (see
:mod:`holefree.bits`).  Weights are nonnegative :class:`~fractions.Fraction`
values so that totals add and compare exactly; no floating point enters any
comparison.

File format (line oriented, 1-indexed, ``#`` starts a comment line)::

    p mwis <n> <m>
    w <v> <weight>      # optional; omitted weights default to 1
    e <u> <v>           # exactly m edge lines

Emission writes the header, then all weight lines different from 1, then
the edges sorted lexicographically, so that equal graphs serialize to
identical bytes.
"""

from __future__ import annotations

from fractions import Fraction
from collections.abc import Iterable

from .bits import iter_bits, to_tuple
from .errors import GraphFormatError

Weight = Fraction


class Graph:
    """A finite simple undirected graph with weighted vertices.

    Instances are immutable after construction and safe to share across
    workers; all operations are pure functions of the inputs.
    """

    __slots__ = ("n", "adj", "weights", "full_mask")

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int]] = (),
        weights: Iterable | None = None,
    ):
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        if weights is None:
            ws = (Fraction(1),) * n
        else:
            ws = tuple(Fraction(w) for w in weights)
            if len(ws) != n:
                raise ValueError("need exactly one weight per vertex")
            if any(w < 0 for w in ws):
                raise ValueError("weights must be nonnegative")
        self.n = n
        self.adj = tuple(adj)
        self.weights = ws
        self.full_mask = (1 << n) - 1

    # -- basic structure ---------------------------------------------------

    def edges(self) -> list[tuple[int, int]]:
        """All edges as sorted (u, v) pairs with u < v."""
        out = []
        for u in range(self.n):
            later = self.adj[u] >> (u + 1)
            for off in iter_bits(later):
                out.append((u, u + 1 + off))
        return out

    @property
    def m(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def max_degree(self) -> int:
        """Maximum vertex degree; 0 for edgeless graphs."""
        return max((a.bit_count() for a in self.adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    # -- set operations ----------------------------------------------------

    def neighborhood(self, sub: int, closed: bool = False) -> int:
        """N(sub) disjoint from sub, or N[sub] = N(sub) | sub when closed."""
        nb = 0
        for v in iter_bits(sub):
            nb |= self.adj[v]
        return (nb | sub) if closed else (nb & ~sub)

    def components(self, sub: int | None = None) -> list[int]:
        """Connected components of the subgraph induced on ``sub``.

        Each component mask is found by flooding from its minimum vertex, so
        the returned list is sorted by minimum element (canonical order).
        """
        remaining = self.full_mask if sub is None else sub
        adj = self.adj
        comps = []
        while remaining:
            comp = remaining & -remaining
            frontier = comp
            while frontier:
                nxt = 0
                for v in iter_bits(frontier):
                    nxt |= adj[v]
                frontier = nxt & remaining & ~comp
                comp |= frontier
            comps.append(comp)
            remaining &= ~comp
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def is_independent(self, sub: int) -> bool:
        for v in iter_bits(sub):
            if self.adj[v] & sub:
                return False
        return True

    def is_clique(self, sub: int) -> bool:
        for v in iter_bits(sub):
            if sub & ~self.adj[v] & ~(1 << v):
                return False
        return True

    def weight_of(self, sub: int) -> Fraction:
        total = Fraction(0)
        for v in iter_bits(sub):
            total += self.weights[v]
        return total

    def total_weight(self) -> Fraction:
        return sum(self.weights, Fraction(0))

    # -- derived graphs ----------------------------------------------------

    def complement(self) -> "Graph":
        """Weight-preserving complement: uv is an edge iff it was not one."""
        g = Graph.__new__(Graph)
        g.n = self.n
        g.full_mask = self.full_mask
        g.weights = self.weights
        g.adj = tuple(
            self.full_mask & ~a & ~(1 << v) for v, a in enumerate(self.adj)
        )
        return g

    def with_weights(self, weights: Iterable) -> "Graph":
        return Graph(self.n, self.edges(), weights)

    def with_edges(self, extra: Iterable[tuple[int, int]]) -> "Graph":
        """A copy with additional edges (duplicates are merged)."""
        return Graph(self.n, self.edges() + list(extra), self.weights)

    def induced(self, sub: int) -> tuple["Graph", tuple[int, ...]]:
        """Compactly relabeled induced subgraph plus new-to-old vertex map."""
        vmap = to_tuple(sub)
        index = {v: i for i, v in enumerate(vmap)}
        edges = []
        for i, v in enumerate(vmap):
            for u in iter_bits(self.adj[v] & sub):
                if u > v:
                    edges.append((i, index[u]))
        return Graph(len(vmap), edges, [self.weights[v] for v in vmap]), vmap

    def prefix(self, i: int) -> "Graph":
        """Induced subgraph on vertices 0..i-1, labels preserved."""
        mask = (1 << i) - 1
        g = Graph.__new__(Graph)
        g.n = i
        g.full_mask = mask
        g.weights = self.weights[:i]
        g.adj = tuple(a & mask for a in self.adj[:i])
        return g

    # -- misc ----------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.n == other.n
            and self.adj == other.adj
            and self.weights == other.weights
        )

    def __hash__(self):
        return hash((self.n, self.adj, self.weights))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


# -- weights ----------------------------------------------------------------


def parse_weight(text: str) -> Fraction:
    """Parse a decimal or p/q weight string into an exact Fraction."""
    return Fraction(text)


def format_weight(w: Fraction) -> str:
    """Exact decimal form when the denominator divides a power of ten,
    else p/q form; round-trips through :func:`parse_weight`."""
    if w.denominator == 1:
        return str(w.numerator)
    den = w.denominator
    twos = fives = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den != 1:
        return f"{w.numerator}/{w.denominator}"
    shift = max(twos, fives)
    scaled = w.numerator * 10**shift // w.denominator
    digits = str(scaled).rjust(shift + 1, "0")
    return digits[:-shift] + "." + digits[-shift:]


# -- file format --------------------------------------------------------------


def parse_graph(text: str) -> Graph:
    """Parse the line-oriented graph format; errors carry line numbers."""
    n = m = None
    edges: list[tuple[int, int]] = []
    seen_edges: set[tuple[int, int]] = set()
    weight_lines: dict[int, Fraction] = {}
    last_line = 0

    for lineno, raw in enumerate(text.splitlines(), start=1):
        last_line = lineno
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        tag = parts[0]
        if tag == "p":
            if n is not None:
                raise GraphFormatError("duplicate header", lineno)
            if len(parts) != 4 or parts[1] != "mwis":
                raise GraphFormatError("malformed header, expected 'p mwis <n> <m>'", lineno)
            try:
                n, m = int(parts[2]), int(parts[3])
            except ValueError:
                raise GraphFormatError("malformed header, expected integer sizes", lineno) from None
            if n < 0 or m < 0:
                raise GraphFormatError("header sizes must be nonnegative", lineno)
        elif tag == "w":
            if n is None:
                raise GraphFormatError("weight line before header", lineno)
            if len(parts) != 3:
                raise GraphFormatError("malformed weight line, expected 'w <v> <weight>'", lineno)
            try:
                v = int(parts[1])
                w = parse_weight(parts[2])
            except (ValueError, ZeroDivisionError):
                raise GraphFormatError("malformed weight line", lineno) from None
            if not 1 <= v <= n:
                raise GraphFormatError(f"vertex {v} out of range 1..{n}", lineno)
            if w < 0:
                raise GraphFormatError("negative weight", lineno)
            if v - 1 in weight_lines:
                raise GraphFormatError(f"duplicate weight for vertex {v}", lineno)
            weight_lines[v - 1] = w
        elif tag == "e":
            if n is None:
                raise GraphFormatError("edge line before header", lineno)
            if len(parts) != 3:
                raise GraphFormatError("malformed edge line, expected 'e <u> <v>'", lineno)
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphFormatError("malformed edge line", lineno) from None
            for x in (u, v):
                if not 1 <= x <= n:
                    raise GraphFormatError(f"vertex {x} out of range 1..{n}", lineno)
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u}", lineno)
            key = (min(u, v) - 1, max(u, v) - 1)
            if key in seen_edges:
                raise GraphFormatError(f"duplicate edge {u} {v}", lineno)
            seen_edges.add(key)
            edges.append(key)
        else:
            raise GraphFormatError(f"unknown directive {tag!r}", lineno)

    if n is None:
        raise GraphFormatError("missing 'p mwis <n> <m>' header", last_line or None)
    if len(edges) != m:
        raise GraphFormatError(f"header declares {m} edges but {len(edges)} given", last_line)
    weights = [weight_lines.get(v, Fraction(1)) for v in range(n)]
    return Graph(n, edges, weights)


def emit_graph(g: Graph, comments: Iterable[str] = ()) -> str:
    """Serialize a graph; identical graphs produce identical bytes."""
    lines = [f"# {c}" for c in comments]
    lines.append(f"p mwis {g.n} {g.m}")
    for v in range(g.n):
        if g.weights[v] != 1:
            lines.append(f"w {v + 1} {format_weight(g.weights[v])}")
    for u, v in g.edges():
        lines.append(f"e {u + 1} {v + 1}")
    return "\n".join(lines) + "\n"
