"""Class-membership tests and the chordality toolkit.

Covers detection of long holes (induced cycles of length at least five)
and induced k-prisms, chordality with certificates in both directions,
minimal triangulations, and clique trees of chordal completions.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .bits import iter_bits, mask_of, to_tuple
from .errors import PreconditionError, SolverInvariantError
from .graph import Graph

FillIn = tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class PrismWitness:
    """An induced k-prism: two k-cliques joined by the matching left[i]-right[i]."""

    left: tuple[int, ...]
    right: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.left)

    def vertex_mask(self) -> int:
        return mask_of(self.left) | mask_of(self.right)

    def is_valid(self, g: Graph) -> bool:
        k = len(self.left)
        if len(self.right) != k or set(self.left) & set(self.right):
            return False
        if not g.is_clique(mask_of(self.left)) or not g.is_clique(mask_of(self.right)):
            return False
        for i, a in enumerate(self.left):
            for j, b in enumerate(self.right):
                if g.has_edge(a, b) != (i == j):
                    return False
        return True


@dataclass(frozen=True)
class ChordalityResult:
    chordal: bool
    # perfect elimination order (eliminate first to last) when chordal
    elimination_order: tuple[int, ...] | None
    # an induced cycle of length >= 4 when not chordal
    hole: tuple[int, ...] | None


@dataclass(frozen=True)
class CliqueTree:
    """Tree decomposition of a chordal graph whose bags are its maximal cliques."""

    bags: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]

    @property
    def width(self) -> int:
        return max((b.bit_count() for b in self.bags), default=1) - 1


def is_induced_cycle(g: Graph, cycle: tuple[int, ...]) -> bool:
    """True iff the vertex sequence is an induced cycle of g."""
    k = len(cycle)
    if k < 3 or len(set(cycle)) != k:
        return False
    for i, u in enumerate(cycle):
        for j in range(i + 1, k):
            v = cycle[j]
            on_cycle = j - i == 1 or (i == 0 and j == k - 1)
            if g.has_edge(u, v) != on_cycle:
                return False
    return True


def _shortest_avoiding_path(g: Graph, source: int, target: int, allowed: int) -> list[int] | None:
    """Lexicographically smallest BFS shortest path inside ``allowed``."""
    if not (allowed >> source & 1) or not (allowed >> target & 1):
        return None
    parent = {source: -1}
    frontier = deque([source])
    while frontier:
        u = frontier.popleft()
        if u == target:
            path = []
            while u != -1:
                path.append(u)
                u = parent[u]
            return path[::-1]
        for v in iter_bits(g.adj[u] & allowed):
            if v not in parent:
                parent[v] = u
                frontier.append(v)
    return None


def find_long_hole(g: Graph) -> tuple[int, ...] | None:
    """Return an induced cycle of length at least five, or None.

    For every induced path x1-x2-x3-x4 the search asks whether x1 and x4
    reconnect in g minus ((N[x2] | N[x3]) - {x1, x4}); a shortest such
    reconnection closes an induced cycle of length at least five.  Seeds
    are scanned in canonical order so the result is deterministic.
    """
    for x2 in range(g.n):
        for x3 in iter_bits(g.adj[x2]):
            starts = g.adj[x2] & ~g.adj[x3] & ~(1 << x3)
            ends = g.adj[x3] & ~g.adj[x2] & ~(1 << x2)
            if not starts or not ends:
                continue
            blocked = (g.adj[x2] | g.adj[x3] | (1 << x2) | (1 << x3))
            for x1 in iter_bits(starts):
                allowed_base = g.full_mask & ~blocked | (1 << x1)
                for x4 in iter_bits(ends):
                    if g.has_edge(x1, x4):
                        continue
                    path = _shortest_avoiding_path(g, x1, x4, allowed_base | (1 << x4))
                    if path is None:
                        continue
                    cycle = tuple([x3, x2] + path)
                    if not is_induced_cycle(g, cycle) or len(cycle) < 5:
                        raise SolverInvariantError(f"long-hole candidate failed check: {cycle}")
                    return cycle
    return None


def _hole_certificate(g: Graph) -> tuple[int, ...] | None:
    """An induced cycle of length at least four, or None (graph chordal).

    Scans triples v with nonadjacent neighbors x, y and reconnects x to y
    avoiding N[v]; in a non-chordal graph some triple on a hole succeeds.
    """
    for v in range(g.n):
        nv = g.adj[v]
        for x in iter_bits(nv):
            for y in iter_bits(nv):
                if y <= x or g.has_edge(x, y):
                    continue
                allowed = (g.full_mask & ~(nv | (1 << v))) | (1 << x) | (1 << y)
                path = _shortest_avoiding_path(g, x, y, allowed)
                if path is not None:
                    cycle = tuple([v] + path)
                    if not is_induced_cycle(g, cycle) or len(cycle) < 4:
                        raise SolverInvariantError(f"hole candidate failed check: {cycle}")
                    return cycle
    return None


def _mcs_order(g: Graph) -> list[int]:
    """Maximum cardinality search visit order (ties broken by index)."""
    visited = 0
    score = [0] * g.n
    order = []
    for _ in range(g.n):
        best = -1
        for v in range(g.n):
            if not (visited >> v & 1) and (best == -1 or score[v] > score[best]):
                best = v
        order.append(best)
        visited |= 1 << best
        for u in iter_bits(g.adj[best] & ~visited):
            score[u] += 1
    return order


def is_chordal(g: Graph) -> ChordalityResult:
    """MCS order tested for perfect elimination; a hole certifies failure."""
    order = _mcs_order(g)
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    earlier = [0] * g.n  # neighbors visited before v, i.e. later in elimination
    for v in range(g.n):
        earlier[v] = mask_of(u for u in iter_bits(g.adj[v]) if pos[u] < pos[v])
    for v in order:
        if not g.is_clique(earlier[v]):
            hole = _hole_certificate(g)
            if hole is None:
                raise SolverInvariantError("elimination check failed but no hole found")
            return ChordalityResult(False, None, hole)
    return ChordalityResult(True, tuple(reversed(order)), None)


def minimal_triangulation(g: Graph) -> FillIn:
    """An inclusion-minimal fill-in F such that g+F is chordal.

    MCS-M labeling search with index-order tie-breaking, followed by a
    repair pass that keeps dropping fill edges while chordality survives,
    so minimality does not hinge on the labeling subtleties.
    """
    n = g.n
    score = [0] * n
    numbered = 0
    fill: set[tuple[int, int]] = set()
    for _ in range(n):
        z = -1
        for v in range(n):
            if not (numbered >> v & 1) and (z == -1 or score[v] > score[z]):
                z = v
        numbered |= 1 << z
        bump = []
        unnumbered = g.full_mask & ~numbered
        for y in iter_bits(unnumbered):
            if g.has_edge(y, z):
                bump.append(y)
                continue
            # path y -> z whose internal vertices are unnumbered with score < score[y]
            allowed = mask_of(
                x for x in iter_bits(unnumbered & ~(1 << y)) if score[x] < score[y]
            )
            reach = 1 << y
            frontier = reach
            hit = False
            while frontier and not hit:
                nxt = 0
                for x in iter_bits(frontier):
                    nxt |= g.adj[x]
                if nxt >> z & 1:
                    hit = True
                    break
                frontier = nxt & allowed & ~reach
                reach |= frontier
            if hit:
                bump.append(y)
                fill.add((min(y, z), max(y, z)))
        for y in bump:
            score[y] += 1

    # repair to inclusion-minimality
    fill = {e for e in fill if not g.has_edge(*e)}
    changed = True
    while changed:
        changed = False
        for e in sorted(fill):
            rest = fill - {e}
            if is_chordal(g.with_edges(rest)).chordal:
                fill = rest
                changed = True
    return tuple(sorted(fill))


def _maximal_cliques_chordal(h: Graph, elimination_order: tuple[int, ...]) -> list[int]:
    pos = [0] * h.n
    for i, v in enumerate(elimination_order):
        pos[v] = i
    candidates = []
    for v in range(h.n):
        later = mask_of(u for u in iter_bits(h.adj[v]) if pos[u] > pos[v])
        candidates.append(later | (1 << v))
    candidates.sort(key=lambda m: -m.bit_count())
    cliques: list[int] = []
    for c in candidates:
        if not any(c & ~k == 0 for k in cliques):
            cliques.append(c)
    cliques.sort(key=to_tuple)
    return cliques


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[rb] = ra
        return True


def clique_tree(g: Graph, fill: FillIn = ()) -> CliqueTree:
    """Clique tree of g+fill: bags are the maximal cliques of the completion.

    The tree is a maximum-weight spanning forest of the clique-intersection
    graph (Kruskal with canonical tie-breaking), which guarantees the
    running-intersection property.
    """
    h = g.with_edges(fill) if fill else g
    res = is_chordal(h)
    if not res.chordal:
        raise PreconditionError("graph plus fill-in is not chordal")
    bags = _maximal_cliques_chordal(h, res.elimination_order)
    pairs = []
    for i in range(len(bags)):
        for j in range(i + 1, len(bags)):
            w = (bags[i] & bags[j]).bit_count()
            if w > 0:
                pairs.append((-w, i, j))
    pairs.sort()
    uf = _UnionFind(len(bags))
    edges = []
    for _, i, j in pairs:
        if uf.union(i, j):
            edges.append((i, j))
    tree = CliqueTree(tuple(bags), tuple(edges))
    _check_running_intersection(h, tree)
    return tree


def _check_running_intersection(h: Graph, tree: CliqueTree) -> None:
    nbr: dict[int, list[int]] = {i: [] for i in range(len(tree.bags))}
    for i, j in tree.edges:
        nbr[i].append(j)
        nbr[j].append(i)
    for v in range(h.n):
        holders = [i for i, b in enumerate(tree.bags) if b >> v & 1]
        if not holders:
            raise SolverInvariantError(f"vertex {v} missing from all bags")
        seen = {holders[0]}
        stack = [holders[0]]
        holder_set = set(holders)
        while stack:
            x = stack.pop()
            for y in nbr[x]:
                if y in holder_set and y not in seen:
                    seen.add(y)
                    stack.append(y)
        if seen != holder_set:
            raise SolverInvariantError(f"bags containing vertex {v} are not connected")


def find_k_prism(g: Graph, k: int) -> PrismWitness | None:
    """Exact backtracking search for an induced k-prism.

    Matched pairs are tried in degree-sum-descending order and extended
    with clique, matching and non-adjacency constraints on both sides;
    infeasible partial assignments are pruned by candidate counts.
    """
    if k < 1:
        raise ValueError("k must be positive")
    deg = [g.degree(v) for v in range(g.n)]
    pairs = [(a, b) for a in range(g.n) for b in iter_bits(g.adj[a])]
    # both orientations of an unordered pair sit next to each other
    pairs.sort(key=lambda p: (-(deg[p[0]] + deg[p[1]]), min(p), max(p), p[0]))

    def extend(idx: int, left: list[int], right: list[int], la: int, ra: int):
        if len(left) == k:
            return PrismWitness(tuple(left), tuple(right))
        need = k - len(left)
        if la.bit_count() < need or ra.bit_count() < need:
            return None
        for j in range(idx + 1, len(pairs)):
            a, b = pairs[j]
            if la >> a & 1 and ra >> b & 1:
                found = extend(
                    j,
                    left + [a],
                    right + [b],
                    la & g.adj[a] & ~g.adj[b] & ~(1 << b),
                    ra & g.adj[b] & ~g.adj[a] & ~(1 << a),
                )
                if found is not None:
                    return found
        return None

    for i, (a, b) in enumerate(pairs):
        if a > b:
            continue
        la = g.adj[a] & ~g.adj[b] & ~(1 << b)
        ra = g.adj[b] & ~g.adj[a] & ~(1 << a)
        found = extend(i, [a], [b], la, ra)
        if found is not None:
            if not found.is_valid(g):
                raise SolverInvariantError(f"prism candidate failed check: {found}")
            return found
    return None


def largest_prism(g: Graph, max_k: int) -> int:
    """Largest k <= max_k with an induced k-prism (0 if even k=1 is absent).

    A (k+1)-prism contains an induced k-prism, so the sweep may stop at the
    first miss.
    """
    best = 0
    for k in range(1, max_k + 1):
        if find_k_prism(g, k) is None:
            break
        best = k
    return best
