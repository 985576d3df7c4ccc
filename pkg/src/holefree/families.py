"""Instance builders: fixed families and seeded random generators."""

from __future__ import annotations

import random
from fractions import Fraction

from .errors import GenerationError
from .graph import Graph
from .recognition import find_k_prism, find_long_hole


def path_graph(t: int) -> Graph:
    return Graph(t, [(i, i + 1) for i in range(t - 1)])


def cycle_graph(t: int) -> Graph:
    if t < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(t, [(i, (i + 1) % t) for i in range(t)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star_graph(leaves: int) -> Graph:
    """Center 0 joined to vertices 1..leaves."""
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def prism_graph(k: int) -> Graph:
    """Two k-cliques 0..k-1 and k..2k-1 joined by the matching i, k+i."""
    if k < 1:
        raise ValueError("k must be positive")
    edges = [(i, j) for i in range(k) for j in range(i + 1, k)]
    edges += [(k + i, k + j) for i in range(k) for j in range(i + 1, k)]
    edges += [(i, k + i) for i in range(k)]
    return Graph(2 * k, edges)


def er_graph(n: int, p: float, rng: random.Random) -> Graph:
    edges = [
        (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p
    ]
    return Graph(n, edges)


def random_chordal(n: int, m_target: int, rng: random.Random) -> Graph:
    """Connected chordal graph built along a random elimination order.

    Each vertex picks a later anchor and a clique inside the anchor's
    later-neighborhood, which keeps every elimination step simplicial.
    The edge count approaches ``m_target`` but is capped by feasibility.
    """
    if n <= 1:
        return Graph(n)
    perm = list(range(n))
    rng.shuffle(perm)
    madj: list[set[int]] = [set() for _ in range(n)]  # in elimination positions
    budget = max(m_target, n - 1)
    # later positions first, so each anchor's clique already exists
    for i in range(n - 2, -1, -1):
        quota = max(1, round(budget / (i + 1)))
        anchor = rng.randrange(i + 1, n)
        base = sorted(madj[anchor])
        extra = rng.sample(base, min(len(base), max(0, quota - 1)))
        madj[i] = {anchor, *extra}
        budget -= len(madj[i])
    edges = [(perm[i], perm[j]) for i in range(n) for j in madj[i]]
    return Graph(n, edges)


def lhf_filter(n: int, p: float, rng: random.Random, max_tries: int = 200) -> Graph:
    """Sample random graphs until one has no long hole."""
    for _ in range(max_tries):
        g = er_graph(n, p, rng)
        if find_long_hole(g) is None:
            return g
    raise GenerationError(
        f"no long-hole-free sample in {max_tries} tries (n={n}, p={p})"
    )


def grow_lhf(
    g: Graph,
    extra_edges: int,
    rng: random.Random,
    forbid_prism: int | None = None,
    max_tries: int = 400,
) -> Graph:
    """Add random edges while staying long-hole-free (and optionally
    k-prism-free); every accepted edge is re-certified by the recognizers."""
    nonedges = [
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if not g.has_edge(u, v)
    ]
    rng.shuffle(nonedges)
    added = 0
    tries = 0
    for e in nonedges:
        if added >= extra_edges or tries >= max_tries:
            break
        tries += 1
        cand = g.with_edges([e])
        if find_long_hole(cand) is not None:
            continue
        if forbid_prism is not None and find_k_prism(cand, forbid_prism) is not None:
            continue
        g = cand
        added += 1
    return g


WEIGHT_STYLES = ("unit", "int", "decimal", "skew", "zeros")


def random_weights(g: Graph, rng: random.Random, style: str = "int") -> Graph:
    """Reweighted copy; weights stay exact nonnegative fractions."""
    if style == "unit":
        ws = [Fraction(1)] * g.n
    elif style == "int":
        ws = [Fraction(rng.randint(1, 10)) for _ in range(g.n)]
    elif style == "decimal":
        ws = [Fraction(rng.randint(1, 99), 10) for _ in range(g.n)]
    elif style == "skew":
        ws = [Fraction(rng.randint(1, 4) ** 3) for _ in range(g.n)]
    elif style == "zeros":
        ws = [Fraction(0 if rng.random() < 0.3 else rng.randint(1, 9)) for _ in range(g.n)]
    else:
        raise ValueError(f"unknown weight style {style!r}")
    return g.with_weights(ws)
