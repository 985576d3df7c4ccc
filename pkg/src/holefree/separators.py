"""Minimal-separator machinery.

Full-component analysis, the complete close-neighborhood enumeration,
the brute-force oracle, and the bounded witness that covers a separator
from inside one full component.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass

from .bits import iter_bits, to_tuple
from .errors import (
    CapacityExceededError,
    OracleLimitError,
    PreconditionError,
    WitnessNotFoundError,
)
from .graph import Graph


def oracle_limit(default: int) -> int:
    """Size limit for brute-force oracles; HOLEFREE_ORACLE_LIMIT overrides."""
    env = os.environ.get("HOLEFREE_ORACLE_LIMIT")
    return int(env) if env else default


@dataclass(frozen=True)
class Separator:
    """A vertex set with the component decomposition of the rest of the graph."""

    set: int
    components: tuple[int, ...]
    full: tuple[int, ...]  # indices of components whose neighborhood is the whole set

    @property
    def is_minimal(self) -> bool:
        return len(self.full) >= 2

    @property
    def excess_full(self) -> int:
        """Number of full components beyond the first; positive iff minimal."""
        return max(0, len(self.full) - 1)


def analyze_separator(g: Graph, sep: int) -> Separator:
    """Decompose g minus sep into components and mark the full ones."""
    comps = g.components(g.full_mask & ~sep)
    full = tuple(
        i for i, c in enumerate(comps) if g.neighborhood(c) == sep
    )
    return Separator(sep, tuple(comps), full)


def _is_minimal_separator(g: Graph, sep: int) -> bool:
    rest = g.full_mask & ~sep
    full_count = 0
    for comp in g.components(rest):
        if g.neighborhood(comp) == sep:
            full_count += 1
            if full_count >= 2:
                return True
    return False


def enumerate_minimal_separators(g: Graph, cap: int = 0) -> list[Separator]:
    """All minimal separators of g, canonically sorted and duplicate free.

    Seeds with N(C) for every component C of g - N[v], then expands each
    discovered separator S by N(C) for components C of g - (S | N[x]) over
    x in S.  Every candidate is re-validated before emission.  With cap > 0
    the search aborts once more than cap separators are found.
    """
    seen: set[int] = set()
    out: list[Separator] = []
    queue: deque[Separator] = deque()

    def consider(mask: int) -> None:
        if mask in seen:
            return
        seen.add(mask)
        sep = analyze_separator(g, mask)
        if sep.is_minimal:
            out.append(sep)
            if cap and len(out) > cap:
                raise CapacityExceededError("minimal separators", cap, len(out))
            queue.append(sep)

    for v in range(g.n):
        closed = g.adj[v] | (1 << v)
        for comp in g.components(g.full_mask & ~closed):
            consider(g.neighborhood(comp))

    while queue:
        sep = queue.popleft()
        for x in iter_bits(sep.set):
            removed = sep.set | g.adj[x] | (1 << x)
            for comp in g.components(g.full_mask & ~removed):
                consider(g.neighborhood(comp))

    out.sort(key=lambda s: to_tuple(s.set))
    return out


def brute_force_minimal_separators(g: Graph, limit: int | None = None) -> list[Separator]:
    """Oracle: scan all vertex subsets for two or more full components."""
    limit = oracle_limit(14) if limit is None else limit
    if g.n > limit:
        raise OracleLimitError(f"n={g.n} above oracle limit {limit}")
    out = []
    for mask in range(1 << g.n):
        if _is_minimal_separator(g, mask):
            out.append(analyze_separator(g, mask))
    out.sort(key=lambda s: to_tuple(s.set))
    return out


def component_cover_witness(
    g: Graph,
    sep: Separator,
    comp_index: int,
    v: int,
    size_bound: int | None = None,
) -> int:
    """A small set Z inside one full component A with S contained in N(Z).

    Requires v in A, A full along with at least one other component, and
    every component of g[A] - {v} missing some separator vertex.  The
    construction keeps v, takes the component of g[A] - {v} with the
    largest neighborhood trace on S - N(v), and greedily shrinks its
    N(v)-boundary to an inclusion-minimal cover of that trace.

    On long-hole-free inputs the witness always exists; when the needed
    structure is absent (so the input has a long hole) or ``size_bound``
    is exceeded, WitnessNotFoundError carries diagnostics.
    """
    if not (0 <= comp_index < len(sep.components)):
        raise PreconditionError("component index out of range")
    comp = sep.components[comp_index]
    if comp_index not in sep.full:
        raise PreconditionError("chosen component is not full for the separator")
    if len(sep.full) < 2:
        raise PreconditionError("separator lacks a second full component")
    if not comp >> v & 1:
        raise PreconditionError(f"vertex {v} is not in the chosen component")

    sub_comps = g.components(comp & ~(1 << v))
    for sub in sub_comps:
        if sep.set & ~g.neighborhood(sub) == 0:
            raise PreconditionError(
                "a component of the punctured side already sees the whole separator"
            )

    uncovered = sep.set & ~g.adj[v]  # separator vertices v does not see
    if uncovered == 0:
        return 1 << v

    traces = [g.neighborhood(sub) & uncovered for sub in sub_comps]
    if not traces:
        raise WitnessNotFoundError(
            "no sub-component can cover the unseen separator vertices",
            {"separator": to_tuple(sep.set), "vertex": v},
        )
    best = max(range(len(traces)), key=lambda i: (traces[i].bit_count(), -i))
    if any(t & ~traces[best] for t in traces):
        raise WitnessNotFoundError(
            "sub-component traces are not nested; input has a long hole",
            {"separator": to_tuple(sep.set), "vertex": v},
        )
    boundary = sub_comps[best] & g.adj[v]
    if uncovered & ~g.neighborhood(boundary):
        raise WitnessNotFoundError(
            "near boundary cannot cover the separator; input has a long hole",
            {"separator": to_tuple(sep.set), "vertex": v},
        )
    cover = boundary
    for z in iter_bits(boundary):
        trial = cover & ~(1 << z)
        if uncovered & ~g.neighborhood(trial) == 0:
            cover = trial
    witness = cover | (1 << v)
    if sep.set & ~g.neighborhood(witness):
        raise WitnessNotFoundError(
            "constructed witness misses separator vertices",
            {"separator": to_tuple(sep.set), "witness": to_tuple(witness)},
        )
    if size_bound is not None and witness.bit_count() > size_bound:
        raise WitnessNotFoundError(
            f"witness larger than bound {size_bound}; input has a large prism",
            {"witness": to_tuple(witness), "bound": size_bound},
        )
    return witness
