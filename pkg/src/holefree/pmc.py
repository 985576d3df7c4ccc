"""Potential maximal cliques: testing, enumeration, blocks, and domination.

A vertex set is a potential maximal clique (PMC) when no component of its
removal sees all of it and every internal nonedge is covered by some
component.  Enumeration goes vertex by vertex over prefix graphs; each
candidate is certified by the test above, and completeness is pinned by
the brute-force oracle in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .bits import iter_bits, to_tuple
from .errors import (
    CapacityExceededError,
    NoDominationError,
    OracleLimitError,
    PreconditionError,
    WitnessNotFoundError,
)
from .graph import Graph
from .separators import Separator, analyze_separator, enumerate_minimal_separators, oracle_limit


@dataclass(frozen=True)
class Pmc:
    """A certified potential maximal clique.

    ``covers`` maps each internal nonedge (x, y) to the index of a
    component of g - set whose neighborhood contains both ends.
    """

    set: int
    components: tuple[int, ...]
    covers: tuple[tuple[tuple[int, int], int], ...]

    def cover_of(self, x: int, y: int) -> int:
        key = (min(x, y), max(x, y))
        for pair, idx in self.covers:
            if pair == key:
                return idx
        raise KeyError(key)


@dataclass(frozen=True)
class DominationResult:
    """A set Z of at most three vertices with the PMC inside N[Z]."""

    z: tuple[int, ...]
    method: str  # "single-vertex" | "lemma-chain" | "brute-fallback"
    trace: tuple[int, ...] | None = None  # (v, x, y) for the lemma chain


def certify_pmc(g: Graph, cand: int) -> tuple[Pmc | None, str | None]:
    """Certify the two PMC conditions; on failure name the violated one."""
    if cand == 0:
        return None, "empty set"
    comps = g.components(g.full_mask & ~cand)
    nbrs = []
    for comp in comps:
        nb = g.neighborhood(comp)
        if nb == cand:
            return None, "a component sees the whole set"
        nbrs.append(nb)
    covers = []
    for x in iter_bits(cand):
        targets = cand & ~g.adj[x] & ~((1 << (x + 1)) - 1)
        for y in iter_bits(targets):
            need = (1 << x) | (1 << y)
            for idx, nb in enumerate(nbrs):
                if nb & need == need:
                    covers.append(((x, y), idx))
                    break
            else:
                return None, f"nonedge ({x}, {y}) not covered by any component"
    return Pmc(cand, tuple(comps), tuple(covers)), None


def is_pmc(g: Graph, cand: int) -> Pmc | None:
    pmc, _ = certify_pmc(g, cand)
    return pmc


def enumerate_pmcs(
    g: Graph,
    minseps: list[Separator] | None = None,
    mode: str = "incremental",
    cap: int = 0,
    cap_seps: int = 0,
    limit: int | None = None,
) -> list[Pmc]:
    """The complete, canonically sorted PMC family of g.

    Incremental mode sweeps prefix graphs G_1..G_n.  Candidates for step i
    are the previous family, its members extended by the new vertex, each
    minimal separator of G_i extended by the new vertex, and S | (T & C)
    for minimal separators S, T of G_i and components C of G_i - S; each
    candidate is filtered through the PMC test.  Minimal separators of
    prefix graphs are recomputed per prefix; the caller-provided complete
    family is used for the final step.

    Bruteforce mode tests every nonempty subset (oracle, small n only).
    """
    if mode == "bruteforce":
        limit = oracle_limit(14) if limit is None else limit
        if g.n > limit:
            raise OracleLimitError(f"n={g.n} above oracle limit {limit}")
        out = []
        for cand in range(1, 1 << g.n):
            pmc = is_pmc(g, cand)
            if pmc is not None:
                out.append(pmc)
        out.sort(key=lambda p: to_tuple(p.set))
        return out
    if mode != "incremental":
        raise ValueError(f"unknown mode {mode!r}")
    if minseps is None:
        raise PreconditionError("incremental enumeration needs the minimal separators")

    minsep_masks = {s.set for s in minseps}
    family: list[int] = []
    for i in range(1, g.n + 1):
        gi = g.prefix(i)
        vbit = 1 << (i - 1)
        if i == 1:
            family = [vbit]
            continue
        seps_i = minseps if i == g.n else enumerate_minimal_separators(gi, cap=cap_seps)
        candidates: set[int] = set()
        for prev in family:
            candidates.add(prev)
            candidates.add(prev | vbit)
        comps_of: dict[int, list[int]] = {}
        for s in seps_i:
            candidates.add(s.set | vbit)
            comps_of[s.set] = list(s.components) if i == g.n else gi.components(
                gi.full_mask & ~s.set
            )
        for s in seps_i:
            for t in seps_i:
                if t.set == s.set:
                    continue
                for comp in comps_of[s.set]:
                    inter = t.set & comp
                    if inter:
                        candidates.add(s.set | inter)
        family = [cand for cand in sorted(candidates) if is_pmc(gi, cand) is not None]
        if cap and len(family) > cap:
            raise CapacityExceededError("potential maximal cliques", cap, len(family))

    out = []
    for cand in family:
        pmc = is_pmc(g, cand)
        if pmc is None:
            raise PreconditionError("prefix family member is not a PMC of the full graph")
        for comp in pmc.components:
            if g.neighborhood(comp) not in minsep_masks:
                raise PreconditionError(
                    "provided minimal separator family is incomplete"
                )
        out.append(pmc)
    out.sort(key=lambda p: to_tuple(p.set))
    return out


def block_family(g: Graph, minseps: list[Separator]) -> list[int]:
    """Deduplicated union of the components of g - S over all minimal S.

    Every component left by removing any PMC belongs to this family, which
    is what the dynamic program needs.
    """
    seen: set[int] = set()
    for sep in minseps:
        seen.update(sep.components)
    return sorted(seen, key=to_tuple)


def find_covering_component(g: Graph, pmc: Pmc, member_set: int) -> int | None:
    """A component of g - pmc whose neighborhood contains ``member_set``.

    Returns None in the degenerate single-vertex case where the PMC already
    sits inside that vertex's closed neighborhood.  Components are scanned
    in canonical order, so the choice is deterministic.
    """
    if member_set & ~pmc.set:
        raise PreconditionError("member set must lie inside the PMC")
    if member_set.bit_count() == 1:
        v = member_set.bit_length() - 1
        if pmc.set & ~(g.adj[v] | member_set) == 0:
            return None
    for comp in pmc.components:
        if member_set & ~g.neighborhood(comp) == 0:
            return comp
    raise WitnessNotFoundError(
        "no component covers the member set; input has a long hole",
        {"pmc": to_tuple(pmc.set), "members": to_tuple(member_set)},
    )


def find_separator_cover_pair(
    g: Graph, sep: Separator, a_index: int, b_index: int, anchor: int
) -> tuple[int, int]:
    """One vertex per full component so the separator sits in the joint reach.

    Searches all pairs from (N(anchor) & A) x (N(anchor) & B) in canonical
    order for a pair (a, b) with S inside N[anchor] | N(a) | N(b); existence
    is guaranteed on long-hole-free inputs.
    """
    if not sep.set >> anchor & 1:
        raise PreconditionError("anchor must belong to the separator")
    for idx in (a_index, b_index):
        if idx not in sep.full:
            raise PreconditionError("both chosen components must be full")
    cand_a = g.adj[anchor] & sep.components[a_index]
    cand_b = g.adj[anchor] & sep.components[b_index]
    base = g.adj[anchor] | (1 << anchor)
    b_ceiling = g.neighborhood(cand_b, closed=True)
    for a in iter_bits(cand_a):
        reach_a = base | g.adj[a]
        if sep.set & ~(reach_a | b_ceiling):
            continue
        for b in iter_bits(cand_b):
            if sep.set & ~(reach_a | g.adj[b]) == 0:
                return a, b
    raise WitnessNotFoundError(
        "no covering pair across the full components; input has a long hole",
        {"separator": to_tuple(sep.set), "anchor": anchor},
    )


def dominate_pmc(g: Graph, pmc: Pmc) -> DominationResult:
    """A set Z, |Z| <= 3, with the PMC inside N[Z].

    First scans for a single dominating member.  Otherwise, for each member
    v: take a component D covering the part of the PMC that v misses, note
    that N(D) is a minimal separator with D full, pick a second full
    component, and cover N(D) with one neighbor of v on each side.  On
    long-hole-free inputs some v succeeds; otherwise an exhaustive search
    over all 3-subsets runs and is reported as the fallback it is.
    """
    target = pmc.set
    for v in iter_bits(target):
        if target & ~(g.adj[v] | (1 << v)) == 0:
            return DominationResult((v,), "single-vertex")
    for v in iter_bits(target):
        try:
            missing = target & ~g.adj[v]
            comp = find_covering_component(g, pmc, missing)
            if comp is None:
                continue
            sep = analyze_separator(g, g.neighborhood(comp))
            if not sep.is_minimal:
                continue
            d_index = sep.components.index(comp)
            if d_index not in sep.full:
                continue
            b_index = next(i for i in sep.full if i != d_index)
            x, y = find_separator_cover_pair(g, sep, d_index, b_index, v)
            z = (1 << v) | (1 << x) | (1 << y)
            if target & ~g.neighborhood(z, closed=True) == 0:
                return DominationResult(tuple(sorted((v, x, y))), "lemma-chain", (v, x, y))
        except WitnessNotFoundError:
            continue
    for size in (1, 2, 3):
        for combo in combinations(range(g.n), size):
            z = 0
            for v in combo:
                z |= 1 << v
            if target & ~g.neighborhood(z, closed=True) == 0:
                return DominationResult(combo, "brute-fallback")
    raise NoDominationError(f"no 3-set dominates {to_tuple(target)}")
