"""Exact MWIS via dynamic programming over blocks and potential maximal cliques.

A block is a connected set D together with S = N(D).  Since every minimal
separator is a clique in some chordal completion, an optimum independent
set meets it in at most one vertex; the table is therefore indexed by the
block and a single trace vertex of S (or none).  The value of an entry is
the best weight achievable inside D compatibly with the trace; caps (PMCs
squeezed between S and S | D) split D into strictly smaller child blocks.

Every returned result re-checks its own witness: the set must be
independent and its weight must equal the reported optimum.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction

from .bits import iter_bits, mask_of, to_tuple
from .errors import OracleLimitError, PreconditionError, SolverInvariantError
from .graph import Graph
from .pmc import Pmc, block_family, enumerate_pmcs
from .separators import enumerate_minimal_separators, oracle_limit

_NONE = -1  # trace marker for "no separator vertex chosen"


@dataclass(frozen=True)
class Block:
    d: int  # connected vertex set
    s: int  # its open neighborhood
    id: int


@dataclass(frozen=True)
class SolveConfig:
    cap_seps: int = 0  # 0 = unlimited
    cap_pmcs: int = 0


@dataclass
class SolveStats:
    minseps: int = 0
    pmcs: int = 0
    blocks: int = 0
    table_entries: int = 0
    branches: int = 0
    time_ms: float = 0.0

    def merge(self, other: "SolveStats") -> None:
        self.minseps += other.minseps
        self.pmcs += other.pmcs
        self.blocks += other.blocks
        self.table_entries += other.table_entries
        self.branches += other.branches


@dataclass
class SolveResult:
    weight: Fraction
    vertices: tuple[int, ...]
    strategy: str
    stats: SolveStats = field(default_factory=SolveStats)

    @property
    def mask(self) -> int:
        return mask_of(self.vertices)


def check_independent_witness(g: Graph, weight: Fraction, witness: int) -> None:
    if not g.is_independent(witness):
        raise SolverInvariantError(f"witness {to_tuple(witness)} is not independent")
    if g.weight_of(witness) != weight:
        raise SolverInvariantError(
            f"witness weight {g.weight_of(witness)} != reported {weight}"
        )


def _better(current, candidate):
    """Maximize by value, tie-break by lexicographically smaller witness."""
    if current is None:
        return candidate
    if candidate[0] != current[0]:
        return candidate if candidate[0] > current[0] else current
    return candidate if candidate[1] < current[1] else current


def index_caps(g: Graph, pmcs: list[Pmc], blocks: list[Block]) -> list[list[int]]:
    """For each block (S, D): indices of PMCs squeezed between S and S | D."""
    caps: list[list[int]] = []
    for b in blocks:
        hull = b.s | b.d
        caps.append(
            [i for i, p in enumerate(pmcs) if p.set & ~hull == 0 and b.s & ~p.set == 0]
        )
    return caps


def solve_bt(g: Graph, pmcs: list[Pmc], blocks: list[int]) -> SolveResult:
    """Exact MWIS on a connected graph from its complete PMC family.

    ``blocks`` is the block family (component masks); neighborhoods and cap
    indexing are derived here.  Witnesses are assembled bottom-up with the
    canonical tie-break, so reruns are byte-identical.
    """
    if not g.is_connected():
        raise PreconditionError("solve_bt needs a connected graph")
    t0 = time.perf_counter()

    ordered = sorted(blocks, key=lambda d: (d.bit_count(), to_tuple(d)))
    blocks_ = [Block(d, g.neighborhood(d), i) for i, d in enumerate(ordered)]
    by_mask = {b.d: b.id for b in blocks_}
    caps = index_caps(g, pmcs, blocks_)

    # children per (block, cap): component masks of (S | D) - cap with traces
    tables: list[dict[int, tuple[Fraction, tuple[int, ...]] | None]] = []
    entries = 0

    def children_of(hull: int, cap: int) -> list[tuple[int, int]]:
        out = []
        for comp in g.components(hull & ~cap):
            cid = by_mask.get(comp)
            if cid is None:
                raise SolverInvariantError("block family misses a child component")
            out.append((cid, blocks_[cid].s))
        return out

    for b in blocks_:
        hull = b.s | b.d
        cap_children = [(pmcs[ci].set, children_of(hull, pmcs[ci].set)) for ci in caps[b.id]]
        table: dict[int, tuple[Fraction, tuple[int, ...]] | None] = {}
        for u in [_NONE] + list(iter_bits(b.s)):
            best = None
            for cap_mask, kids in cap_children:
                if u == _NONE:
                    t_options = [_NONE] + [
                        t for t in iter_bits(cap_mask & b.d) if g.weights[t] > 0
                    ]
                else:
                    t_options = [u]
                for t in t_options:
                    if t == _NONE:
                        value, witness = Fraction(0), ()
                    elif b.d >> t & 1:
                        value, witness = g.weights[t], (t,)
                    else:
                        value, witness = Fraction(0), ()
                    feasible = True
                    for cid, cs in kids:
                        trace = t if t != _NONE and cs >> t & 1 else _NONE
                        sub = tables[cid][trace]
                        if sub is None:
                            feasible = False
                            break
                        value += sub[0]
                        witness += sub[1]
                    if feasible:
                        best = _better(best, (value, tuple(sorted(witness))))
            table[u] = best
            entries += 1
        tables.append(table)

    best = None
    for p in pmcs:
        kid_list = []
        for comp in p.components:
            cid = by_mask.get(comp)
            if cid is None:
                raise SolverInvariantError("block family misses a top-level component")
            kid_list.append((cid, blocks_[cid].s))
        for t in [_NONE] + [t for t in iter_bits(p.set) if g.weights[t] > 0]:
            if t == _NONE:
                value, witness = Fraction(0), ()
            else:
                value, witness = g.weights[t], (t,)
            feasible = True
            for cid, cs in kid_list:
                trace = t if t != _NONE and cs >> t & 1 else _NONE
                sub = tables[cid][trace]
                if sub is None:
                    feasible = False
                    break
                value += sub[0]
                witness += sub[1]
            if feasible:
                best = _better(best, (value, tuple(sorted(witness))))
    if best is None:
        raise SolverInvariantError("no feasible cap chain; PMC family incomplete")

    weight, witness = best
    check_independent_witness(g, weight, mask_of(witness))
    stats = SolveStats(
        pmcs=len(pmcs),
        blocks=len(blocks_),
        table_entries=entries,
        time_ms=(time.perf_counter() - t0) * 1000.0,
    )
    return SolveResult(weight, witness, "bt", stats)


def solve_mwis(g: Graph, config: SolveConfig | None = None) -> SolveResult:
    """Exact MWIS driver: per connected component, run the full pipeline
    (minimal separators, block family, PMC family, block DP) and combine."""
    cfg = config or SolveConfig()
    t0 = time.perf_counter()
    stats = SolveStats()
    total = Fraction(0)
    chosen: list[int] = []
    for comp in g.components():
        if comp.bit_count() == 1:
            v = comp.bit_length() - 1
            if g.weights[v] > 0:
                total += g.weights[v]
                chosen.append(v)
            continue
        sub, vmap = g.induced(comp)
        minseps = enumerate_minimal_separators(sub, cap=cfg.cap_seps)
        pmcs = enumerate_pmcs(
            sub, minseps, mode="incremental", cap=cfg.cap_pmcs, cap_seps=cfg.cap_seps
        )
        blocks = block_family(sub, minseps)
        res = solve_bt(sub, pmcs, blocks)
        stats.merge(res.stats)
        stats.minseps += len(minseps)
        total += res.weight
        chosen.extend(vmap[v] for v in res.vertices)
    witness = tuple(sorted(chosen))
    check_independent_witness(g, total, mask_of(witness))
    stats.time_ms = (time.perf_counter() - t0) * 1000.0
    return SolveResult(total, witness, "bt", stats)


def brute_force_mwis(g: Graph, limit: int | None = None) -> SolveResult:
    """Oracle: memoized include/exclude search on the minimum-index vertex.

    Returns the canonical witness: the lexicographically smallest maximum
    weight independent set among those avoiding zero-weight vertices.
    """
    limit = oracle_limit(20) if limit is None else limit
    if g.n > limit:
        raise OracleLimitError(f"n={g.n} above oracle limit {limit}")
    t0 = time.perf_counter()
    memo: dict[int, tuple[Fraction, tuple[int, ...]]] = {}
    adj = g.adj
    weights = g.weights

    def best(mask: int) -> tuple[Fraction, tuple[int, ...]]:
        if mask == 0:
            return Fraction(0), ()
        cached = memo.get(mask)
        if cached is not None:
            return cached
        v = (mask & -mask).bit_length() - 1
        res = best(mask & ~(1 << v))
        if weights[v] > 0:
            sub = best(mask & ~(adj[v] | (1 << v)))
            inc = (weights[v] + sub[0], (v,) + sub[1])
            # on ties the include branch starts at the smallest vertex
            if inc[0] >= res[0]:
                res = inc
        memo[mask] = res
        return res

    weight, witness = best(g.full_mask)
    check_independent_witness(g, weight, mask_of(witness))
    stats = SolveStats(time_ms=(time.perf_counter() - t0) * 1000.0)
    return SolveResult(weight, witness, "brute", stats)
