"""Potential maximal cliques: testing, enumeration, blocks, domination."""

from itertools import combinations

import pytest

from holefree.bits import iter_bits, mask_of, to_tuple
from holefree.errors import PreconditionError
from holefree.families import (
    complete_bipartite,
    complete_graph,
    prism_graph,
)
from holefree.graph import Graph
from holefree.pmc import (
    block_family,
    certify_pmc,
    dominate_pmc,
    enumerate_pmcs,
    find_covering_component,
    find_separator_cover_pair,
    is_pmc,
)
from holefree.recognition import clique_tree, find_long_hole
from holefree.separators import analyze_separator, enumerate_minimal_separators

from oracles import c4, p4


def test_is_pmc_c4_triple():
    pmc = is_pmc(c4(), mask_of([0, 1, 2]))
    assert pmc is not None
    assert pmc.components == (1 << 3,)
    assert pmc.cover_of(0, 2) == 0  # the nonedge is covered by component {3}


def test_is_pmc_k3_whole():
    assert is_pmc(complete_graph(3), 0b111) is not None


def test_is_pmc_c4_edge_fails_condition_one():
    pmc, why = certify_pmc(c4(), mask_of([0, 1]))
    assert pmc is None and "whole set" in why


def test_is_pmc_uncovered_nonedge():
    g = Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])  # K4 minus (2, 3)
    pmc, why = certify_pmc(g, g.full_mask)  # no component covers the nonedge
    assert pmc is None and "not covered" in why


def test_enumerate_p4_chordal():
    g = p4()
    pmcs = enumerate_pmcs(g, enumerate_minimal_separators(g))
    assert [to_tuple(p.set) for p in pmcs] == [(0, 1), (1, 2), (2, 3)]


def test_enumerate_c4_four_triples():
    g = c4()
    expected = {p.set for p in enumerate_pmcs(g, mode="bruteforce")}
    assert expected == {
        mask_of([0, 1, 2]),
        mask_of([1, 2, 3]),
        mask_of([0, 2, 3]),
        mask_of([0, 1, 3]),
    }
    got = {p.set for p in enumerate_pmcs(g, enumerate_minimal_separators(g))}
    assert got == expected


def test_enumerate_k4_single():
    g = complete_graph(4)
    pmcs = enumerate_pmcs(g, enumerate_minimal_separators(g))
    assert [p.set for p in pmcs] == [g.full_mask]


def test_incremental_matches_bruteforce(random_corpus_12):
    for g in random_corpus_12[:60]:
        inc = {p.set for p in enumerate_pmcs(g, enumerate_minimal_separators(g))}
        brute = {p.set for p in enumerate_pmcs(g, mode="bruteforce")}
        assert inc == brute


def test_every_emitted_pmc_passes_test(random_corpus_12):
    for g in random_corpus_12[:25]:
        for p in enumerate_pmcs(g, enumerate_minimal_separators(g)):
            assert is_pmc(g, p.set) is not None


def test_pmc_components_are_full_blocks(random_corpus_12):
    # every component left by a PMC is a full component of its own neighborhood
    for g in random_corpus_12[:25]:
        for p in enumerate_pmcs(g, enumerate_minimal_separators(g)):
            for comp in p.components:
                sep = analyze_separator(g, g.neighborhood(comp))
                assert sep.is_minimal
                idx = sep.components.index(comp)
                assert idx in sep.full


def test_chordal_pmcs_equal_clique_tree_bags(chordal_corpus_50):
    for g in chordal_corpus_50[:20]:
        pmcs = {p.set for p in enumerate_pmcs(g, enumerate_minimal_separators(g))}
        assert pmcs == set(clique_tree(g).bags)


def test_block_family_c4():
    g = c4()
    blocks = block_family(g, enumerate_minimal_separators(g))
    assert blocks == [1 << 0, 1 << 1, 1 << 2, 1 << 3]


def test_block_family_p4():
    g = p4()
    blocks = block_family(g, enumerate_minimal_separators(g))
    assert set(blocks) == {1 << 0, mask_of([2, 3]), mask_of([0, 1]), 1 << 3}


def test_block_family_k4_empty():
    g = complete_graph(4)
    assert block_family(g, enumerate_minimal_separators(g)) == []


def test_covering_component_c4():
    g = c4()
    pmc = is_pmc(g, mask_of([0, 1, 2]))
    assert find_covering_component(g, pmc, mask_of([0, 2])) == 1 << 3


def test_covering_component_first_alternative():
    g = complete_graph(3)
    pmc = is_pmc(g, g.full_mask)
    assert find_covering_component(g, pmc, 1 << 0) is None


def test_covering_component_requires_subset():
    g = c4()
    pmc = is_pmc(g, mask_of([0, 1, 2]))
    with pytest.raises(PreconditionError):
        find_covering_component(g, pmc, 1 << 3)


def test_covering_component_independent_sets(lhf_corpus_10):
    for g in lhf_corpus_10:
        for pmc in enumerate_pmcs(g, enumerate_minimal_separators(g)):
            members = to_tuple(pmc.set)
            for r in range(2, len(members) + 1):
                for sub in combinations(members, r):
                    m = mask_of(sub)
                    if not g.is_independent(m):
                        continue
                    comp = find_covering_component(g, pmc, m)
                    assert comp is not None
                    assert m & ~g.neighborhood(comp) == 0


def test_cover_pair_c4():
    g = c4()
    s = analyze_separator(g, mask_of([0, 2]))
    a_idx = s.components.index(1 << 1)
    b_idx = s.components.index(1 << 3)
    a, b = find_separator_cover_pair(g, s, a_idx, b_idx, 0)
    assert (a, b) == (1, 3)
    covered = (g.adj[0] | 1) | g.adj[a] | g.adj[b]
    assert s.set & ~covered == 0


def test_cover_pair_k23():
    g = complete_bipartite(2, 3)
    assert find_long_hole(g) is None  # K2,3 only has 4-cycles
    s = analyze_separator(g, mask_of([0, 1]))
    assert s.is_minimal
    a, b = find_separator_cover_pair(g, s, s.full[0], s.full[1], 0)
    assert a == 2 and b == 3


def test_cover_pair_sweep(lhf_corpus_10):
    for g in lhf_corpus_10:
        for s in enumerate_minimal_separators(g):
            for ai in s.full:
                for bi in s.full:
                    if ai == bi:
                        continue
                    for x in iter_bits(s.set):
                        a, b = find_separator_cover_pair(g, s, ai, bi, x)
                        covered = g.adj[x] | (1 << x) | g.adj[a] | g.adj[b]
                        assert s.set & ~covered == 0
                        assert (1 << a) & s.components[ai] and g.has_edge(x, a)
                        assert (1 << b) & s.components[bi] and g.has_edge(x, b)


def test_dominate_clique_is_single_vertex(chordal_corpus_50):
    for g in chordal_corpus_50[:10]:
        for p in enumerate_pmcs(g, enumerate_minimal_separators(g)):
            dom = dominate_pmc(g, p)
            assert dom.method == "single-vertex" and len(dom.z) == 1


def test_dominate_c4_triple_by_middle_vertex():
    g = c4()
    dom = dominate_pmc(g, is_pmc(g, mask_of([0, 1, 2])))
    assert dom.z == (1,) and dom.method == "single-vertex"


def test_dominate_prism_never_falls_back():
    g = prism_graph(3)
    for p in enumerate_pmcs(g, mode="bruteforce"):
        dom = dominate_pmc(g, p)
        assert len(dom.z) <= 3
        assert dom.method != "brute-fallback"
        covered = g.neighborhood(mask_of(dom.z), closed=True)
        assert p.set & ~covered == 0


def test_dominate_lhf_corpus(lhf_corpus_12):
    for g in lhf_corpus_12[:20]:
        for p in enumerate_pmcs(g, enumerate_minimal_separators(g)):
            dom = dominate_pmc(g, p)
            assert len(dom.z) <= 3 and dom.method != "brute-fallback"
            assert p.set & ~g.neighborhood(mask_of(dom.z), closed=True) == 0


def test_lemma_full_component_dominates_independent_subsets(lhf_corpus_10):
    # every independent subset of a minimal separator is seen from one
    # vertex of each full component
    for g in lhf_corpus_10:
        for s in enumerate_minimal_separators(g):
            members = to_tuple(s.set)
            for idx in s.full:
                comp = s.components[idx]
                for r in range(1, len(members) + 1):
                    for sub in combinations(members, r):
                        m = mask_of(sub)
                        if not g.is_independent(m):
                            continue
                        assert any(
                            m & ~g.adj[a] == 0 for a in iter_bits(comp)
                        )


def test_incomplete_separator_input_detected():
    g = c4()
    seps = enumerate_minimal_separators(g)
    with pytest.raises(PreconditionError):
        enumerate_pmcs(g, seps[:1])
