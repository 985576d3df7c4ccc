"""Session-scoped seeded corpora shared by the unit and acceptance tests."""

from __future__ import annotations

import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from oracles import lhf_instance, random_graph  # noqa: E402

WEIGHT_STYLES = ("unit", "int", "decimal", "zeros")


@pytest.fixture(scope="session")
def random_corpus_12():
    """200 seeded random weighted graphs, n <= 12, densities 0.1..0.9."""
    rng = random.Random(1201)
    out = []
    for i in range(200):
        n = rng.randint(3, 12)
        p = 0.1 + 0.8 * (i % 9) / 8
        out.append(random_graph(rng, n, p, WEIGHT_STYLES[i % 4]))
    return out


@pytest.fixture(scope="session")
def random_corpus_14():
    """300 seeded random weighted graphs, n <= 14."""
    rng = random.Random(1401)
    out = []
    for i in range(300):
        n = rng.randint(4, 14)
        p = 0.1 + 0.8 * (i % 9) / 8
        out.append(random_graph(rng, n, p, WEIGHT_STYLES[i % 4]))
    return out


@pytest.fixture(scope="session")
def lhf_corpus_10():
    """25 certified long-hole-free weighted instances, n <= 10."""
    rng = random.Random(1001)
    return [lhf_instance(rng, rng.randint(5, 10), WEIGHT_STYLES[i % 4]) for i in range(25)]


@pytest.fixture(scope="session")
def lhf_corpus_12():
    """40 certified long-hole-free weighted instances, n <= 12."""
    rng = random.Random(1202)
    return [lhf_instance(rng, rng.randint(6, 12), WEIGHT_STYLES[i % 4]) for i in range(40)]


@pytest.fixture(scope="session")
def lhf_corpus_14():
    """60 certified long-hole-free weighted instances, n <= 14."""
    rng = random.Random(1402)
    return [lhf_instance(rng, rng.randint(6, 14), WEIGHT_STYLES[i % 4]) for i in range(60)]


@pytest.fixture(scope="session")
def lhf_corpus_16():
    """100 certified long-hole-free weighted instances, n <= 16."""
    rng = random.Random(1601)
    return [lhf_instance(rng, rng.randint(8, 16), WEIGHT_STYLES[i % 4]) for i in range(100)]


@pytest.fixture(scope="session")
def chordal_corpus_50():
    from holefree.families import random_chordal

    rng = random.Random(5001)
    return [random_chordal(rng.randint(4, 12), rng.randint(6, 24), rng) for _ in range(50)]
