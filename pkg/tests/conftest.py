"""Shared fixtures: the named example complexes and a seeded random corpus."""

import pytest

from simpcent import build_complex
from simpcent.errors import EmptyComplexError
from simpcent.generate import GeneratorConfig, generate_complex

FIXTURE_FACETS = {
    "K_tri": [(0, 1, 2)],
    "K_two": [(0, 1, 2), (1, 2, 3)],
    "K_bow": [(0, 1, 2), (2, 3, 4)],
    "K_tet": [(0, 1, 2, 3)],
    "K_wind": [(0, 1, 2), (0, 3, 4), (0, 5, 6)],
    "K_clust4": [(0, 1, 2), (1, 2, 3), (0, 1, 3)],
    "T_chain": [(0, 1, 2), (1, 2, 3), (2, 3, 4)],
}


def make(name):
    return build_complex(FIXTURE_FACETS[name])


@pytest.fixture(scope="session")
def K_tri():
    return make("K_tri")


@pytest.fixture(scope="session")
def K_two():
    return make("K_two")


@pytest.fixture(scope="session")
def K_bow():
    return make("K_bow")


@pytest.fixture(scope="session")
def K_tet():
    return make("K_tet")


@pytest.fixture(scope="session")
def K_wind():
    return make("K_wind")


@pytest.fixture(scope="session")
def K_clust4():
    return make("K_clust4")


@pytest.fixture(scope="session")
def T_chain():
    return make("T_chain")


@pytest.fixture(scope="session")
def all_fixtures():
    return {name: make(name) for name in FIXTURE_FACETS}


def corpus(count, seed0=0, max_vertices=12, max_dim=3, max_simplices=40):
    """Deterministic stream of small random complexes.

    Cycles through generator models and densities, skipping draws that are
    empty, zero-dimensional, or over the size caps, until ``count`` complexes
    have been collected.  The same arguments always yield the same list.
    """
    out = []
    s = seed0 * 100_003
    while len(out) < count:
        s += 1
        model = ("pure:1", "pure:2", "pure:2", "pure:3", "flag")[s % 5]
        n = 5 + s % (max_vertices - 4)
        prob = (0.15, 0.25, 0.35, 0.5)[(s // 5) % 4]
        try:
            c = generate_complex(
                GeneratorConfig(model=model, n=n, prob=prob, seed=s)
            )
        except EmptyComplexError:
            continue
        if not 1 <= c.dim <= max_dim:
            continue
        if len(c.vertices) > max_vertices or c.n_simplices > max_simplices:
            continue
        out.append(c)
    return out


@pytest.fixture(scope="session")
def small_corpus():
    """Twenty complexes for module-level randomized checks."""
    return corpus(20, seed0=7)
