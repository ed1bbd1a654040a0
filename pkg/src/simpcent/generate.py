"""Seeded random complex generators.

Two models: ``pure:D`` draws every (D+1)-subset of the vertex set as a facet
independently with the given probability; ``flag`` draws a binomial random
graph and takes its clique complex.  Identical configuration always yields
the identical complex.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import networkx as nx
import numpy as np

from .core import SimplicialComplex, build_complex
from .errors import ArgumentError, EmptyComplexError

ALGORITHM_VERSION = "1"
MODELS = ("pure", "flag")


@dataclass(frozen=True)
class GeneratorConfig:
    """Parameters of one random draw.

    ``model`` is "flag" or "pure:D" (bare "pure" means D = 2); ``n`` is the
    vertex count, ``prob`` the inclusion probability, ``seed`` any 64-bit
    integer.
    """

    model: str
    n: int
    prob: float
    seed: int = 0

    def parsed_model(self) -> tuple[str, int | None]:
        name, _, arg = self.model.partition(":")
        if name == "flag":
            if arg:
                raise ArgumentError("flag model takes no dimension argument")
            return "flag", None
        if name == "pure":
            try:
                d = 2 if not arg else int(arg)
            except ValueError:
                raise ArgumentError(f"bad pure model dimension {arg!r}") from None
            if d < 0:
                raise ArgumentError(f"pure model dimension must be >= 0, got {d}")
            return "pure", d
        raise ArgumentError(f"model must be one of {MODELS}, got {self.model!r}")

    def metadata(self) -> dict:
        return {
            "generator": f"simpcent-{self.parsed_model()[0]}",
            "version": ALGORITHM_VERSION,
            "model": self.model,
            "n": self.n,
            "prob": self.prob,
            "seed": self.seed,
        }


def generate_complex(cfg: GeneratorConfig) -> SimplicialComplex:
    """Draw one complex; raises EmptyComplexError when nothing is drawn."""
    kind, d = cfg.parsed_model()
    if cfg.n < 1:
        raise ArgumentError(f"n must be >= 1, got {cfg.n}")
    if not 0.0 <= cfg.prob <= 1.0:
        raise ArgumentError(f"prob must lie in [0, 1], got {cfg.prob}")
    rng = np.random.default_rng(cfg.seed)
    if kind == "pure":
        facets = [
            sub
            for sub in itertools.combinations(range(cfg.n), d + 1)
            if rng.random() < cfg.prob
        ]
    else:
        graph = nx.gnp_random_graph(cfg.n, cfg.prob, seed=rng)
        facets = [tuple(sorted(cl)) for cl in nx.find_cliques(graph)]
        facets.sort()
    if not facets:
        raise EmptyComplexError(
            f"model {cfg.model} with n={cfg.n}, prob={cfg.prob} drew no simplices"
        )
    return build_complex(facets)
