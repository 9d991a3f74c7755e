"""Search for small graphs showing that kappa and lambda do not decide
mixed connectivity.

Target: two graphs, both with kappa = 2 and lambda = 3, where one stops
being connected after removing some single vertex plus single edge and
the other survives every such removal. Their existence means mixed
connectivity genuinely needs the exhaustive check; no formula in kappa
and lambda can separate them.

The search is seeded random generation over graphs with at most
`max_vertices` vertices, pruned by degree sequence (lambda = 3 forces
minimum degree >= 3) before any connectivity work. A fixed seed makes the
result reproducible byte for byte.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .graphs import (
    Graph,
    edge_connectivity,
    is_connected,
    is_mixed_connected,
    minimum_degree,
    vertex_connectivity,
)


@dataclass(frozen=True)
class GapSearchResult:
    """The two witnesses of the phenomenon plus search statistics."""

    fragile: Graph        # kappa=2, lambda=3, not (1,1)+connected
    robust: Graph         # kappa=2, lambda=3, (1,1)+connected
    attempts: int
    seed: int


def _random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < p
    ]
    return Graph(n, edges)


def find_mixed_connectivity_gap(max_vertices: int = 8, *, seed: int = 2718,
                                max_attempts: int = 500_000) -> GapSearchResult:
    """First fragile and robust instance found by the seeded stream.

    Candidates need kappa = 2 and lambda = 3 before the (1, 1) check
    decides the class. Graphs below 6 vertices cannot have this profile
    (minimum degree 3 forces n >= 6... and kappa < lambda rules out the
    symmetric small cases), so sampling starts at 6 vertices.
    """
    if max_vertices < 6:
        raise ValueError("the kappa=2, lambda=3 profile needs at least 6 vertices")
    rng = random.Random(seed)
    fragile = None
    robust = None
    attempts = 0
    while attempts < max_attempts and (fragile is None or robust is None):
        attempts += 1
        n = rng.randrange(6, max_vertices + 1)
        p = rng.uniform(0.35, 0.75)
        g = _random_graph(rng, n, p)
        if minimum_degree(g) < 3 or not is_connected(g):
            continue
        if vertex_connectivity(g) != 2 or edge_connectivity(g) != 3:
            continue
        if is_mixed_connected(g, 1, 1):
            if robust is None:
                robust = g
        elif fragile is None:
            fragile = g
    if fragile is None or robust is None:
        raise RuntimeError(
            f"gap search exhausted {max_attempts} attempts "
            f"(found fragile={fragile is not None}, robust={robust is not None})"
        )
    return GapSearchResult(fragile=fragile, robust=robust, attempts=attempts,
                           seed=seed)
