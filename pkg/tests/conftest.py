"""Shared fixtures: named small graphs and a seeded random-bundle factory."""

from __future__ import annotations

import random

import pytest

from bundlefd import (
    Graph,
    build_bundle,
    complete,
    complete_minus_edge,
    cycle,
    graph_automorphisms,
    hypercube,
)

# the two hand-built witnesses of the kappa=2, lambda=3 phenomenon:
# two K4 blocks sharing an edge stay connected under any vertex+edge
# removal, two K4 blocks joined by three cross edges do not
GLUED_K4S = Graph(6, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3),
                      (2, 4), (2, 5), (3, 4), (3, 5), (4, 5)])
BRIDGED_K4S = Graph(8, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3),
                        (4, 5), (4, 6), (4, 7), (5, 6), (5, 7), (6, 7),
                        (0, 4), (0, 5), (1, 4)])

FAMILIES = {
    "C3": cycle(3), "C4": cycle(4), "C5": cycle(5), "C6": cycle(6),
    "K3": complete(3), "K4": complete(4), "K5": complete(5),
    "K4-e": complete_minus_edge(4), "Q2": hypercube(2), "Q3": hypercube(3),
}

_AUTOMORPHISMS: dict[str, tuple] = {}


def automorphisms_of(name: str) -> tuple:
    if name not in _AUTOMORPHISMS:
        _AUTOMORPHISMS[name] = graph_automorphisms(FAMILIES[name])
    return _AUTOMORPHISMS[name]


def random_bundle(rng: random.Random, max_total_vertices: int = 36):
    """Random fibre/base pair from the named families with random valid
    twists on a random subset of base edges."""
    while True:
        fibre_name = rng.choice(sorted(FAMILIES))
        base_name = rng.choice(sorted(FAMILIES))
        fibre, base = FAMILIES[fibre_name], FAMILIES[base_name]
        if fibre.n * base.n <= max_total_vertices:
            break
    autos = automorphisms_of(fibre_name)
    twists = {}
    for edge in base.edges:
        if rng.random() < 0.5:
            twists[edge] = rng.choice(autos)
    return build_bundle(base, fibre, twists), fibre_name, base_name


@pytest.fixture
def rng():
    return random.Random(20260810)
