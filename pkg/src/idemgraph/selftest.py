"""Recognizer self-test: fast decision procedures vs brute-force oracles.

Compares planar/outerplanar against the exhaustive minor search and
split/threshold/cograph against their forbidden-induced-subgraph oracles,
over every labeled graph with up to N vertices plus a seeded batch of
random graphs.
"""

from __future__ import annotations

import random

from .graphs import Graph, graph_from_edges
from .oracles import (
    cograph_oracle,
    kuratowski_oracle,
    outerplanar_oracle,
    split_oracle,
    threshold_oracle,
)
from .recognizers import (
    is_cograph,
    is_outerplanar,
    is_planar,
    is_split,
    is_threshold,
)

MAX_EXHAUSTIVE_N = 7
MAX_RANDOM_N = 12

_CHECKS = (
    ("planar", lambda g: is_planar(g).value, kuratowski_oracle),
    ("outerplanar", lambda g: is_outerplanar(g).value, outerplanar_oracle),
    ("split", lambda g: is_split(g).value, lambda g: split_oracle(g) is None),
    ("threshold", lambda g: is_threshold(g).value, lambda g: threshold_oracle(g) is None),
    ("cograph", lambda g: is_cograph(g).value, lambda g: cograph_oracle(g) is None),
)


def all_graphs(n: int):
    """Every labeled simple graph on exactly n vertices."""
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for mask in range(1 << len(pairs)):
        edges = [pairs[k] for k in range(len(pairs)) if (mask >> k) & 1]
        yield graph_from_edges(n, edges)


def random_graph(n: int, rng: random.Random) -> Graph:
    # Edge probability drawn per graph so both planar and dense non-planar
    # graphs show up in the sample.
    p = rng.uniform(0.1, 0.8)
    edges = [
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < p
    ]
    return graph_from_edges(n, edges)


def _compare(g: Graph, desc: str, disagreements: list[dict]):
    for prop, fast, oracle in _CHECKS:
        a = fast(g)
        b = oracle(g)
        if a != b:
            disagreements.append(
                {
                    "graph": desc,
                    "property": prop,
                    "recognizer": a,
                    "oracle": b,
                    "edges": sorted(g.edges()),
                }
            )


def run_selftest(
    exhaustive_n: int = 6,
    random_count: int = 500,
    random_n: int = 12,
    seed: int = 0,
) -> dict:
    if exhaustive_n > MAX_EXHAUSTIVE_N:
        raise ValueError(f"exhaustive_n must be <= {MAX_EXHAUSTIVE_N}")
    if random_n > MAX_RANDOM_N:
        raise ValueError(f"random_n must be <= {MAX_RANDOM_N}")
    disagreements: list[dict] = []
    graphs_checked = 0
    for n in range(exhaustive_n + 1):
        for g in all_graphs(n):
            _compare(g, f"exhaustive n={n} #{graphs_checked}", disagreements)
            graphs_checked += 1
    rng = random.Random(seed)
    for i in range(random_count):
        g = random_graph(random_n, rng)
        _compare(g, f"random n={random_n} #{i} seed={seed}", disagreements)
        graphs_checked += 1
    return {
        "exhaustive_n": exhaustive_n,
        "random_count": random_count,
        "random_n": random_n,
        "seed": seed,
        "graphs_checked": graphs_checked,
        "properties": [c[0] for c in _CHECKS],
        "disagreement_count": len(disagreements),
        "disagreements": disagreements,
    }
