"""Seeded random hypergraphs, used for the bundled benchmark and in tests."""

from __future__ import annotations

from importlib import resources

import numpy as np

from .hypergraph import Hypergraph, read_hyperedge_list

BUNDLED = "synthetic_200.txt"


def random_connected_hypergraph(n: int, sizes=(2, 3, 4), extra_edges: int = 0, seed=None) -> Hypergraph:
    """Connected hypergraph on ``n`` labelled vertices ``1..n``.

    A random spanning structure attaches each new vertex to earlier ones
    through one edge of random size; ``extra_edges`` further edges are then
    drawn uniformly. Sizes larger than the available vertex count are
    truncated, so tiny ``n`` may yield a smaller cardinality set than asked.
    """
    if n < 2:
        raise ValueError("need at least 2 vertices")
    rng = np.random.default_rng(seed)
    sizes = list(sizes)
    perm = rng.permutation(n) + 1
    edges = []
    i = 1
    while i < n:
        k = int(rng.choice(sizes))
        # one new vertex plus k-1 old ones, or several new vertices sharing the edge
        new = min(int(rng.integers(1, k)), n - i)
        old_count = min(k - new, i)
        old = rng.choice(perm[:i], size=old_count, replace=False)
        edges.append(list(old) + list(perm[i : i + new]))
        i += new
    for _ in range(extra_edges):
        k = min(int(rng.choice(sizes)), n)
        edges.append(list(rng.choice(perm, size=k, replace=False)))
    return Hypergraph.from_edges(edges)


def random_graph(n: int, extra_edges: int = 0, seed=None) -> Hypergraph:
    """Connected 2-uniform hypergraph (an ordinary graph)."""
    return random_connected_hypergraph(n, sizes=(2,), extra_edges=extra_edges, seed=seed)


def bundled_path():
    return resources.files("hyperec") / "data" / BUNDLED


def load_bundled() -> Hypergraph:
    with resources.as_file(bundled_path()) as p:
        return read_hyperedge_list(p)
