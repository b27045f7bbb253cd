"""Hypergraph container, hyperedge-list parsing and structural queries.

Vertices are dense integer ids ``0..n-1``. Ids are assigned in natural label
order (integer-looking labels numerically, then the rest lexicographically),
so for parsed hypergraphs ordering by id matches ordering by label under
:func:`label_key`, the key every tie-break in the package uses.
"""

from __future__ import annotations

import logging
import math
import re
from dataclasses import dataclass, field
from functools import cached_property, reduce
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np
from scipy import sparse
from scipy.sparse.csgraph import connected_components

logger = logging.getLogger(__name__)

_SPLIT = re.compile(r"[\s,]+")
_EMPTY_FIELD = re.compile(r"^\s*,|,\s*,|,\s*$")


class ParseError(ValueError):
    """Raised for unreadable hyperedge-list input."""

    def __init__(self, message: str, lineno: int | None = None, source: str | None = None):
        self.lineno = lineno
        self.source = source
        where = ""
        if source is not None:
            where += f"{source}:"
        if lineno is not None:
            where += f"{lineno}:"
        super().__init__(f"{where} {message}" if where else message)


def label_key(label: str) -> tuple:
    try:
        return (0, int(label), label)
    except ValueError:
        return (1, 0, label)


@dataclass(frozen=True)
class Hypergraph:
    """Undirected hypergraph on vertices ``0..n-1``.

    ``edges`` holds sorted vertex tuples, deduplicated, each of size >= 2.
    ``labels[i]`` is the external name of vertex ``i``.
    """

    labels: tuple[str, ...]
    edges: tuple[tuple[int, ...], ...]
    dropped: int = field(default=0, compare=False)

    def __post_init__(self):
        n = len(self.labels)
        if len(set(self.labels)) != n:
            raise ValueError("vertex labels must be unique")
        seen = set()
        for e in self.edges:
            if len(e) < 2:
                raise ValueError(f"hyperedge {e} has fewer than 2 vertices")
            if any(a >= b for a, b in zip(e, e[1:])):
                raise ValueError(f"hyperedge {e} must be strictly increasing")
            if e[0] < 0 or e[-1] >= n:
                raise ValueError(f"hyperedge {e} references a vertex outside 0..{n - 1}")
            if e in seen:
                raise ValueError(f"duplicate hyperedge {e}")
            seen.add(e)

    @classmethod
    def from_edges(cls, edges: Iterable[Iterable], dropped: int = 0) -> "Hypergraph":
        """Build from edges given as collections of labels (any hashable printed via ``str``).

        Within-edge duplicates and duplicate edges collapse; edges left with fewer
        than two distinct vertices are dropped and counted.
        """
        label_sets = []
        for e in edges:
            members = frozenset(str(v) for v in e)
            if len(members) < 2:
                dropped += 1
                continue
            label_sets.append(members)
        labels = sorted({v for e in label_sets for v in e}, key=label_key)
        index = {lab: i for i, lab in enumerate(labels)}
        out, seen = [], set()
        for members in label_sets:
            t = tuple(sorted(index[v] for v in members))
            if t not in seen:
                seen.add(t)
                out.append(t)
        return cls(tuple(labels), tuple(out), dropped=dropped)

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """Per-vertex tuple of incident edge indices, in edge order."""
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for j, e in enumerate(self.edges):
            for v in e:
                inc[v].append(j)
        return tuple(tuple(x) for x in inc)

    @cached_property
    def cardinality_set(self) -> tuple[int, ...]:
        return tuple(sorted({len(e) for e in self.edges}))

    @property
    def rank(self) -> int:
        return max(self.cardinality_set) if self.edges else 0

    @cached_property
    def s(self) -> int:
        """lcm of (l - 1) over the cardinality set; order of the adjacency tensor minus one."""
        if not self.edges:
            raise ValueError("s is undefined for a hypergraph without edges")
        return reduce(math.lcm, (l - 1 for l in self.cardinality_set), 1)

    @cached_property
    def flat(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Flattened membership arrays ``(members, edge_of, sizes)``.

        ``members`` lists every (edge, vertex) incidence in edge order and
        ``edge_of[k]`` is the edge index of ``members[k]``.
        """
        sizes = np.array([len(e) for e in self.edges], dtype=np.int64)
        members = np.fromiter((v for e in self.edges for v in e), dtype=np.int64, count=int(sizes.sum()))
        edge_of = np.repeat(np.arange(self.m, dtype=np.int64), sizes)
        return members, edge_of, sizes

    def label_of(self, i: int) -> str:
        return self.labels[i]

    def id_of(self, label) -> int:
        return self._index[str(label)]

    @cached_property
    def _index(self) -> dict[str, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    def edge_labels(self) -> list[tuple[str, ...]]:
        return [tuple(self.labels[v] for v in e) for e in self.edges]


@dataclass(frozen=True)
class HypergraphStats:
    n: int
    m: int
    cardinality_set: tuple[int, ...]
    rank: int
    s: int
    connected: bool
    components: int

    def summary(self) -> str:
        sizes = ",".join(str(k) for k in self.cardinality_set)
        return (
            f"n={self.n} m={self.m} sizes={{{sizes}}} rank={self.rank} s={self.s} "
            f"connected={str(self.connected).lower()} components={self.components}"
        )


def parse_hyperedge_list(text: str, source: str | None = None) -> Hypergraph:
    """Parse one hyperedge per line; tokens split on whitespace and/or commas.

    Blank lines and lines starting with ``#`` are skipped.
    """
    edges = []
    dropped = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if any(not (c.isprintable() or c.isspace()) for c in line):
            raise ParseError("line contains control characters", lineno, source)
        if _EMPTY_FIELD.search(line):
            raise ParseError(f"empty field in {raw!r}", lineno, source)
        tokens = _SPLIT.split(line)
        if len(set(tokens)) < 2:
            dropped += 1
            continue
        edges.append(tokens)
    if dropped:
        logger.warning("dropped %d line(s) with fewer than 2 distinct vertices", dropped)
    if not edges:
        raise ParseError("no hyperedges found in input", None, source)
    return Hypergraph.from_edges(edges, dropped=dropped)


def read_hyperedge_list(path: str | Path) -> Hypergraph:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        raise ParseError(f"not valid UTF-8 ({exc.reason})", None, str(path)) from exc
    return parse_hyperedge_list(text, source=str(path))


def serialize(H: Hypergraph) -> str:
    """Inverse of :func:`parse_hyperedge_list` (isolated vertices are not representable)."""
    return "".join(" ".join(e) + "\n" for e in H.edge_labels())


def component_labels(H: Hypergraph) -> tuple[int, np.ndarray]:
    """Connected components via the vertex/hyperedge bipartite incidence graph."""
    if H.n == 0:
        return 0, np.zeros(0, dtype=np.int64)
    members, edge_of, _ = H.flat
    # vertices are nodes 0..n-1, hyperedges are nodes n..n+m-1
    inc = sparse.coo_matrix(
        (np.ones(len(members)), (members, H.n + edge_of)), shape=(H.n + H.m, H.n + H.m)
    )
    count, comp = connected_components(inc, directed=False)
    comp = comp[: H.n]
    # renumber so component ids follow the smallest vertex id they contain
    _, first, comp = np.unique(comp, return_index=True, return_inverse=True)
    rank = np.empty(len(first), dtype=np.int64)
    rank[np.argsort(first)] = np.arange(len(first))
    return len(first), rank[comp]


def is_connected(H: Hypergraph) -> bool:
    return component_labels(H)[0] == 1


def stats(H: Hypergraph) -> HypergraphStats:
    if H.m == 0:
        raise ValueError("stats requires a hypergraph with at least one hyperedge")
    count, _ = component_labels(H)
    return HypergraphStats(
        n=H.n,
        m=H.m,
        cardinality_set=H.cardinality_set,
        rank=H.rank,
        s=H.s,
        connected=count == 1,
        components=count,
    )


def induced(H: Hypergraph, keep: Iterable[int]) -> Hypergraph:
    """Sub-hypergraph on ``keep`` with the edges lying entirely inside it."""
    keep = sorted(set(keep))
    remap = {v: i for i, v in enumerate(keep)}
    edges = tuple(tuple(remap[v] for v in e) for e in H.edges if all(v in remap for v in e))
    return Hypergraph(tuple(H.labels[v] for v in keep), edges)


def largest_component(H: Hypergraph) -> Hypergraph:
    """Induced sub-hypergraph on the largest component.

    Ties go to the component holding the smallest vertex id (smallest label).
    """
    count, comp = component_labels(H)
    if count <= 1:
        return H
    sizes = np.bincount(comp)
    # components are numbered by first vertex, so argmax already picks the smallest-label tie
    best = int(np.argmax(sizes))
    return induced(H, np.flatnonzero(comp == best).tolist())


def neighbors(H: Hypergraph, i: int) -> frozenset[int]:
    if not 0 <= i < H.n:
        raise IndexError(f"vertex {i} out of range")
    return frozenset(v for j in H.incidence[i] for v in H.edges[j] if v != i)


def remove_vertices(H: Hypergraph, victims: Iterable[int]) -> Hypergraph:
    """Delete vertices, shrinking edges to their survivors.

    Shrunken edges with fewer than two vertices vanish and coinciding shrunken
    edges collapse. Survivors keep their labels, isolated ones included.
    """
    victims = set(victims)
    keep = [v for v in range(H.n) if v not in victims]
    remap = {v: i for i, v in enumerate(keep)}
    out, seen = [], set()
    for e in H.edges:
        t = tuple(remap[v] for v in e if v in remap)
        if len(t) >= 2 and t not in seen:
            seen.add(t)
            out.append(t)
    return Hypergraph(tuple(H.labels[v] for v in keep), tuple(out))


def filter_sizes(H: Hypergraph, sizes: Iterable[int]) -> Hypergraph:
    """Keep only hyperedges whose cardinality is in ``sizes``; orphaned vertices go too."""
    allowed = set(sizes)
    kept = [e for e in H.edges if len(e) in allowed]
    if not kept:
        raise ValueError(f"no hyperedges of size {sorted(allowed)}")
    used = sorted({v for e in kept for v in e})
    remap = {v: i for i, v in enumerate(used)}
    return Hypergraph(
        tuple(H.labels[v] for v in used),
        tuple(tuple(remap[v] for v in e) for e in kept),
        dropped=H.dropped,
    )


def relabel(H: Hypergraph, perm: Sequence[int]) -> Hypergraph:
    """Move vertex ``i`` to position ``perm[i]``; labels travel with the vertex.

    The result generally breaks the id-follows-label-order convention of parsed
    hypergraphs, which is fine for anything that does not tie-break by id.
    """
    labels = [None] * H.n
    for i, p in enumerate(perm):
        labels[p] = H.labels[i]
    edges = tuple(tuple(sorted(perm[v] for v in e)) for e in H.edges)
    return Hypergraph(tuple(labels), edges)
