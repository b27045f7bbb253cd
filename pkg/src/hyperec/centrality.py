"""HEC and the four baseline centralities (DC, HDC, CC, VC).

Real-valued scores (HEC, CC, VC) are scaled to unit (s+1)-norm with ``s`` taken
from the hypergraph, which is the convention under which the sunflower
scores of HEC, CC and VC all line up. DC and HDC stay raw integer counts.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

import numpy as np
from scipy import sparse

from .hypergraph import Hypergraph, neighbors
from .solver import DisconnectedError, SolverOptions, zqw_solve

METHODS = ("HEC", "DC", "HDC", "CC", "VC")
NEEDS_CONNECTED = frozenset({"HEC", "CC", "VC"})


@dataclass(frozen=True)
class CentralityVector:
    method: str
    scores: np.ndarray
    labels: tuple[str, ...]
    meta: dict = field(default_factory=dict, compare=False)

    def __len__(self):
        return len(self.scores)

    def as_dict(self) -> dict[str, float]:
        return dict(zip(self.labels, self.scores.tolist()))


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph as sorted neighbour tuples."""

    n: int
    adj: tuple[tuple[int, ...], ...]

    @classmethod
    def from_edges(cls, n: int, pairs) -> "Graph":
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for a, b in pairs:
            if a == b:
                continue
            nbrs[a].add(b)
            nbrs[b].add(a)
        return cls(n, tuple(tuple(sorted(x)) for x in nbrs))

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def degrees(self) -> np.ndarray:
        return np.array([len(a) for a in self.adj], dtype=np.int64)

    def to_sparse(self) -> sparse.csr_matrix:
        rows = np.repeat(np.arange(self.n), [len(a) for a in self.adj])
        cols = np.fromiter((j for a in self.adj for j in a), dtype=np.int64, count=len(rows))
        return sparse.csr_matrix((np.ones(len(rows)), (rows, cols)), shape=(self.n, self.n))

    def is_connected(self) -> bool:
        if self.n == 0:
            return False
        seen = {0}
        stack = [0]
        while stack:
            for j in self.adj[stack.pop()]:
                if j not in seen:
                    seen.add(j)
                    stack.append(j)
        return len(seen) == self.n


def normalize_to_unit_p_norm(v, p: float) -> np.ndarray:
    v = np.asarray(v, dtype=float)
    if p < 1:
        raise ValueError("p must be >= 1")
    top = np.max(np.abs(v)) if v.size else 0.0
    if top == 0:
        raise ValueError("cannot normalize the zero vector")
    w = v / top
    return w / np.sum(np.abs(w) ** p) ** (1.0 / p)


def perron_vector(G: Graph, tol: float = 1e-10, max_iter: int = 10000) -> tuple[np.ndarray, float, int, bool]:
    """Leading eigenvector of the adjacency matrix by power iteration on ``A + I``.

    Uses the same relative-gap stopping rule as the tensor solver. Returns
    ``(vector scaled to max 1, eigenvalue of A, iterations, converged)``.
    """
    A = G.to_sparse()
    x = np.ones(G.n)
    lo = hi = 1.0
    for t in range(1, max_iter + 1):
        z = A @ x + x
        lo, hi = float(np.min(z / x)), float(np.max(z / x))
        x = z / z.max()
        if (hi - lo) / hi <= tol:
            return x, hi - 1.0, t, True
    return x, hi - 1.0, max_iter, False


def hec(H: Hypergraph, opts: SolverOptions | None = None) -> CentralityVector:
    try:
        pair = zqw_solve(H, opts)
    except DisconnectedError as exc:
        raise DisconnectedError(f"HEC: {exc} (use largest_component)") from None
    meta = {
        "s": pair.s,
        "lambda": pair.lam,
        "iterations": pair.iterations,
        "gap": pair.gap,
        "converged": pair.converged,
    }
    return CentralityVector("HEC", pair.y, H.labels, meta)


def degree_centrality(H: Hypergraph) -> CentralityVector:
    scores = np.array([len(neighbors(H, i)) for i in range(H.n)], dtype=np.int64)
    return CentralityVector("DC", scores, H.labels)


def hyperdegree_centrality(H: Hypergraph) -> CentralityVector:
    scores = np.array([len(inc) for inc in H.incidence], dtype=np.int64)
    return CentralityVector("HDC", scores, H.labels)


def clique_expansion(H: Hypergraph) -> Graph:
    return Graph.from_edges(H.n, (p for e in H.edges for p in combinations(e, 2)))


def line_graph(H: Hypergraph) -> Graph:
    # two edges are adjacent iff they share a vertex, i.e. co-occur in some incidence list
    return Graph.from_edges(H.m, (p for inc in H.incidence for p in combinations(inc, 2)))


def _check_connected(G: Graph, what: str):
    if not G.is_connected():
        raise DisconnectedError(f"{what} is disconnected; its Perron vector is not unique (use largest_component)")


def cc_centrality(H: Hypergraph, opts: SolverOptions | None = None) -> CentralityVector:
    opts = opts or SolverOptions()
    G = clique_expansion(H)
    _check_connected(G, "clique expansion")
    x, lam, its, ok = perron_vector(G, opts.tolerance, opts.max_iterations)
    meta = {"s": H.s, "lambda": lam, "iterations": its, "converged": ok}
    return CentralityVector("CC", normalize_to_unit_p_norm(x, H.s + 1), H.labels, meta)


def vc_centrality(H: Hypergraph, opts: SolverOptions | None = None) -> CentralityVector:
    opts = opts or SolverOptions()
    L = line_graph(H)
    _check_connected(L, "line graph")
    c, lam, its, ok = perron_vector(L, opts.tolerance, opts.max_iterations)
    members, edge_of, sizes = H.flat
    share = (c / sizes)[edge_of]
    raw = np.bincount(members, weights=share, minlength=H.n)
    meta = {"s": H.s, "lambda": lam, "iterations": its, "converged": ok}
    return CentralityVector("VC", normalize_to_unit_p_norm(raw, H.s + 1), H.labels, meta)


_DISPATCH = {
    "HEC": hec,
    "DC": lambda H, opts=None: degree_centrality(H),
    "HDC": lambda H, opts=None: hyperdegree_centrality(H),
    "CC": cc_centrality,
    "VC": vc_centrality,
}


def compute(H: Hypergraph, method: str, opts: SolverOptions | None = None) -> CentralityVector:
    try:
        fn = _DISPATCH[method.upper()]
    except KeyError:
        raise ValueError(f"unknown method {method!r}; choose from {', '.join(METHODS)}") from None
    return fn(H, opts)
