"""Correlation, top-k overlap and robustness-under-attack harness."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

import numpy as np
from scipy.cluster.hierarchy import DisjointSet

from .centrality import CentralityVector
from .hypergraph import Hypergraph, component_labels, label_key

DEFAULT_KS = (5, 10, 15, 20, 25)


class UndefinedCorrelationError(ValueError):
    pass


@dataclass(frozen=True)
class CorrelationMatrix:
    methods: tuple[str, ...]
    values: np.ndarray
    labels: tuple[str, ...] = ()
    scores: np.ndarray | None = field(default=None, repr=False)  # vertices x methods


@dataclass(frozen=True)
class AttackCurve:
    strategy: str
    fractions: np.ndarray
    lcc: np.ndarray
    seed: int | None = None
    runs: int | None = None
    stderr: np.ndarray | None = field(default=None, repr=False)

    @property
    def points(self) -> list[tuple[float, float]]:
        return list(zip(self.fractions.tolist(), self.lcc.tolist()))


def pearson(u, v) -> float:
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    if u.shape != v.shape or u.ndim != 1 or len(u) < 2:
        raise ValueError("pearson needs two 1-d vectors of equal length >= 2")
    du = u - u.mean()
    dv = v - v.mean()
    su = np.sqrt(du @ du)
    sv = np.sqrt(dv @ dv)
    if su == 0 or sv == 0:
        raise UndefinedCorrelationError("correlation is undefined for a constant vector")
    return float(np.clip((du @ dv) / (su * sv), -1.0, 1.0))


def correlation_matrix(cvs: Sequence[CentralityVector]) -> CorrelationMatrix:
    if len(cvs) < 2:
        raise ValueError("need at least two centrality vectors")
    labels = cvs[0].labels
    if any(cv.labels != labels for cv in cvs):
        raise ValueError("centrality vectors are over different vertex sets")
    k = len(cvs)
    values = np.eye(k)
    for a, b in combinations(range(k), 2):
        values[a, b] = values[b, a] = pearson(cvs[a].scores, cvs[b].scores)
    scores = np.column_stack([np.asarray(cv.scores, dtype=float) for cv in cvs])
    return CorrelationMatrix(tuple(cv.method for cv in cvs), values, labels, scores)


def ranked_list(cv: CentralityVector) -> list[int]:
    """Vertex ids by descending score, ties by ascending label."""
    return sorted(range(len(cv.scores)), key=lambda i: (-cv.scores[i], label_key(cv.labels[i])))


def ranks(cv: CentralityVector) -> np.ndarray:
    """1-based rank position of every vertex under :func:`ranked_list`."""
    r = np.empty(len(cv.scores), dtype=np.int64)
    r[ranked_list(cv)] = np.arange(1, len(cv.scores) + 1)
    return r


def top_k(cv: CentralityVector, k: int) -> frozenset[int]:
    if not 1 <= k <= len(cv.scores):
        raise ValueError(f"k must be in 1..{len(cv.scores)}, got {k}")
    return frozenset(ranked_list(cv)[:k])


def jaccard(a, b) -> float:
    a, b = set(a), set(b)
    union = a | b
    if not union:
        raise ValueError("jaccard index is undefined for two empty sets")
    return len(a & b) / len(union)


def jaccard_table(cvs: Sequence[CentralityVector], ks=DEFAULT_KS) -> tuple[list[tuple[str, str, int, float]], list[str]]:
    """Rows ``(method_a, method_b, k, jaccard)`` over unordered method pairs.

    ``k`` larger than the vertex count is clamped to it; the returned notes
    record every clamp.
    """
    n = len(cvs[0].scores)
    notes = []
    eff = []
    for k in ks:
        if k > n:
            notes.append(f"k={k} clamped to n={n}")
        kk = min(k, n)
        if kk not in eff:
            eff.append(kk)
    tops = {cv.method: {k: top_k(cv, k) for k in eff} for cv in cvs}
    rows = []
    for a, b in combinations([cv.method for cv in cvs], 2):
        for k in eff:
            rows.append((a, b, k, jaccard(tops[a][k], tops[b][k])))
    return rows, notes


def lcc_fraction(H: Hypergraph) -> float:
    if H.n == 0:
        return 0.0
    _, comp = component_labels(H)
    return int(np.bincount(comp).max()) / H.n


def _lcc_sizes(H: Hypergraph, order: Sequence[int]) -> np.ndarray:
    """Absolute LCC size after removing the first t vertices of ``order``, for t = 0..n.

    Runs the removal backwards: vertices are re-inserted in reverse order and
    joined through every incident edge that already has another surviving
    member, which is exactly when the shrunken edge still has >= 2 vertices.
    """
    n = H.n
    ds = DisjointSet(range(n))
    alive = np.zeros(n, dtype=bool)
    sizes = np.zeros(n + 1, dtype=np.int64)
    best = 0
    for t in range(n, 0, -1):
        v = order[t - 1]
        alive[v] = True
        for j in H.incidence[v]:
            for u in H.edges[j]:
                if alive[u] and u != v:
                    ds.merge(u, v)
                    break
        best = max(best, ds.subset_size(v))
        sizes[t - 1] = best
    return sizes


def attack_curve(H: Hypergraph, order: Sequence[int], strategy: str = "") -> AttackCurve:
    """LCC decay under static removal in ``order`` (a permutation of the vertex ids)."""
    order = list(order)
    if sorted(order) != list(range(H.n)):
        raise ValueError("order must be a permutation of the vertex ids")
    sizes = _lcc_sizes(H, order)
    fractions = np.arange(H.n + 1) / H.n
    return AttackCurve(strategy, fractions, sizes / H.n)


def centrality_attack_curve(H: Hypergraph, cv: CentralityVector) -> AttackCurve:
    return attack_curve(H, ranked_list(cv), cv.method)


def random_attack_curve(H: Hypergraph, seed: int, runs: int = 100) -> AttackCurve:
    """Mean LCC curve over ``runs`` uniformly random removal orders.

    Run ``r`` draws from its own child of ``SeedSequence(seed)``, so results
    do not depend on evaluation order.
    """
    if runs < 1:
        raise ValueError("runs must be >= 1")
    children = np.random.SeedSequence(seed).spawn(runs)
    curves = np.empty((runs, H.n + 1))
    for r, child in enumerate(children):
        order = np.random.default_rng(child).permutation(H.n)
        curves[r] = _lcc_sizes(H, order.tolist()) / H.n
    mean = curves.mean(axis=0)
    se = curves.std(axis=0, ddof=1) / np.sqrt(runs) if runs > 1 else np.zeros(H.n + 1)
    return AttackCurve("random", np.arange(H.n + 1) / H.n, mean, seed=seed, runs=runs, stderr=se)
