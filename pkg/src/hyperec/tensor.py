"""Adjacency tensor of a (possibly non-uniform) hypergraph.

The order-(s+1) tensor is never formed in production code. ``apply_adjacency``
evaluates ``A y^s`` edge by edge; ``materialize_dense``/``dense_apply`` build
and contract the literal tensor and exist only to cross-check it on tiny
inputs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .hypergraph import Hypergraph

DENSE_ENTRY_CAP = 10**8


@dataclass(frozen=True)
class TensorCoefficient:
    k: int
    s: int
    exact: Fraction

    @property
    def value(self) -> float:
        return float(self.exact)

    @property
    def sequence_count(self) -> int:
        """Index sequences per (edge, head vertex): the multinomial s! / ((s/(k-1))!)^(k-1)."""
        q = self.s // (self.k - 1)
        return math.factorial(self.s) // math.factorial(q) ** (self.k - 1)


def coefficient(k: int, s: int) -> TensorCoefficient:
    """Entry value ``[(s/(k-1))!]^(k-1) / s!`` for edges of size ``k``."""
    if k < 2 or s < 1:
        raise ValueError(f"need k >= 2 and s >= 1, got k={k}, s={s}")
    if s % (k - 1):
        raise ValueError(f"k - 1 = {k - 1} does not divide s = {s}")
    q = s // (k - 1)
    return TensorCoefficient(k, s, Fraction(math.factorial(q) ** (k - 1), math.factorial(s)))


def apply_adjacency(H: Hypergraph, y: np.ndarray) -> np.ndarray:
    """Return ``A_H y^s`` without building the tensor.

    Component i is the sum over edges e containing i of
    ``prod_{j in e, j != i} y_j ** (s / (|e| - 1))``, evaluated in the log domain
    through the per-edge log-sum, so the cost is linear in the total edge size.
    """
    y = np.asarray(y, dtype=float)
    if y.shape != (H.n,):
        raise ValueError(f"expected a vector of length {H.n}, got shape {y.shape}")
    if not np.all(y > 0):
        raise ValueError("apply_adjacency needs a strictly positive vector (log-domain evaluation)")
    if H.m == 0:
        raise ValueError("hypergraph has no edges")
    members, edge_of, sizes = H.flat
    lm = np.log(y)[members]
    edge_log = np.add.reduceat(lm, np.concatenate(([0], np.cumsum(sizes)[:-1])))
    scale = H.s / (sizes - 1)
    contrib = np.exp(scale[edge_of] * (edge_log[edge_of] - lm))
    # bincount accumulates sequentially in incidence order, so the sum order is fixed
    return np.bincount(members, weights=contrib, minlength=H.n)


@dataclass(frozen=True)
class DenseTensor:
    order: int
    dim: int
    entries: np.ndarray


def _distinct_arrangements(items: list[int]):
    """Distinct orderings of a multiset (sorted input)."""
    if not items:
        yield ()
        return
    for idx, v in enumerate(items):
        if idx and items[idx - 1] == v:
            continue
        rest = items[:idx] + items[idx + 1 :]
        for tail in _distinct_arrangements(rest):
            yield (v,) + tail


def materialize_dense(H: Hypergraph, cap: int = DENSE_ENTRY_CAP) -> DenseTensor:
    s, n = H.s, H.n
    size = n ** (s + 1)
    if size > cap:
        raise MemoryError(f"dense adjacency tensor needs {size} entries (cap {cap})")
    T = np.zeros((n,) * (s + 1))
    for e in H.edges:
        k = len(e)
        a = coefficient(k, s).value
        q = s // (k - 1)
        for head in e:
            multiset = sorted(v for v in e if v != head for _ in range(q))
            for tail in _distinct_arrangements(multiset):
                T[(head,) + tail] = a
    return DenseTensor(order=s + 1, dim=n, entries=T)


def dense_apply(T: DenseTensor, y: np.ndarray) -> np.ndarray:
    """Contract every index but the first with ``y``: the literal ``A y^(order-1)``."""
    y = np.asarray(y, dtype=float)
    if y.shape != (T.dim,):
        raise ValueError(f"tensor dimension {T.dim} does not match vector of shape {y.shape}")
    out = T.entries
    for _ in range(T.order - 1):
        out = out @ y
    return np.asarray(out, dtype=float)
