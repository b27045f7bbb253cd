"""Shifted power iteration for the Perron eigenpair of the adjacency tensor.

The iteration runs on ``B = A + I`` (the identity-tensor shift keeps the
iteration primitive on bipartite-like structures) and tracks the
Collatz-Wielandt bounds ``min_i x_i / y_i^s`` and ``max_i x_i / y_i^s``, which
bracket the spectral radius of ``B`` and close monotonically.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np

from .hypergraph import Hypergraph, is_connected
from .tensor import apply_adjacency

logger = logging.getLogger(__name__)


class DisconnectedError(ValueError):
    pass


@dataclass(frozen=True)
class SolverOptions:
    tolerance: float = 1e-10
    max_iterations: int = 10000
    initial_vector: np.ndarray | None = None

    def __post_init__(self):
        if not self.tolerance > 0:
            raise ValueError("tolerance must be positive")
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be at least 1")
        if self.initial_vector is not None and not np.all(np.asarray(self.initial_vector) > 0):
            raise ValueError("initial vector must be strictly positive")


@dataclass(frozen=True)
class EigenPair:
    lam: float
    y: np.ndarray
    iterations: int
    gap: float
    converged: bool
    s: int
    lower: float
    upper: float
    # (lower, upper) bounds on rho(B) per iteration, shift included
    history: tuple[tuple[float, float], ...] = field(default=(), repr=False)


def _bounds(x: np.ndarray, ys: np.ndarray) -> tuple[float, float]:
    ratio = x / ys
    return float(ratio.min()), float(ratio.max())


def zqw_solve(H: Hypergraph, opts: SolverOptions | None = None) -> EigenPair:
    """Perron eigenpair ``(rho(A_H), y)`` with ``||y||_{s+1} = 1``.

    Stops once ``(upper - lower) / upper <= tolerance``. On hitting
    ``max_iterations`` the last iterate comes back with ``converged=False``.
    The reported eigenvalue is the final upper bound minus the unit shift.
    """
    opts = opts or SolverOptions()
    if H.m == 0:
        raise ValueError("hypergraph has no edges")
    if not is_connected(H):
        raise DisconnectedError(
            "hypergraph is disconnected: the adjacency tensor is weakly reducible and a unique "
            "positive eigenvector is not guaranteed; restrict to the largest component first"
        )
    s = H.s
    if opts.initial_vector is None:
        y = np.ones(H.n)
    else:
        y = np.asarray(opts.initial_vector, dtype=float).copy()
        if y.shape != (H.n,):
            raise ValueError(f"initial vector must have length {H.n}")
        y /= y.max()

    ys = y**s
    x = apply_adjacency(H, y) + ys
    history = []
    converged = False
    lo = hi = gap = float("nan")
    t = 0
    while t < opts.max_iterations:
        t += 1
        y = x ** (1.0 / s)
        y /= y.max()
        ys = y**s
        x = apply_adjacency(H, y) + ys
        lo, hi = _bounds(x, ys)
        history.append((lo, hi))
        gap = (hi - lo) / hi
        if gap <= opts.tolerance:
            converged = True
            break
    if not converged:
        logger.warning("power iteration stopped after %d iterations with gap %.3g", t, gap)

    y = y / np.sum(y ** (s + 1)) ** (1.0 / (s + 1))
    return EigenPair(
        lam=hi - 1.0,
        y=y,
        iterations=t,
        gap=gap,
        converged=converged,
        s=s,
        lower=lo - 1.0,
        upper=hi - 1.0,
        history=tuple(history),
    )


def residual(H: Hypergraph, pair: EigenPair) -> float:
    """``|| A_H y^s - lambda y^[s] ||_inf``."""
    y = np.asarray(pair.y, dtype=float)
    return float(np.max(np.abs(apply_adjacency(H, y) - pair.lam * y**H.s)))
