import numpy as np
import pytest

from hyperec.hypergraph import Hypergraph, parse_hyperedge_list
from hyperec.solver import DisconnectedError, EigenPair, SolverOptions, residual, zqw_solve
from hyperec.synthetic import random_graph

from conftest import corpus

CORPUS = corpus()
TOL = 1e-10


def long_run_rho(H):
    """Reference rho(A_H) from a much tighter solve."""
    return zqw_solve(H, SolverOptions(tolerance=1e-14, max_iterations=20000)).upper


def dense_power_perron(A, iters=20000):
    """Independent matrix power iteration on A + I, 2-norm scaled."""
    M = A + np.eye(len(A))
    x = np.ones(len(A))
    for _ in range(iters):
        z = M @ x
        z /= np.linalg.norm(z)
        if np.max(np.abs(z - x)) < 1e-15:
            break
        x = z
    return z


class TestExamples:
    def test_single_pair(self):
        p = zqw_solve(Hypergraph.from_edges([[1, 2]]))
        assert p.lam == pytest.approx(1.0, abs=1e-12)
        np.testing.assert_allclose(p.y, [2**-0.5, 2**-0.5], rtol=1e-12)

    def test_single_triple(self):
        p = zqw_solve(Hypergraph.from_edges([[1, 2, 3]]))
        assert p.s == 2
        assert p.lam == pytest.approx(1.0, abs=1e-12)
        np.testing.assert_allclose(p.y, 3 ** (-1 / 3), rtol=1e-12)

    def test_sunflower(self, sunflower):
        p = zqw_solve(sunflower)
        assert p.converged
        np.testing.assert_allclose(p.y, [0.8451, 0.7930, 0.7440, 0.7440, 0.6981, 0.6981, 0.6981], atol=5e-4)

    def test_disconnected_refused(self):
        with pytest.raises(DisconnectedError, match="unique positive"):
            zqw_solve(Hypergraph.from_edges([[1, 2], [3, 4]]))

    def test_not_converged_flag(self, sunflower):
        p = zqw_solve(sunflower, SolverOptions(max_iterations=2))
        assert not p.converged and p.iterations == 2
        assert p.lower <= p.lam <= p.upper

    def test_options_validation(self):
        with pytest.raises(ValueError):
            SolverOptions(tolerance=0)
        with pytest.raises(ValueError):
            SolverOptions(max_iterations=0)
        with pytest.raises(ValueError):
            SolverOptions(initial_vector=np.array([1.0, -1.0]))


class TestResidual:
    def test_exact_pair(self):
        H = Hypergraph.from_edges([[1, 2, 3]])
        y = np.full(3, 3 ** (-1 / 3))
        pair = EigenPair(1.0, y, 0, 0.0, True, 2, 1.0, 1.0)
        assert residual(H, pair) <= 1e-12

    def test_perturbation_grows_residual(self, sunflower):
        p = zqw_solve(sunflower)
        y = p.y.copy()
        y[3] *= 1.01
        bumped = EigenPair(p.lam, y, p.iterations, p.gap, p.converged, p.s, p.lower, p.upper)
        assert residual(sunflower, bumped) > residual(sunflower, p)

    def test_solver_pair_small(self, sunflower):
        p = zqw_solve(sunflower, SolverOptions(tolerance=1e-10))
        assert residual(sunflower, p) <= 1e-8 * p.lam


@pytest.mark.parametrize("H", CORPUS, ids=lambda H: f"n{H.n}s{H.s}")
class TestContract:
    def test_normalized_positive(self, H):
        p = zqw_solve(H)
        assert np.all(p.y > 0)
        assert abs(np.sum(p.y ** (p.s + 1)) ** (1 / (p.s + 1)) - 1) <= 1e-12

    def test_residual_bound(self, H):
        p = zqw_solve(H, SolverOptions(tolerance=TOL))
        assert p.converged
        assert residual(H, p) <= 10 * TOL * p.lam

    def test_bracketing_and_monotone(self, H):
        rho_b = long_run_rho(H) + 1.0
        p = zqw_solve(H, SolverOptions(tolerance=TOL))
        lo = np.array([h[0] for h in p.history])
        hi = np.array([h[1] for h in p.history])
        slack = 1e-12 * rho_b
        assert np.all(lo <= rho_b + slack) and np.all(hi >= rho_b - slack)
        assert np.all(np.diff(lo) >= -slack)
        assert np.all(np.diff(hi) <= slack)

    def test_initialization_independence(self, H):
        rng = np.random.default_rng(H.n)
        a = zqw_solve(H, SolverOptions(tolerance=TOL))
        b = zqw_solve(H, SolverOptions(tolerance=TOL, initial_vector=rng.uniform(0.01, 5.0, H.n)))
        np.testing.assert_allclose(a.y, b.y, rtol=0, atol=10 * TOL)

    def test_ranking_matches_x(self, H):
        p = zqw_solve(H)
        x = p.y**p.s
        assert np.array_equal(np.argsort(-p.y, kind="stable"), np.argsort(-x, kind="stable"))


@pytest.mark.parametrize("seed", range(5))
def test_graph_reduction_to_matrix_perron(seed):
    rng = np.random.default_rng(100 + seed)
    n = int(rng.integers(3, 30))
    H = random_graph(n, int(rng.integers(0, 2 * n)), seed=seed)
    A = np.zeros((n, n))
    for a, b in H.edges:
        A[a, b] = A[b, a] = 1
    p = zqw_solve(H)
    np.testing.assert_allclose(p.y, dense_power_perron(A), rtol=0, atol=1e-8)
    assert p.lam == pytest.approx(np.linalg.eigvalsh(A)[-1], rel=1e-9)


def test_bipartite_does_not_oscillate():
    H = parse_hyperedge_list("a b\nb c\nc d\nd a\n")
    p = zqw_solve(H)
    assert p.converged
    np.testing.assert_allclose(p.y, 0.5, rtol=1e-10)
