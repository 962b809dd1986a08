import math
import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from factorcrit import (
    Graph,
    SpectrumError,
    complete,
    disjoint_union,
    distance_matrix,
    extremal_graph,
    spectral_radius,
    spectral_radius_dense,
    wiener_bound,
    wiener_index,
)
from factorcrit.theorem import random_connected_graph


def path_graph(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


class TestDistanceMatrix:
    def test_p3(self):
        D = distance_matrix(path_graph(3))
        assert D.entries.tolist() == [[0, 1, 2], [1, 0, 1], [2, 1, 0]]

    def test_k3_all_ones_off_diagonal(self):
        D = distance_matrix(complete(3))
        assert D.entries.tolist() == [[0, 1, 1], [1, 0, 1], [1, 1, 0]]

    def test_disconnected_rejected(self):
        with pytest.raises(SpectrumError, match="disconnected"):
            distance_matrix(disjoint_union(complete(1), complete(1)))

    @given(seed=st.integers(0, 100))
    @settings(max_examples=25, deadline=None)
    def test_metric_properties(self, seed):
        rng = random.Random(seed)
        G = random_connected_graph(rng.randrange(2, 10), rng.uniform(0.3, 0.9), rng)
        D = distance_matrix(G).entries
        assert (D == D.T).all()
        assert (np.diag(D) == 0).all()
        n = G.n
        assert (D[~np.eye(n, dtype=bool)] >= 1).all()
        for k in range(n):
            assert (D <= D[:, k][:, None] + D[k, :][None, :]).all()


class TestWiener:
    def test_p3(self):
        D = distance_matrix(path_graph(3))
        assert wiener_index(D) == 4
        assert wiener_bound(D) * 3 == 8

    @pytest.mark.parametrize("n", [2, 5, 9])
    def test_complete(self, n):
        assert wiener_index(distance_matrix(complete(n))) == n * (n - 1) // 2

    def test_extremal_closed_form(self):
        # 2W = n^2 + (2b+1)n - b^2 - 2bk - 5b - 2k - 4
        b, k, n = 1, 1, 15
        W = wiener_index(distance_matrix(extremal_graph(b, k, n)))
        assert W == 128
        assert 2 * W == n * n + (2 * b + 1) * n - b * b - 2 * b * k - 5 * b - 2 * k - 4


class TestSpectralRadius:
    def test_k3(self):
        est = spectral_radius(distance_matrix(complete(3)))
        assert est.value == pytest.approx(2.0, abs=1e-9)

    def test_p3_closed_form(self):
        est = spectral_radius(distance_matrix(path_graph(3)))
        assert est.value == pytest.approx(1 + math.sqrt(3), abs=1e-9)

    def test_extremal_value(self):
        est = spectral_radius(distance_matrix(extremal_graph(1, 1, 15)))
        assert est.value == pytest.approx(17.707, abs=0.01)

    def test_bad_tolerance(self):
        with pytest.raises(SpectrumError):
            spectral_radius(distance_matrix(complete(3)), tol=0)

    def test_perron_vector_positive(self):
        for seed in range(5):
            rng = random.Random(seed)
            G = random_connected_graph(8, 0.4, rng)
            _, x = spectral_radius(distance_matrix(G), return_vector=True)
            assert (np.abs(x) > 0).all()
            assert (x > 0).all() or (x < 0).all()


class TestDenseCrossCheck:
    def test_k2(self):
        assert spectral_radius_dense(distance_matrix(complete(2))).value == pytest.approx(1.0)

    def test_p3_agreement(self):
        D = distance_matrix(path_graph(3))
        a = spectral_radius(D).value
        b = spectral_radius_dense(D).value
        assert a == pytest.approx(b, abs=1e-9)

    def test_random_agreement_n30(self):
        rng = random.Random(7)
        G = random_connected_graph(30, 0.3, rng)
        D = distance_matrix(G)
        assert spectral_radius(D).value == pytest.approx(
            spectral_radius_dense(D).value, abs=1e-8)

    def test_size_cap(self):
        with pytest.raises(SpectrumError, match="capped"):
            spectral_radius_dense(_fake(1000))


def _fake(n):
    import numpy as np
    from factorcrit.spectrum import DistanceMatrix
    # legal metric entries are irrelevant; the cap fires before the solve
    return DistanceMatrix(np.zeros((n, n), dtype=np.int64))


@given(seed=st.integers(0, 10_000))
@settings(max_examples=40, deadline=None)
def test_wiener_floor_below_mu(seed):
    rng = random.Random(seed)
    G = random_connected_graph(rng.randrange(2, 12), rng.uniform(0.3, 0.9), rng)
    D = distance_matrix(G)
    mu = spectral_radius_dense(D).value
    assert mu >= float(wiener_bound(D)) - 1e-9
