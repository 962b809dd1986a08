import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from factorcrit import (
    FactorError,
    Graph,
    OddBoundFunction,
    complete,
    disjoint_union,
    extremal_graph,
    find_odd_factor_bruteforce,
    has_odd_factor,
    is_k_critical,
    is_k_critical_definitional,
)
from factorcrit.theorem import random_connected_graph


def star(leaves):
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def const(b, n):
    return OddBoundFunction.constant(b, n)


class TestBoundFunction:
    def test_rejects_even_values(self):
        with pytest.raises(FactorError):
            OddBoundFunction([1, 2, 1])

    def test_rejects_nonpositive(self):
        with pytest.raises(FactorError):
            OddBoundFunction([1, -1])

    def test_restrict_keeps_original_identity(self):
        f = OddBoundFunction([1, 3, 5, 7])
        assert f.restrict([0, 2, 3]).values == (1, 5, 7)


class TestExistence:
    def test_k2_perfect_matching(self):
        assert has_odd_factor(complete(2), const(1, 2)).verdict

    def test_star_no_perfect_matching(self):
        w = has_odd_factor(star(3), const(1, 4))
        assert not w.verdict
        assert w.witness == (0,)
        assert w.odd_count == 3 and w.bound == 1

    def test_star_with_b3(self):
        assert has_odd_factor(star(3), const(3, 4)).verdict

    def test_odd_order_component_fails_at_empty_set(self):
        w = has_odd_factor(complete(3), const(1, 3))
        assert not w.verdict
        assert w.witness == ()

    def test_empty_graph_rejected(self):
        with pytest.raises(FactorError):
            has_odd_factor(Graph(0, []), OddBoundFunction([]))

    def test_cap(self):
        with pytest.raises(FactorError, match="capped"):
            has_odd_factor(complete(2), const(1, 2), cap=1)


class TestBruteForce:
    def test_k2(self):
        assert find_odd_factor_bruteforce(complete(2), const(1, 2)) == ((0, 1),)

    def test_k4_perfect_matching(self):
        F = find_odd_factor_bruteforce(complete(4), const(1, 4))
        assert F is not None and len(F) == 2
        assert sorted(v for e in F for v in e) == [0, 1, 2, 3]

    def test_star_b3_takes_all_edges(self):
        F = find_odd_factor_bruteforce(star(3), const(3, 4))
        assert F == ((0, 1), (0, 2), (0, 3))

    def test_none_when_no_factor(self):
        assert find_odd_factor_bruteforce(star(3), const(1, 4)) is None

    def test_edge_cap(self):
        with pytest.raises(FactorError, match="capped"):
            find_odd_factor_bruteforce(complete(9), const(1, 9))


class TestCriticality:
    def test_k5_is_1_factor_critical(self):
        assert is_k_critical(complete(5), const(1, 5), 1).verdict

    def test_extremal_not_critical_with_join_witness(self):
        G = extremal_graph(1, 1, 15)
        w = is_k_critical(G, const(1, 15), 1)
        assert not w.verdict
        assert w.witness == (0, 1)  # the join clique block
        assert w.odd_count == 3 and w.bound == 1

    def test_order_too_small(self):
        with pytest.raises(FactorError, match="k \\+ 2"):
            is_k_critical(complete(3), const(1, 3), 2)

    def test_definitional_k5(self):
        assert is_k_critical_definitional(complete(5), const(1, 5), 1)

    def test_definitional_extremal(self):
        G = extremal_graph(1, 1, 15)
        assert not is_k_critical_definitional(G, const(1, 15), 1)

    def test_definitional_k4_2critical(self):
        assert is_k_critical_definitional(complete(4), const(1, 4), 2)

    def test_constant_bound_reduction(self):
        # for f = b the criterion bound is b|S| - bk
        G = random_connected_graph(8, 0.5, random.Random(3))
        w = is_k_critical(G, const(3, 8), 2)
        if not w.verdict:
            assert w.bound == 3 * len(w.witness) - 6


class TestOracleEquivalence:
    @pytest.mark.parametrize("b", [1, 3])
    def test_existence_on_random_small_graphs(self, b):
        for seed in range(60):
            rng = random.Random(f"fx:{b}:{seed}")
            G = random_connected_graph(rng.randrange(2, 8), rng.uniform(0.3, 0.9), rng)
            f = const(b, G.n)
            assert has_odd_factor(G, f).verdict == (
                find_odd_factor_bruteforce(G, f) is not None)

    @pytest.mark.parametrize("b,k", [(1, 1), (1, 2), (3, 1), (3, 2)])
    def test_criticality_on_random_small_graphs(self, b, k):
        for seed in range(40):
            rng = random.Random(f"cx:{b}:{k}:{seed}")
            ns = [n for n in range(k + 2, 10) if n % 2 == k % 2]
            G = random_connected_graph(rng.choice(ns), rng.uniform(0.3, 0.9), rng)
            f = const(b, G.n)
            assert is_k_critical(G, f, k).verdict == is_k_critical_definitional(G, f, k)


@given(seed=st.integers(0, 10_000))
@settings(max_examples=30, deadline=None)
def test_monotone_in_bound_function(seed):
    rng = random.Random(seed)
    n = rng.randrange(2, 8)
    G = random_connected_graph(n, rng.uniform(0.3, 0.9), rng)
    lo = OddBoundFunction([rng.choice((1, 3)) for _ in range(n)])
    hi = OddBoundFunction([v + rng.choice((0, 2)) for v in lo.values])
    if has_odd_factor(G, lo).verdict:
        assert has_odd_factor(G, hi).verdict


def test_parity_necessity():
    G = disjoint_union(complete(3), complete(4))
    assert not has_odd_factor(G, const(3, 7)).verdict
