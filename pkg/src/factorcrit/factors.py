"""Odd-factor existence and k-criticality by subset enumeration, with an
edge-subset brute-force oracle.

A [1,f]-odd factor is a spanning subgraph in which every vertex v has odd
degree between 1 and f(v).  The subset criteria enumerate vertex subsets S
and compare the number of odd components of G - S against the f-weighted
bound; the brute-force oracle searches edge subsets directly and is the
module's ground truth.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

from .graphs import Graph, odd_components_mask


class FactorError(ValueError):
    """Bad parameters or an enumeration cap exceeded."""


SUBSET_VERTEX_CAP = 22
DEFINITIONAL_VERTEX_CAP = 16
ORACLE_EDGE_CAP = 24


class OddBoundFunction:
    """Per-vertex odd degree bounds f(v) >= 1."""

    __slots__ = ("values",)

    def __init__(self, values: Sequence[int]):
        vals = tuple(int(v) for v in values)
        for v in vals:
            if v < 1 or v % 2 == 0:
                raise FactorError(f"bound values must be odd and >= 1, got {v}")
        self.values = vals

    @classmethod
    def constant(cls, b: int, n: int) -> "OddBoundFunction":
        return cls((b,) * n)

    def restrict(self, keep: Sequence[int]) -> "OddBoundFunction":
        """Bounds carried over to a densely relabeled induced subgraph."""
        return OddBoundFunction(tuple(self.values[v] for v in sorted(keep)))

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class CriticalityWitness:
    """Outcome of a subset criterion; on failure carries the violating set."""

    verdict: bool
    witness: Optional[tuple[int, ...]] = None
    odd_count: Optional[int] = None
    bound: Optional[int] = None


def _criterion_bound(f_values: tuple[int, ...], S: tuple[int, ...], k: int) -> int:
    """Sum of f over S minus the k largest f-values in S (k = 0 allowed)."""
    vals = [f_values[v] for v in S]
    if k == 0:
        return sum(vals)
    vals.sort(reverse=True)
    return sum(vals[k:])


def _subset_scan(
    G: Graph, f: OddBoundFunction, k: int, cap: int
) -> CriticalityWitness:
    """Scan subsets |S| >= k in increasing size (then lexicographic) order,
    so the first violation found is the least minimum-size witness."""
    n = G.n
    if n > cap:
        raise FactorError(f"subset enumeration capped at n <= {cap}, got {n}")
    if len(f) != n:
        raise FactorError("bound function length does not match graph order")
    masks = G.masks
    fv = f.values
    constant_b = fv[0] if all(v == fv[0] for v in fv) else None
    for size in range(k, n + 1):
        # no subset of this size can violate: odd components of G - S are
        # at most n - size, the bound grows at least linearly in size
        if constant_b is not None and constant_b * (size - k) >= n - size:
            break
        for S in combinations(range(n), size):
            if constant_b is not None:
                bound = constant_b * (size - k)
            else:
                bound = _criterion_bound(fv, S, k)
            removed = 0
            for v in S:
                removed |= 1 << v
            q = odd_components_mask(masks, n, removed)
            if q > bound:
                return CriticalityWitness(False, S, q, bound)
    return CriticalityWitness(True)


def has_odd_factor(
    G: Graph, f: OddBoundFunction, cap: int = SUBSET_VERTEX_CAP
) -> CriticalityWitness:
    """Subset criterion for existence: o(G - S) <= sum_{v in S} f(v) for all
    S (the empty set forces every component to have even order)."""
    if G.n == 0:
        raise FactorError("graph must be nonempty")
    return _subset_scan(G, f, 0, cap)


def is_k_critical(
    G: Graph, f: OddBoundFunction, k: int, cap: int = SUBSET_VERTEX_CAP
) -> CriticalityWitness:
    """Subset criterion for k-criticality: for every S with |S| >= k,
    o(G - S) <= sum_{v in S} f(v) - (sum of the k largest f-values in S)."""
    if k < 1:
        raise FactorError("k must be >= 1")
    if G.n < k + 2:
        raise FactorError(f"order {G.n} < k + 2 = {k + 2}")
    return _subset_scan(G, f, k, cap)


def is_k_critical_definitional(
    G: Graph, f: OddBoundFunction, k: int, cap: int = DEFINITIONAL_VERTEX_CAP
) -> bool:
    """Definitional check: every k-vertex deletion leaves an odd factor."""
    if k < 1:
        raise FactorError("k must be >= 1")
    if G.n < k + 2:
        raise FactorError(f"order {G.n} < k + 2 = {k + 2}")
    if G.n > cap:
        raise FactorError(f"definitional check capped at n <= {cap}, got {G.n}")
    for X in combinations(range(G.n), k):
        keep = [v for v in range(G.n) if v not in X]
        H = G.delete_vertices(X)
        if not has_odd_factor(H, f.restrict(keep)).verdict:
            return False
    return True


def find_odd_factor_bruteforce(
    G: Graph, f: OddBoundFunction, cap: int = ORACLE_EDGE_CAP
) -> Optional[tuple[tuple[int, int], ...]]:
    """Search edge subsets for a spanning subgraph with every degree odd and
    within bounds; returns the lexicographically first subset (by inclusion
    vector over the sorted edge list) or None.

    Backtracking over edges in sorted order, excluding before including;
    a vertex is checked as soon as its last incident edge is decided.
    """
    n, m = G.n, G.m
    if m > cap:
        raise FactorError(f"brute force capped at m <= {cap}, got {m}")
    if len(f) != n:
        raise FactorError("bound function length does not match graph order")
    edges = G.edges
    fv = f.values
    remaining = [G.degree(v) for v in range(n)]
    degree = [0] * n
    chosen: list[int] = []

    def ok_when_closed(v: int) -> bool:
        d = degree[v]
        return d % 2 == 1 and 1 <= d <= fv[v]

    def feasible(v: int) -> bool:
        # v still has undecided incident edges; prune impossible states
        return degree[v] <= fv[v] and degree[v] + remaining[v] >= 1

    def search(i: int) -> bool:
        if i == m:
            return True
        u, v = edges[i]
        for take in (0, 1):
            if take:
                degree[u] += 1
                degree[v] += 1
            remaining[u] -= 1
            remaining[v] -= 1
            good = True
            for w in (u, v):
                if remaining[w] == 0:
                    if not ok_when_closed(w):
                        good = False
                        break
                elif not feasible(w):
                    good = False
                    break
            if good:
                if take:
                    chosen.append(i)
                if search(i + 1):
                    return True
                if take:
                    chosen.pop()
            remaining[u] += 1
            remaining[v] += 1
            if take:
                degree[u] -= 1
                degree[v] -= 1
        return False

    # isolated vertices can never reach degree 1
    if any(remaining[v] == 0 for v in range(n)):
        return None
    if search(0):
        return tuple(edges[i] for i in chosen)
    return None
