"""Exact distance matrices, Wiener index, and distance spectral radius.

The spectral radius is computed two ways: shifted power iteration (the
primary route) and a dense symmetric eigensolve (the cross-check oracle).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .graphs import Graph, bfs_distances


class SpectrumError(ValueError):
    """Disconnected input, size caps, or a failed iteration."""


@dataclass(frozen=True)
class DistanceMatrix:
    """Dense symmetric matrix of exact shortest-path hop counts."""

    entries: np.ndarray  # int64, shape (n, n)

    def __post_init__(self):
        object.__setattr__(self, "entries", np.asarray(self.entries, dtype=np.int64))

    @property
    def n(self) -> int:
        return self.entries.shape[0]


@dataclass(frozen=True)
class SpectralEstimate:
    value: float
    residual: float
    iterations: int
    method: str  # "power-iteration" | "dense"


@dataclass(frozen=True)
class OddFactorParams:
    """The parameter tuple (b, k, n): b odd >= 1, k >= 1, n = k (mod 2)."""

    b: int
    k: int
    n: int

    def __post_init__(self):
        if self.b < 1 or self.b % 2 == 0:
            raise ValueError(f"b must be a positive odd integer, got {self.b}")
        if self.k < 1:
            raise ValueError(f"k must be a positive integer, got {self.k}")
        if self.n % 2 != self.k % 2:
            raise ValueError(f"n = {self.n} and k = {self.k} must have equal parity")

    @property
    def order_bound(self) -> Fraction:
        """Smallest order admitted by the main criterion."""
        b, k = self.b, self.k
        return Fraction(b * b + 2 * b * k + 5 * b + 2 * k + 4, b)

    def meets_order_bound(self) -> bool:
        return self.n >= self.order_bound

    def validate_for_theorem(self) -> None:
        if not self.meets_order_bound():
            raise ValueError(
                f"n = {self.n} below the order bound {self.order_bound}"
            )
        if self.n - self.k - self.b - 2 < 1:
            raise ValueError("n - k - b - 2 < 1: extremal graph undefined")


def distance_matrix(G: Graph) -> DistanceMatrix:
    """All-pairs BFS hop counts; raises on disconnected input."""
    n = G.n
    D = np.zeros((n, n), dtype=np.int64)
    for s in range(n):
        row = bfs_distances(G, s)
        for t, d in enumerate(row):
            if d < 0:
                raise SpectrumError(f"graph disconnected: no path from {s} to {t}")
            D[s, t] = d
    return DistanceMatrix(D)


def wiener_index(D: DistanceMatrix) -> int:
    """Sum of distances over unordered pairs, exact."""
    return int(D.entries.sum()) // 2


def wiener_bound(D: DistanceMatrix) -> Fraction:
    """The Rayleigh-quotient lower bound 2W/n on the spectral radius."""
    return Fraction(2 * wiener_index(D), D.n)


DEFAULT_TOL = 1e-10
MAX_ITERATIONS = 200_000


def spectral_radius(
    D: DistanceMatrix, tol: float = DEFAULT_TOL, return_vector: bool = False
):
    """Largest eigenvalue of D by power iteration on D + I.

    The shift makes the iteration matrix primitive (positive diagonal), so
    convergence from the all-ones vector is guaranteed and deterministic.
    The reported value subtracts the shift back out.
    """
    if tol <= 0:
        raise SpectrumError("tolerance must be positive")
    n = D.n
    if n == 1:
        est = SpectralEstimate(0.0, 0.0, 0, "power-iteration")
        return (est, np.ones(1)) if return_vector else est
    M = D.entries.astype(np.float64) + np.eye(n)
    x = np.ones(n) / np.sqrt(n)
    lam = 0.0
    for it in range(1, MAX_ITERATIONS + 1):
        y = M @ x
        lam = float(x @ y)  # Rayleigh quotient, ||x|| = 1
        residual = float(np.max(np.abs(y - lam * x))) / float(np.max(np.abs(x)))
        if residual <= tol:
            est = SpectralEstimate(lam - 1.0, residual, it, "power-iteration")
            return (est, x) if return_vector else est
        x = y / np.linalg.norm(y)
    raise SpectrumError(
        f"power iteration failed to reach tol {tol} in {MAX_ITERATIONS} sweeps"
    )


DENSE_SIZE_CAP = 512


def spectral_radius_dense(D: DistanceMatrix) -> SpectralEstimate:
    """Largest eigenvalue via a full symmetric eigensolve (cross-check)."""
    n = D.n
    if n > DENSE_SIZE_CAP:
        raise SpectrumError(f"dense solve capped at n <= {DENSE_SIZE_CAP}, got {n}")
    A = D.entries.astype(np.float64)
    w, V = np.linalg.eigh(A)
    lam = float(w[-1])
    x = V[:, -1]
    residual = float(np.max(np.abs(A @ x - lam * x))) / float(np.max(np.abs(x)))
    return SpectralEstimate(lam, residual, 1, "dense")
