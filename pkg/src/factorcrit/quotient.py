"""Quotient matrices over vertex partitions and the closed-form polynomials
attached to the clique-join families.

All polynomial coefficients are exact integers; floating point enters only
at root extraction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .spectrum import DistanceMatrix, OddFactorParams, SpectralEstimate


class QuotientError(ValueError):
    """Malformed partition or parameter-range violation."""


@dataclass(frozen=True)
class QuotientMatrix:
    """Block-average row sums of a matrix over a vertex partition."""

    entries: np.ndarray  # float64, shape (r, r)
    equitable: bool

    @property
    def r(self) -> int:
        return self.entries.shape[0]


@dataclass(frozen=True)
class Cubic:
    """Monic cubic x^3 + c2 x^2 + c1 x + c0 with integer coefficients."""

    c2: int
    c1: int
    c0: int

    @property
    def coefficients(self) -> tuple[int, int, int, int]:
        return (1, self.c2, self.c1, self.c0)

    def __call__(self, x: float) -> float:
        return ((x + self.c2) * x + self.c1) * x + self.c0

    def minus(self, other: "Cubic") -> tuple[int, int, int]:
        """Coefficient vector of the (quadratic) difference; x^3 cancels."""
        return (self.c2 - other.c2, self.c1 - other.c1, self.c0 - other.c0)


@dataclass(frozen=True)
class Quadratic:
    """a2 x^2 + a1 x + a0 with integer coefficients."""

    a2: int
    a1: int
    a0: int

    @property
    def coefficients(self) -> tuple[int, int, int]:
        return (self.a2, self.a1, self.a0)

    def __call__(self, x: int) -> int:
        return (self.a2 * x + self.a1) * x + self.a0

    @property
    def axis(self) -> Fraction:
        """Symmetry axis -a1 / (2 a2)."""
        return Fraction(-self.a1, 2 * self.a2)


def _check_partition(n: int, blocks: Sequence[Sequence[int]]) -> list[list[int]]:
    seen: set[int] = set()
    out: list[list[int]] = []
    for blk in blocks:
        b = list(blk)
        if not b:
            raise QuotientError("empty block in partition")
        for v in b:
            if not 0 <= v < n:
                raise QuotientError(f"vertex {v} out of range")
            if v in seen:
                raise QuotientError(f"vertex {v} appears in two blocks")
            seen.add(v)
        out.append(b)
    if len(seen) != n:
        raise QuotientError("partition does not cover all vertices")
    return out


def quotient_matrix(D: DistanceMatrix, blocks: Sequence[Sequence[int]]) -> QuotientMatrix:
    """Average block row sums; equitability decided by exact integer
    comparison of the per-row block sums (distances are integers)."""
    parts = _check_partition(D.n, blocks)
    r = len(parts)
    M = D.entries
    B = np.zeros((r, r), dtype=np.float64)
    equitable = True
    for i, Vi in enumerate(parts):
        for j, Vj in enumerate(parts):
            row_sums = [int(M[u, Vj].sum()) for u in Vi]
            if any(s != row_sums[0] for s in row_sums):
                equitable = False
            B[i, j] = sum(row_sums) / len(row_sums)
    return QuotientMatrix(B, equitable)


def family_quotient_entries(p: OddFactorParams, s: int) -> list[list[int]]:
    """Exact quotient entries of the distance matrix of
    K_s v (K_{n-(b+1)s+bk-1} u (bs-bk+1)K_1) under its canonical partition."""
    b, k, n = p.b, p.k, p.n
    _check_family_params(p, s)
    return [
        [s - 1, n - (b + 1) * s + b * k - 1, b * s - b * k + 1],
        [s, n - (b + 1) * s + b * k - 2, 2 * b * s - 2 * b * k + 2],
        [s, 2 * n - 2 * (b + 1) * s + 2 * b * k - 2, 2 * b * s - 2 * b * k],
    ]


def extremal_quotient_entries(p: OddFactorParams) -> list[list[int]]:
    """Quotient entries for the tight family (the s = k+1 case)."""
    b, k, n = p.b, p.k, p.n
    if n - k - b - 2 < 1:
        raise QuotientError("n - k - b - 2 < 1")
    return [
        [k, n - k - b - 2, b + 1],
        [k + 1, n - k - b - 3, 2 * b + 2],
        [k + 1, 2 * n - 2 * k - 2 * b - 4, 2 * b],
    ]


def _check_family_params(p: OddFactorParams, s: int) -> None:
    if s < p.k + 1:
        raise QuotientError(f"s = {s} must be >= k + 1 = {p.k + 1}")
    if p.n < (p.b + 1) * s - p.b * p.k + 2:
        raise QuotientError(
            f"n = {p.n} must be >= (b+1)s - bk + 2 = {(p.b + 1) * s - p.b * p.k + 2}"
        )


def char_poly_B(p: OddFactorParams, s: int) -> Cubic:
    """Characteristic polynomial of the 3x3 quotient of the s-clique family."""
    b, k, n = p.b, p.k, p.n
    _check_family_params(p, s)
    c2 = -(n + b * s - b * k - 3)
    c1 = (
        (2 * b * k - 2 * b * s - 5) * n
        + (2 * b * b + 3 * b) * s * s
        - (4 * b * b * k + 3 * b * k - 3 * b - 3) * s
        + 2 * b * b * k * k
        - 3 * b * k
        + 6
    )
    c0 = (
        -(b * b + b) * s**3
        + (b * n + 2 * b * b * k + b * k + 2 * b * b + b - 1) * s * s
        + ((1 - 2 * b - b * k) * n - b * b * k * k - 4 * b * b * k - b * k + 4 * b + 2) * s
        + (2 * b * k - 4) * n
        + 2 * b * b * k * k
        - 4 * b * k
        + 4
    )
    return Cubic(c2, c1, c0)


def char_poly_Bstar(p: OddFactorParams) -> Cubic:
    """Characteristic polynomial of the tight family's quotient."""
    b, k, n = p.b, p.k, p.n
    if n - k - b - 2 < 1:
        raise QuotientError("n - k - b - 2 < 1")
    c2 = -(n + b - 3)
    c1 = -(2 * b + 5) * n + 2 * b * b + 3 * b * k + 6 * b + 3 * k + 9
    c0 = (
        (b * k + k - b - 3) * n
        - b * b * k
        + b * b
        - b * k * k
        - b * k
        + 4 * b
        - k * k
        + 5
    )
    return Cubic(c2, c1, c0)


def g_poly(p: OddFactorParams, s: int) -> Quadratic:
    """The quadratic gap polynomial: (s - k - 1) times it is the difference
    of the two family characteristic polynomials."""
    b, k, n = p.b, p.k, p.n
    _check_family_params(p, s)
    a2 = -b
    a1 = -2 * b * n + (2 * b * b + 3 * b) * s - 2 * b * b * k + 2 * b * b + 6 * b + 3
    a0 = (
        -(b * b + b) * s * s
        + (b * n + b * b * k + b * b - 1) * s
        + (1 - b) * n
        - 2 * b * b * k
        - b * k
        + b * b
        + 4 * b
        - k
        + 1
    )
    return Quadratic(a2, a1, a0)


BISECT_ITERATIONS = 200


def largest_root(c: Cubic) -> float:
    """Largest real root of a monic cubic by bracketed bisection.

    The Cauchy bound 1 + max|coeff| brackets all roots; the bracket is
    narrowed to the interval after the last sign change using the cubic's
    critical points.
    """
    bound = 1.0 + max(abs(c.c2), abs(c.c1), abs(c.c0))
    lo, hi = -bound, bound
    # critical points of x^3 + c2 x^2 + c1 x + c0
    disc = 4 * c.c2 * c.c2 - 12 * c.c1
    if disc > 0:
        r2 = (-2 * c.c2 + disc**0.5) / 6.0  # rightmost critical point (local min)
        if c(r2) <= 0.0:
            lo = r2  # largest root is right of the local minimum
        else:
            # single real root, left of the local maximum
            hi = (-2 * c.c2 - disc**0.5) / 6.0
    for _ in range(BISECT_ITERATIONS):
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        if c(mid) <= 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def quotient_largest_eigenvalue(
    Q: QuotientMatrix, tol: float = 1e-12, max_iterations: int = 200_000
) -> float:
    """Largest eigenvalue of a nonnegative quotient matrix by power
    iteration on Q + I (same shift contract as the full-matrix route)."""
    A = np.asarray(Q.entries, dtype=np.float64)
    if (A < 0).any():
        raise QuotientError("quotient matrix must be nonnegative")
    r = A.shape[0]
    if r == 1:
        return float(A[0, 0])
    M = A + np.eye(r)
    x = np.ones(r) / np.sqrt(r)
    for _ in range(max_iterations):
        y = M @ x
        ny = np.linalg.norm(y)
        lam = float(x @ y)
        if float(np.max(np.abs(y - lam * x))) <= tol * max(1.0, abs(lam)):
            return lam - 1.0
        x = y / ny
    raise QuotientError(f"power iteration on quotient failed to reach tol {tol}")


def char_poly_from_entries(entries: Sequence[Sequence[int]]) -> Cubic:
    """det(xI - B) for an integer 3x3 matrix, expanded exactly (oracle)."""
    (a, b_, c), (d, e, f), (g, h, i) = [list(map(int, row)) for row in entries]
    c2 = -(a + e + i)
    c1 = (a * e - b_ * d) + (a * i - c * g) + (e * i - f * h)
    det = (
        a * (e * i - f * h)
        - b_ * (d * i - f * g)
        + c * (d * h - e * g)
    )
    return Cubic(c2, c1, -det)
