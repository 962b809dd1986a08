"""Numerical reproduction of the main criterion's proof chain and seeded
counterexample hunting among (k+1)-connected graphs.

Every inequality is evaluated twice where possible (closed-form root vs
dense eigensolve) and integer-valued quantities are checked in exact
arithmetic.  Reports serialize deterministically: identical seeds produce
byte-identical JSON and CSV.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from typing import Optional

from .factors import OddBoundFunction, is_k_critical
from .graphs import (
    FamilySpec,
    Graph,
    build_family,
    extremal_graph,
    vertex_connectivity,
)
from .quotient import (
    Cubic,
    char_poly_B,
    char_poly_Bstar,
    g_poly,
    largest_root,
)
from .spectrum import (
    OddFactorParams,
    distance_matrix,
    spectral_radius_dense,
    wiener_index,
)


class TheoremError(ValueError):
    """Parameter-range violation or a failed internal cross-check."""


CROSSCHECK_TOL = 1e-6
MU_SLACK = 1e-9


def g2_family_spec(p: OddFactorParams, s: int) -> FamilySpec:
    """K_s v (K_{n-(b+1)s+bk-1} u (bs-bk+1)K_1)."""
    b, k, n = p.b, p.k, p.n
    big = n - (b + 1) * s + b * k - 1
    return FamilySpec(s, (big,) + (1,) * (b * s - b * k + 1))


def _check_s_range(p: OddFactorParams, s: int) -> None:
    if s < p.k + 2:
        raise TheoremError(f"s = {s} must be >= k + 2 = {p.k + 2}")
    if s * (p.b + 1) > p.n + p.b * p.k - 2:
        raise TheoremError(
            f"s = {s} exceeds (n + bk - 2)/(b + 1) = "
            f"{(p.n + p.b * p.k - 2) / (p.b + 1):g}"
        )


def _crosschecked_root(cubic: Cubic, G: Graph, what: str) -> tuple[float, float]:
    """Largest root of the closed-form cubic, aborting if it disagrees with
    the dense eigensolve on the actual graph (equitable-quotient tripwire)."""
    root = largest_root(cubic)
    dense = spectral_radius_dense(distance_matrix(G)).value
    if abs(root - dense) > CROSSCHECK_TOL:
        raise TheoremError(
            f"{what}: closed-form root {root!r} and dense eigenvalue {dense!r} "
            f"disagree beyond {CROSSCHECK_TOL}"
        )
    return root, dense


@dataclass(frozen=True)
class ProofChainReport:
    b: int
    k: int
    n: int
    s: int
    theta: float
    theta_dense: float
    mu_g2: float
    mu_g2_dense: float
    wiener_floor: float  # 2W(G_*)/n
    bound_check: bool  # theta >= n + b + 1
    g_at_bound: int  # g(n + b + 1), exact
    g_negative: bool
    axis: str  # symmetry axis of g, exact fraction
    axis_below_bound: bool
    chain_gap: float  # mu(G_2) - theta
    chain_verdict: bool  # mu(G_2) > theta

    def all_checks_pass(self) -> bool:
        return (
            self.bound_check
            and self.g_negative
            and self.axis_below_bound
            and self.chain_verdict
        )

    def to_json(self) -> str:
        return json.dumps(self.__dict__, sort_keys=True, indent=2) + "\n"


def check_proof_chain(p: OddFactorParams, s: int) -> ProofChainReport:
    """Evaluate the full inequality chain at one parameter point."""
    p.validate_for_theorem()
    _check_s_range(p, s)
    b, k, n = p.b, p.k, p.n

    gstar = extremal_graph(b, k, n)
    theta, theta_dense = _crosschecked_root(char_poly_Bstar(p), gstar, "theta")

    g2 = build_family(g2_family_spec(p, s))
    mu_g2, mu_g2_dense = _crosschecked_root(char_poly_B(p, s), g2, "mu(G_2)")

    wiener_floor = 2 * wiener_index(distance_matrix(gstar)) / n

    g = g_poly(p, s)
    bound = n + b + 1
    g_at_bound = g(bound)
    axis = g.axis

    return ProofChainReport(
        b=b,
        k=k,
        n=n,
        s=s,
        theta=theta,
        theta_dense=theta_dense,
        mu_g2=mu_g2,
        mu_g2_dense=mu_g2_dense,
        wiener_floor=wiener_floor,
        bound_check=theta >= bound - MU_SLACK,
        g_at_bound=g_at_bound,
        g_negative=g_at_bound < 0,
        axis=f"{axis.numerator}/{axis.denominator}",
        axis_below_bound=axis < bound,
        chain_gap=mu_g2 - theta,
        chain_verdict=mu_g2 > theta,
    )


def check_identity_33(p: OddFactorParams, s: int) -> bool:
    """f_B - f_{B*} = (s - k - 1) g, coefficientwise in exact integers, and
    the same identity evaluated at theta within a float tolerance."""
    p.validate_for_theorem()
    if s < p.k + 1:
        raise TheoremError(f"s = {s} must be >= k + 1")
    fB = char_poly_B(p, s)
    fBs = char_poly_Bstar(p)
    g = g_poly(p, s)
    factor = s - p.k - 1
    diff = fB.minus(fBs)
    if diff != tuple(factor * a for a in g.coefficients):
        return False
    theta = largest_root(fBs)
    scale = max(1.0, abs(fB(theta)), abs(factor * g(theta)))
    return abs(fB(theta) - factor * g(theta)) / scale <= 1e-6


# -- seeded samplers ---------------------------------------------------------


def random_connected_graph(
    n: int, density: float, rng: random.Random, max_tries: int = 1000
) -> Graph:
    """Erdos-Renyi G(n, density), redrawn until connected."""
    for _ in range(max_tries):
        edges = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if rng.random() < density
        ]
        G = Graph(n, edges)
        if G.is_connected():
            return G
    raise TheoremError(f"no connected sample at n={n}, density={density:g}")


@dataclass(frozen=True)
class EdgeAdditionRecord:
    n: int
    m: int
    u: int
    v: int
    mu_before: float
    mu_after: float
    gap: float
    ok: bool


@dataclass(frozen=True)
class FamilyComparisonRecord:
    s: int
    p: int
    t: int
    parts: tuple[int, ...]
    n: int
    mu_general: float
    mu_balanced_down: float
    gap: float
    ok: bool
    skipped: bool = False
    reason: str = ""


@dataclass(frozen=True)
class MonotonicityReport:
    seed: int
    edge_records: tuple[EdgeAdditionRecord, ...]
    family_records: tuple[FamilyComparisonRecord, ...]

    @property
    def all_ok(self) -> bool:
        return all(r.ok for r in self.edge_records) and all(
            r.ok for r in self.family_records if not r.skipped
        )

    def to_json(self) -> str:
        payload = {
            "seed": self.seed,
            "edge_records": [r.__dict__ for r in self.edge_records],
            "family_records": [r.__dict__ for r in self.family_records],
            "all_ok": self.all_ok,
        }
        return json.dumps(payload, sort_keys=True, indent=2, default=list) + "\n"


def check_monotonicity_lemmas(
    seed: int = 0,
    edge_samples: int = 100,
    family_samples: int = 25,
    max_n: int = 20,
    gap_tol: float = 1e-9,
    all_pairs: bool = False,
) -> MonotonicityReport:
    """Sampled checks of the two monotonicity facts: adding an edge strictly
    decreases the distance spectral radius, and unbalancing the parts of a
    clique-join family (toward one big part plus minimal ones) decreases it."""
    edge_records: list[EdgeAdditionRecord] = []
    for i in range(edge_samples):
        rng = random.Random(f"edge:{seed}:{i}")
        n = rng.randrange(4, max_n + 1)
        G = random_connected_graph(n, rng.uniform(0.2, 0.8), rng)
        nonadj = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if not G.has_edge(u, v)
        ]
        if not nonadj:
            continue
        pairs = nonadj if all_pairs else [rng.choice(nonadj)]
        mu_before = spectral_radius_dense(distance_matrix(G)).value
        for (u, v) in pairs:
            mu_after = spectral_radius_dense(distance_matrix(G.add_edge(u, v))).value
            gap = mu_before - mu_after
            edge_records.append(
                EdgeAdditionRecord(n, G.m, u, v, mu_before, mu_after, gap, gap > gap_tol)
            )

    family_records: list[FamilyComparisonRecord] = []
    for i in range(family_samples):
        rng = random.Random(f"family:{seed}:{i}")
        s = rng.randrange(1, 5)
        pp = rng.randrange(1, 4)
        t = rng.randrange(2, 5)
        parts = tuple(
            sorted((rng.randrange(pp, pp + 6) for _ in range(t)), reverse=True)
        )
        n = s + sum(parts)
        big = n - s - pp * (t - 1)
        if not parts[0] < big:
            family_records.append(
                FamilyComparisonRecord(
                    s, pp, t, parts, n, 0.0, 0.0, 0.0, True, True,
                    "hypothesis n_1 < n - s - p(t-1) fails",
                )
            )
            continue
        general = build_family(FamilySpec(s, parts))
        balanced_down = build_family(FamilySpec(s, (big,) + (pp,) * (t - 1)))
        mu_general = spectral_radius_dense(distance_matrix(general)).value
        mu_down = spectral_radius_dense(distance_matrix(balanced_down)).value
        gap = mu_general - mu_down
        family_records.append(
            FamilyComparisonRecord(
                s, pp, t, parts, n, mu_general, mu_down, gap, gap > gap_tol
            )
        )
    return MonotonicityReport(seed, tuple(edge_records), tuple(family_records))


# -- counterexample hunting --------------------------------------------------


@dataclass(frozen=True)
class SampleRecord:
    graph_id: str
    kappa: int
    mu: float
    mu_le_theta: bool
    critical: Optional[bool]  # None when mu > theta (not scored)


@dataclass(frozen=True)
class TheoremReport:
    b: int
    k: int
    n: int
    seed: int
    theta: float
    theta_dense: float
    sample_count: int
    samples: tuple[SampleRecord, ...]
    counterexamples: tuple[str, ...]
    extremal_critical: bool  # must be False
    extremal_witness: tuple[int, ...]
    sampler_failures: int = 0

    def to_json(self) -> str:
        payload = {
            "params": {"b": self.b, "k": self.k, "n": self.n},
            "seed": self.seed,
            "theta": self.theta,
            "theta_dense": self.theta_dense,
            "sample_count": self.sample_count,
            "sampler_failures": self.sampler_failures,
            "samples": [r.__dict__ for r in self.samples],
            "counterexamples": list(self.counterexamples),
            "extremal_critical": self.extremal_critical,
            "extremal_witness": list(self.extremal_witness),
        }
        return json.dumps(payload, sort_keys=True, indent=2) + "\n"

    def to_csv(self) -> str:
        lines = ["id,seed,kappa,mu,verdict"]
        for r in self.samples:
            verdict = "" if r.critical is None else str(r.critical).lower()
            lines.append(f"{r.graph_id},{self.seed},{r.kappa},{r.mu!r},{verdict}")
        return "\n".join(lines) + "\n"


DENSITY_LO = 0.3
DENSITY_HI = 0.9


def verify_theorem_instance(
    p: OddFactorParams, samples: int, seed: int
) -> TheoremReport:
    """Sample connected graphs with kappa >= k+1, score every sample with
    mu <= theta against the criticality criterion, and record the extremal
    graph as the designated non-critical equality case."""
    p.validate_for_theorem()
    if samples < 1:
        raise TheoremError("samples must be >= 1")
    b, k, n = p.b, p.k, p.n

    gstar = extremal_graph(b, k, n)
    theta, theta_dense = _crosschecked_root(char_poly_Bstar(p), gstar, "theta")

    f = OddBoundFunction.constant(b, n)
    records: list[SampleRecord] = []
    counterexamples: list[str] = []
    failures = 0
    for i in range(samples):
        density = DENSITY_LO + (DENSITY_HI - DENSITY_LO) * (
            i / (samples - 1) if samples > 1 else 0.5
        )
        rng = random.Random(f"theorem:{seed}:{i}")
        G = None
        kappa = 0
        for _ in range(200):
            cand = random_connected_graph(n, density, rng)
            kappa = vertex_connectivity(cand)
            if kappa >= k + 1:
                G = cand
                break
        if G is None:
            failures += 1
            continue
        mu = spectral_radius_dense(distance_matrix(G)).value
        within = mu <= theta + MU_SLACK
        critical: Optional[bool] = None
        if within:
            critical = is_k_critical(G, f, k).verdict
            if not critical:
                counterexamples.append(f"er-{i}")
        records.append(SampleRecord(f"er-{i}", kappa, mu, within, critical))

    star_witness = is_k_critical(gstar, f, k)
    return TheoremReport(
        b=b,
        k=k,
        n=n,
        seed=seed,
        theta=theta,
        theta_dense=theta_dense,
        sample_count=len(records),
        samples=tuple(records),
        counterexamples=tuple(counterexamples),
        extremal_critical=star_witness.verdict,
        extremal_witness=star_witness.witness or (),
        sampler_failures=failures,
    )


def theorem_grid(
    b_values=(1, 3),
    k_values=(1, 2, 3),
    n_per_point: int = 3,
    n_cap: int = 200,
):
    """Valid (b, k, n) points: the n_per_point smallest admissible orders of
    correct parity for each (b, k)."""
    points = []
    for b in b_values:
        for k in k_values:
            found = 0
            n = k + b + 3  # smallest with a nonempty big part
            if (n - k) % 2:
                n += 1
            while found < n_per_point and n <= n_cap:
                try:
                    p = OddFactorParams(b, k, n)
                    p.validate_for_theorem()
                except ValueError:
                    pass
                else:
                    points.append(p)
                    found += 1
                n += 2
    return points
