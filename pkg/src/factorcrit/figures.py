"""Matplotlib renderings of harness reports, written next to the data files."""

from __future__ import annotations

import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .quotient import char_poly_B, char_poly_Bstar, g_poly
from .spectrum import OddFactorParams
from .theorem import ProofChainReport, TheoremReport


def render_theorem_figures(report: TheoremReport, out_dir: str) -> list[str]:
    """Histogram of sampled spectral radii against theta, and a kappa/mu
    scatter colored by verdict.  Returns the written paths."""
    os.makedirs(out_dir, exist_ok=True)
    paths = []

    mus = [r.mu for r in report.samples]
    fig, ax = plt.subplots(figsize=(7, 4.5))
    ax.hist(mus, bins=40, color="#4878a8", edgecolor="white")
    ax.axvline(report.theta, color="crimson", lw=1.5,
               label=rf"$\theta \approx {report.theta:.4f}$")
    ax.set_xlabel(r"distance spectral radius $\mu$")
    ax.set_ylabel("samples")
    ax.set_title(
        f"b={report.b}, k={report.k}, n={report.n}: "
        f"{sum(r.mu_le_theta for r in report.samples)} of "
        f"{report.sample_count} samples below the threshold"
    )
    ax.legend()
    fig.tight_layout()
    path = os.path.join(out_dir, "mu_histogram.png")
    fig.savefig(path, dpi=150)
    plt.close(fig)
    paths.append(path)

    fig, ax = plt.subplots(figsize=(7, 4.5))
    for verdict, color, label in (
        (True, "#2a9d2a", "critical"),
        (False, "crimson", "not critical"),
        (None, "#999999", "not scored"),
    ):
        pts = [(r.kappa, r.mu) for r in report.samples if r.critical is verdict]
        if pts:
            ax.scatter(*zip(*pts), s=12, color=color, label=label, alpha=0.6)
    ax.axhline(report.theta, color="black", lw=0.8, ls="--")
    ax.set_xlabel(r"vertex connectivity $\kappa$")
    ax.set_ylabel(r"$\mu$")
    ax.legend()
    fig.tight_layout()
    path = os.path.join(out_dir, "kappa_vs_mu.png")
    fig.savefig(path, dpi=150)
    plt.close(fig)
    paths.append(path)
    return paths


def render_proof_chain_figure(report: ProofChainReport, out_dir: str) -> str:
    """The two cubics near their largest roots and the gap quadratic."""
    os.makedirs(out_dir, exist_ok=True)
    p = OddFactorParams(report.b, report.k, report.n)
    fB = char_poly_B(p, report.s)
    fBs = char_poly_Bstar(p)
    g = g_poly(p, report.s)
    bound = report.n + report.b + 1

    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(11, 4.5))
    xs = np.linspace(bound - 2, max(report.mu_g2, report.theta) + 2, 400)
    ax1.plot(xs, [fB(x) for x in xs], label=r"clique-join family cubic $f_B$")
    ax1.plot(xs, [fBs(x) for x in xs], label=r"tight family cubic $f_{B_*}$")
    ax1.axhline(0, color="black", lw=0.8)
    ax1.axvline(report.theta, color="crimson", lw=1, ls="--",
                label=rf"$\theta \approx {report.theta:.4f}$")
    ax1.axvline(report.mu_g2, color="#2a9d2a", lw=1, ls="--",
                label=rf"$\mu(G_2) \approx {report.mu_g2:.4f}$")
    ax1.set_xlabel("x")
    ax1.legend(fontsize=8)
    ax1.set_title("characteristic polynomials")

    gx = np.linspace(float(bound) - 4, float(report.mu_g2) + 2, 400)
    ax2.plot(gx, [g(x) for x in gx], color="#4878a8")
    ax2.axhline(0, color="black", lw=0.8)
    ax2.axvline(bound, color="crimson", lw=1, ls="--", label=f"n+b+1 = {bound}")
    ax2.scatter([bound], [report.g_at_bound], color="crimson", zorder=3)
    ax2.set_xlabel(r"$\theta$")
    ax2.legend(fontsize=8)
    ax2.set_title(f"gap quadratic, value {report.g_at_bound} at n+b+1")

    fig.suptitle(f"b={report.b}, k={report.k}, n={report.n}, s={report.s}")
    fig.tight_layout()
    path = os.path.join(out_dir, "proof_chain.png")
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
