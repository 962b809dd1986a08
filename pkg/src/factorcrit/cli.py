"""Command-line surface for graph construction, spectra, quotients, factor
criteria, and the verification harness.

Exit codes: 0 success / true verdict, 1 false verdict (witness printed),
2 usage or validation errors.  Data goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import factors, graphs, quotient, spectrum, theorem
from .spectrum import OddFactorParams


class CliError(Exception):
    """Validation failure mapped to exit code 2."""


def _read_graph(path: str) -> graphs.Graph:
    try:
        with open(path, encoding="utf-8") as fh:
            return graphs.from_edge_list(fh.read())
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}") from exc
    except graphs.GraphError as exc:
        raise CliError(f"{path}: {exc}") from exc


def _config_header(args: argparse.Namespace) -> dict:
    return {k: v for k, v in sorted(vars(args).items()) if k != "func"}


def _emit(args, payload: dict) -> None:
    """Print the payload with the resolved configuration in the header."""
    payload = {"config": _config_header(args), **payload}
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        print(f"# config: {json.dumps(payload['config'], sort_keys=True)}")
        for key, value in payload.items():
            if key == "config":
                continue
            print(f"{key}: {value}")


def _parse_params(args) -> OddFactorParams:
    try:
        return OddFactorParams(args.b, args.k, args.n)
    except ValueError as exc:
        raise CliError(str(exc)) from exc


# -- subcommands -------------------------------------------------------------


def cmd_construct(args) -> int:
    if args.family == "extremal":
        p = _parse_params(args)
        try:
            G = graphs.extremal_graph(p.b, p.k, p.n)
        except graphs.GraphError as exc:
            raise CliError(str(exc)) from exc
    else:  # split-join
        if args.s is None or args.parts is None:
            raise CliError("split-join requires --s and --parts")
        try:
            parts = tuple(int(x) for x in args.parts.split(","))
            G = graphs.build_family(graphs.FamilySpec(args.s, parts))
        except (ValueError, graphs.GraphError) as exc:
            raise CliError(str(exc)) from exc
    doc = graphs.to_edge_list(G)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(doc)
        print(f"wrote {args.out}: n={G.n} m={G.m}", file=sys.stderr)
    else:
        sys.stdout.write(doc)
    return 0


def cmd_spectrum(args) -> int:
    G = _read_graph(args.graph)
    try:
        D = spectrum.distance_matrix(G)
    except spectrum.SpectrumError as exc:
        raise CliError(str(exc)) from exc
    W = spectrum.wiener_index(D)
    est = spectrum.spectral_radius(D, tol=args.tol)
    _emit(args, {
        "n": G.n,
        "wiener": W,
        "wiener_floor": 2 * W / G.n,
        "mu": est.value,
        "residual": est.residual,
        "iterations": est.iterations,
    })
    return 0


def cmd_quotient(args) -> int:
    G = _read_graph(args.graph)
    if args.blocks:
        sizes = [int(x) for x in args.blocks.split(":")]
        if sum(sizes) != G.n:
            raise CliError(f"block sizes sum to {sum(sizes)}, graph order is {G.n}")
        blocks, start = [], 0
        for size in sizes:
            blocks.append(list(range(start, start + size)))
            start += size
    elif args.partition_file:
        blocks = []
        with open(args.partition_file, encoding="utf-8") as fh:
            for line in fh:
                if line.strip():
                    blocks.append([int(x) for x in line.split()])
    else:
        raise CliError("quotient requires --blocks or --partition-file")
    try:
        D = spectrum.distance_matrix(G)
        Q = quotient.quotient_matrix(D, blocks)
    except (spectrum.SpectrumError, quotient.QuotientError) as exc:
        raise CliError(str(exc)) from exc
    _emit(args, {
        "matrix": [[float(v) for v in row] for row in Q.entries],
        "equitable": Q.equitable,
        "largest_eigenvalue": quotient.quotient_largest_eigenvalue(Q),
    })
    return 0


def cmd_factor(args) -> int:
    G = _read_graph(args.graph)
    try:
        f = factors.OddBoundFunction.constant(args.b, G.n)
        w = factors.has_odd_factor(G, f)
    except factors.FactorError as exc:
        raise CliError(str(exc)) from exc
    _emit(args, {
        "verdict": w.verdict,
        "witness": list(w.witness) if w.witness is not None else None,
        "odd_components": w.odd_count,
        "bound": w.bound,
    })
    return 0 if w.verdict else 1


def cmd_critical(args) -> int:
    G = _read_graph(args.graph)
    try:
        f = factors.OddBoundFunction.constant(args.b, G.n)
        w = factors.is_k_critical(G, f, args.k)
    except factors.FactorError as exc:
        raise CliError(str(exc)) from exc
    _emit(args, {
        "verdict": w.verdict,
        "witness": list(w.witness) if w.witness is not None else None,
        "odd_components": w.odd_count,
        "bound": w.bound,
    })
    return 0 if w.verdict else 1


def cmd_connectivity(args) -> int:
    G = _read_graph(args.graph)
    try:
        kappa = graphs.vertex_connectivity(G)
    except graphs.GraphError as exc:
        raise CliError(str(exc)) from exc
    _emit(args, {"kappa": kappa})
    return 0


def cmd_verify_theorem(args) -> int:
    p = _parse_params(args)
    try:
        report = theorem.verify_theorem_instance(p, args.samples, args.seed)
    except (ValueError, theorem.TheoremError) as exc:
        raise CliError(str(exc)) from exc
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(report.to_json())
        print(f"wrote {args.out}", file=sys.stderr)
    if args.csv:
        with open(args.csv, "w", encoding="utf-8") as fh:
            fh.write(report.to_csv())
        print(f"wrote {args.csv}", file=sys.stderr)
    if args.figures:
        from .figures import render_theorem_figures

        for path in render_theorem_figures(report, args.figures):
            print(f"wrote {path}", file=sys.stderr)
    _emit(args, {
        "theta": report.theta,
        "sample_count": report.sample_count,
        "scored": sum(r.mu_le_theta for r in report.samples),
        "counterexamples": list(report.counterexamples),
        "extremal_critical": report.extremal_critical,
    })
    return 0 if not report.counterexamples and not report.extremal_critical else 1


def cmd_proof_chain(args) -> int:
    p = _parse_params(args)
    try:
        report = theorem.check_proof_chain(p, args.s)
    except (ValueError, theorem.TheoremError) as exc:
        raise CliError(str(exc)) from exc
    if args.figures:
        from .figures import render_proof_chain_figure

        path = render_proof_chain_figure(report, args.figures)
        print(f"wrote {path}", file=sys.stderr)
    _emit(args, dict(report.__dict__))
    return 0 if report.all_checks_pass() else 1


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="factorcrit",
        description="Distance spectral radius criteria for odd-factor criticality",
    )
    parser.add_argument("--format", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="write a family graph as an edge list")
    c.add_argument("--family", choices=("extremal", "split-join"), required=True)
    c.add_argument("--b", type=int, default=1)
    c.add_argument("--k", type=int, default=1)
    c.add_argument("--n", type=int, default=0)
    c.add_argument("--s", type=int)
    c.add_argument("--parts", help="comma-separated part orders")
    c.add_argument("--out")
    c.set_defaults(func=cmd_construct)

    c = sub.add_parser("spectrum", help="Wiener index and spectral radius")
    c.add_argument("graph")
    c.add_argument("--tol", type=float, default=spectrum.DEFAULT_TOL)
    c.set_defaults(func=cmd_spectrum)

    c = sub.add_parser("quotient", help="quotient matrix over a partition")
    c.add_argument("graph")
    c.add_argument("--blocks", help="colon-separated block sizes, e.g. 2:11:2")
    c.add_argument("--partition-file", help="one block per line, space-separated")
    c.set_defaults(func=cmd_quotient)

    c = sub.add_parser("factor", help="odd-factor existence verdict")
    c.add_argument("graph")
    c.add_argument("--b", type=int, required=True)
    c.set_defaults(func=cmd_factor)

    c = sub.add_parser("critical", help="k-criticality verdict")
    c.add_argument("graph")
    c.add_argument("--b", type=int, required=True)
    c.add_argument("--k", type=int, required=True)
    c.set_defaults(func=cmd_critical)

    c = sub.add_parser("connectivity", help="vertex connectivity")
    c.add_argument("graph")
    c.set_defaults(func=cmd_connectivity)

    c = sub.add_parser("verify-theorem", help="seeded counterexample hunt")
    c.add_argument("--b", type=int, required=True)
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--samples", type=int, default=100)
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--out", help="write the JSON report here")
    c.add_argument("--csv", help="write per-sample CSV rows here")
    c.add_argument("--figures", help="directory for rendered figures")
    c.set_defaults(func=cmd_verify_theorem)

    c = sub.add_parser("proof-chain", help="inequality chain at one point")
    c.add_argument("--b", type=int, required=True)
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--s", type=int, required=True)
    c.add_argument("--figures", help="directory for rendered figures")
    c.set_defaults(func=cmd_proof_chain)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
