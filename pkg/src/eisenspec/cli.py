"""Command-line surface.

Every subcommand emits one JSON document on stdout (machine readable;
``--pretty`` indents it) and returns a nonzero exit status with a JSON
error object on any failure.  Logs go to stderr.  The census honours
``--threads`` and falls back to the EISENSPEC_THREADS environment
variable.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from .algebra import poly_real_root_counts
from .catalog import NAMED_CONSTRUCTORS, named
from .census import is_des, worker_count
from .classify import (
    c5_signature_type,
    classify_lambda2_negative,
    classify_rank2,
    classify_rank3,
    kite_condition,
    semicomplete_bridge_classify,
)
from .digraph import SignedDigraph, parse_sdg, to_sdg
from .expansions import clique_expand, twin_expand
from .graphs import read_graph6_lines
from .spectra import char_poly_exact, eigenvalues_numeric
from .switching import normalize_tree, switching_isomorphic

__all__ = ["main"]


class CommandError(Exception):
    pass


def _load_sdg(path: str) -> SignedDigraph:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return parse_sdg(fh.read())
    except (OSError, ValueError) as exc:
        raise CommandError(f"cannot read signed digraph from {path}: {exc}") from exc


def _emit(payload: dict, pretty: bool) -> None:
    print(json.dumps(payload, indent=2 if pretty else None, sort_keys=True))


def _cmd_charpoly(args) -> dict:
    phi = _load_sdg(args.file)
    poly = char_poly_exact(phi)
    return {
        "n": phi.n,
        "coefficients": [int(c) for c in poly.coefficients],
        "eigenvalues": [round(x, 12) for x in eigenvalues_numeric(phi)],
    }


def _cmd_inertia(args) -> dict:
    phi = _load_sdg(args.file)
    poly = char_poly_exact(phi)
    n_pos, n_zero, n_neg = poly_real_root_counts(poly)
    return {
        "inertia": [n_pos, n_zero, n_neg],
        "rank": phi.n - n_zero,
    }


def _cmd_iso(args) -> dict:
    a = _load_sdg(args.a)
    b = _load_sdg(args.b)
    w = switching_isomorphic(a, b, allow_converse=not args.no_converse)
    if w is None:
        return {"result": "distinct"}
    perm, switch, conj = w
    return {
        "result": "switching_isomorphic",
        "bijection": list(perm),
        "switch": list(switch.exponents),
        "conjugated": conj,
    }


def _parse_tree(spec: str):
    edges = []
    for part in spec.split(";"):
        part = part.strip()
        if not part:
            continue
        u, v = part.split(",")
        edges.append((int(u), int(v)))
    return edges


def _cmd_normalize(args) -> dict:
    phi = _load_sdg(args.file)
    tree = _parse_tree(args.tree) if args.tree else None
    nf = normalize_tree(phi, tree)
    return {
        "tree": sorted([list(e) for e in nf.tree]),
        "base": to_sdg(nf.base),
        "switch": list(nf.applied.exponents),
    }


def _cmd_expand(args) -> dict:
    phi = _load_sdg(args.file)
    tau = [int(t) for t in args.tau.split(",")]
    op = twin_expand if args.mode == "twin" else clique_expand
    return {"sdg": to_sdg(op(phi, tau))}


def _cmd_classify(args) -> dict:
    phi = _load_sdg(args.file)
    theorem = args.theorem
    if theorem == "rank2":
        verdict = classify_rank2(phi)
    elif theorem == "rank3":
        verdict = classify_rank3(phi)
    elif theorem == "lambda2neg":
        verdict = classify_lambda2_negative(phi)
    elif theorem == "c5type":
        verdict = c5_signature_type(phi)
    elif theorem == "kite":
        return {"family": "KITE_TWO_POSITIVE" if kite_condition(phi) else "NONE"}
    elif theorem == "semicomplete":
        verdict = semicomplete_bridge_classify(phi)
    else:
        raise CommandError(f"unknown theorem {theorem!r}")
    return verdict.to_json()


def _cmd_census(args) -> dict:
    target = _load_sdg(args.target)
    graphs = None
    if args.graphs:
        with open(args.graphs, "r", encoding="utf-8") as fh:
            graphs = read_graph6_lines(fh.read())
        if any(g.n != target.n for g in graphs):
            raise CommandError("graph list and target have mismatched orders")
    try:
        report = is_des(
            target,
            graphs=graphs,
            threads=worker_count(args.threads),
        )
    except ValueError as exc:
        raise CommandError(str(exc)) from exc
    return report.to_json()


def _cmd_named(args) -> dict:
    try:
        phi = named(args.constructor, *args.params)
    except ValueError as exc:
        raise CommandError(str(exc)) from exc
    return {"sdg": to_sdg(phi, comment=" ".join([args.constructor] + args.params))}


def _cmd_reproduce(args) -> dict:
    from . import reproduce

    case = args.case
    if case not in reproduce.CASES:
        raise CommandError(
            f"unknown case {case!r}; choose from {sorted(reproduce.CASES)}"
        )
    checks = reproduce.CASES[case](threads=worker_count(args.threads))
    ok = all(passed for _, passed in checks)
    for name, passed in checks:
        print(f"[{'PASS' if passed else 'FAIL'}] {case}: {name}", file=sys.stderr)
    if not ok:
        raise CommandError(f"reproduction case {case} failed")
    return {"case": case, "checks": [{"name": n, "pass": p} for n, p in checks]}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eisenspec",
        description="Exact spectral analysis of signed directed graphs.",
    )
    parser.add_argument("--pretty", action="store_true", help="indent JSON output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("charpoly", help="characteristic polynomial and eigenvalues")
    p.add_argument("file")
    p.set_defaults(func=_cmd_charpoly)

    p = sub.add_parser("inertia", help="exact inertia and rank")
    p.add_argument("file")
    p.set_defaults(func=_cmd_inertia)

    p = sub.add_parser("iso", help="switching isomorphism test")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--no-converse", action="store_true")
    p.set_defaults(func=_cmd_iso)

    p = sub.add_parser("normalize", help="tree normal form")
    p.add_argument("file")
    p.add_argument("--tree", help="semicolon-separated u,v pairs")
    p.set_defaults(func=_cmd_normalize)

    p = sub.add_parser("expand", help="twin or clique expansion")
    p.add_argument("file")
    p.add_argument("--mode", choices=("twin", "clique"), required=True)
    p.add_argument("--tau", required=True, help="comma-separated multiplicities")
    p.set_defaults(func=_cmd_expand)

    p = sub.add_parser("classify", help="classification verdicts")
    p.add_argument("file")
    p.add_argument(
        "--theorem",
        required=True,
        choices=("rank2", "rank3", "lambda2neg", "c5type", "kite", "semicomplete"),
    )
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("census", help="cospectral-mate census")
    p.add_argument("--target", required=True)
    p.add_argument("--graphs", help="graph6 file for the graph source")
    p.add_argument("--threads", type=int, default=None)
    p.set_defaults(func=_cmd_census)

    p = sub.add_parser("named", help="emit a named signed digraph")
    p.add_argument("constructor", choices=sorted(NAMED_CONSTRUCTORS))
    p.add_argument("params", nargs="*")
    p.set_defaults(func=_cmd_named)

    p = sub.add_parser("reproduce", help="re-run a published computation")
    p.add_argument(
        "case",
        choices=(
            "table2",
            "example31",
            "lemma52",
            "thm53",
            "table3",
            "thm610",
            "saltire",
            "families",
        ),
    )
    p.add_argument("--threads", type=int, default=None)
    p.set_defaults(func=_cmd_reproduce)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        payload = args.func(args)
    except CommandError as exc:
        _emit({"status": "error", "error": str(exc)}, args.pretty)
        return 1
    except (ValueError, AssertionError, ArithmeticError) as exc:
        _emit({"status": "error", "error": str(exc)}, args.pretty)
        return 1
    _emit({"status": "ok", "payload": payload}, args.pretty)
    return 0


if __name__ == "__main__":
    sys.exit(main())
