"""Command-line interface.

Exit codes: 0 for success or an affirmative answer, 1 for a negative
verdict, 2 for unreadable input or a violated precondition.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import bounds, core, edgecolor, spc, ttree, weighted
from .formats import (
    FormatError,
    dump_json,
    format_coloring,
    format_labels,
    format_sg,
    parse_pm,
    parse_sg,
    parse_swg,
    read_text,
    write_text,
)

log = logging.getLogger("signedbound")


class InputError(Exception):
    """Bad input or failed precondition; reported with exit code 2."""


def _emit(text: str, out: str | None) -> None:
    if out:
        write_text(out, text)
    else:
        sys.stdout.write(text)


def _load_sg(path: str) -> core.SignedGraph:
    try:
        return parse_sg(read_text(path))
    except FormatError as exc:
        raise InputError(f"{path}:{str(exc).lstrip()}" if exc.line else f"{path}: {exc}") from None


def _map_json(f: core.VertexMap) -> dict:
    return {
        "image": list(f.image),
        "switched": [v for v, s in enumerate(f.switching.flip) if s],
    }


def cmd_neg_girth(args) -> int:
    g = core.negative_girth(_load_sg(args.file))
    print("none" if g is None else g)
    return 0


def cmd_switch_equiv(args) -> int:
    A, B = _load_sg(args.a), _load_sg(args.b)
    try:
        S = core.is_switching_equivalent(A, B)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if S is None:
        print("not equivalent")
        return 1
    print("equivalent; switch at:", " ".join(str(v) for v, f in enumerate(S.flip) if f) or "-")
    return 0


def _load_swg(path: str, k: int) -> weighted.WeightedSignedGraph:
    try:
        return parse_swg(read_text(path), k)
    except FormatError as exc:
        raise InputError(f"{path}: {exc}") from None


def cmd_wide(args) -> int:
    H = _load_swg(args.file, args.k)
    ok = weighted.is_2k_wide(H, args.k)
    print("wide" if ok else "not wide")
    return 0 if ok else 1


def cmd_expand(args) -> int:
    H = _load_swg(args.file, args.k)
    _emit(format_sg(weighted.barbar_expand(H, args.k)), args.output)
    return 0


def cmd_spc(args) -> int:
    try:
        G = spc.spc(args.n)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    _emit(format_sg(G), args.output)
    if args.output:
        write_text(Path(args.output).with_suffix(".labels"), format_labels(G.labels))
    return 0


def cmd_edc(args) -> int:
    _emit(format_sg(spc.edc(_load_sg(args.file))), args.output)
    return 0


def cmd_list_cliques(args) -> int:
    L = bounds.enumerate_wide_cliques(args.t, args.k)
    print(f"count {len(L)}")
    for form in L:
        print(" ".join(str(w) for w in form))
    return 0


def _distance_graph(B: core.SignedGraph, k: int) -> bounds.DistanceGraph:
    try:
        return bounds.build_distance_graph(B, k)
    except ValueError as exc:
        raise InputError(f"target hypothesis fails: {exc}") from None


def cmd_check_bound(args) -> int:
    B = _load_sg(args.target)
    D = _distance_graph(B, args.k)
    verdict = bounds.check_bound(
        B, args.t, args.k, distance_graph=D, verify_limit=args.verify_limit, threads=args.threads
    )
    if args.trace:
        write_text(args.trace, dump_json(verdict.trace.to_json()))
    if verdict.bounds:
        print(f"YES: closed set of {len(verdict.certificate)} cliques")
        _emit(dump_json(verdict.certificate.to_json(args.target)), args.output)
        return 0
    rounds = len(verdict.trace.rounds)
    if verdict.counterexample is None:
        print(f"NO: pruning emptied the clique set in {rounds} rounds; {verdict.note}")
        return 1
    flag = "oracle-verified" if verdict.oracle_verified else "not oracle-verified"
    print(
        f"NO: pruning emptied the clique set in {rounds} rounds; "
        f"counterexample on {verdict.counterexample.n} vertices ({flag})"
    )
    _emit(format_sg(verdict.counterexample), args.output)
    return 1


def cmd_map(args) -> int:
    G, B = _load_sg(args.graph), _load_sg(args.target)
    try:
        data = json.loads(read_text(args.certificate))
        cert = bounds.CliqueSet.from_json(data, B)
    except (ValueError, KeyError, TypeError) as exc:
        raise InputError(f"{args.certificate}: unreadable certificate ({exc})") from None
    if cert.t != args.t or cert.k != args.k:
        raise InputError(f"certificate is for t={cert.t}, k={cert.k}")
    L = bounds.enumerate_wide_cliques(args.t, args.k)
    if not len(cert) or not bounds.is_closed(cert, L):
        raise InputError("certificate is empty or not closed")
    try:
        bounds.check_source(G, args.k)
        f = bounds.map_to_bound(G, B, cert)
    except ttree.NotPartialTTree as exc:
        raise InputError(f"source hypothesis fails: {exc}") from None
    except ValueError as exc:
        raise InputError(f"source hypothesis fails: {exc}") from None
    if not core.verify_homomorphism(G, B, f):
        raise AssertionError("constructed map is not a homomorphism")
    _emit(dump_json(_map_json(f)), args.output)
    return 0


def cmd_hom(args) -> int:
    G, B = _load_sg(args.graph), _load_sg(args.target)
    f = core.find_homomorphism(G, B)
    if f is None:
        print("none")
        return 1
    _emit(dump_json(_map_json(f)), args.output)
    return 0


def cmd_edge_color(args) -> int:
    try:
        M = parse_pm(read_text(args.file))
    except FormatError as exc:
        raise InputError(f"{args.file}: {exc}") from None
    try:
        c = edgecolor.edge_color(M, args.k)
    except edgecolor.PreconditionError as exc:
        raise InputError(f"precondition '{exc.reason}' fails: {exc}") from None
    except ValueError as exc:
        raise InputError(str(exc)) from None
    _emit(format_coloring(c), args.output)
    return 0


def cmd_contains_ok(args) -> int:
    G = _load_sg(args.file)
    try:
        w = core.contains_Ok_element(G, args.k)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if w is None:
        print("none")
        return 1
    sign = "+" if core.cycle_sign(G, w.edges) > 0 else "-"
    print(f"cycle length {len(w)} sign {sign} vertices {' '.join(map(str, w.vertices))}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="signedbound", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.set_defaults(func=func)
        return sp

    sp = add("neg-girth", cmd_neg_girth, "negative girth of a signed graph")
    sp.add_argument("file")

    sp = add("switch-equiv", cmd_switch_equiv, "decide switching equivalence")
    sp.add_argument("a")
    sp.add_argument("b")

    sp = add("wide", cmd_wide, "is a weighted graph 2k-wide")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("file")

    sp = add("expand", cmd_expand, "gadget expansion of a weighted graph")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("file")
    sp.add_argument("-o", "--output")

    sp = add("spc", cmd_spc, "signed projective cube SPC(N) with edge labels")
    sp.add_argument("n", type=int)
    sp.add_argument("-o", "--output")

    sp = add("edc", cmd_edc, "extended double cover")
    sp.add_argument("file")
    sp.add_argument("-o", "--output")

    sp = add("list-cliques", cmd_list_cliques, "list the wide (t+1)-cliques")
    sp.add_argument("--t", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)

    sp = add("check-bound", cmd_check_bound, "decide whether B bounds the class")
    sp.add_argument("--t", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("target")
    sp.add_argument("-o", "--output", help="certificate (.json) or counterexample (.sg)")
    sp.add_argument("--trace", help="write the pruning trace as JSON")
    sp.add_argument("--verify-limit", type=int, default=25)
    sp.add_argument("--threads", type=int, default=1)

    sp = add("map", cmd_map, "map a partial t-tree to B using a certificate")
    sp.add_argument("--t", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("graph")
    sp.add_argument("target")
    sp.add_argument("--certificate", required=True)
    sp.add_argument("-o", "--output")

    sp = add("hom", cmd_hom, "exhaustive homomorphism search")
    sp.add_argument("graph")
    sp.add_argument("target")
    sp.add_argument("-o", "--output")

    sp = add("edge-color", cmd_edge_color, "2k-edge-colour a plane map")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("file")
    sp.add_argument("-o", "--output")

    sp = add("contains-ok", cmd_contains_ok, "find a cycle that cannot map to C_-k")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("file")
    return p


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
