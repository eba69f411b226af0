"""Command-line front end.

Exit codes: 0 verified/true/realizable, 1 refuted/false/infeasible,
2 unknown/truncated, 3 input error. ``--json`` replaces the human summary on
stdout with a sorted, timing-free JSON report so identical invocations give
identical bytes. ``DEGSEQ_LOG`` sets the log level (e.g. ``DEBUG``).
"""
from __future__ import annotations

import argparse
import json
import logging
import math
import os
import sys
from pathlib import Path

from . import certificates, faces, io, kernels, search
from .core import InputError, PartitionShape, lattice_member_balanced, lattice_member_uniform
from .realizability import Status, realize_subhypergraph
from .zonotope import Feasible, format_fraction, zonotope_member

OK, REFUTED, UNKNOWN, BAD_INPUT = 0, 1, 2, 3

log = logging.getLogger("hypdeg")


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors, which would read as "unknown"
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(BAD_INPUT, f"{self.prog}: error: {message}\n")


def _read(path: str | None) -> tuple[str, str]:
    if path is None or path == "-":
        return sys.stdin.read(), "<stdin>"
    try:
        return Path(path).read_text(), path
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _shape(args) -> PartitionShape | None:
    if args.lam is None and args.parts is None:
        return None
    if args.lam is None or args.parts is None:
        raise InputError("--lambda and --parts go together")
    return PartitionShape(tuple(args.lam), tuple(args.parts))


def _edges(args):
    if not args.edges:
        raise InputError("--edges is required")
    return io.parse_hypergraph(*_read(args.edges))


def _vector(path, shape=None):
    text, source = _read(path)
    return io.parse_vector(text, shape, source)


def _emit(args, payload: dict, summary: str) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        print(summary)


def cmd_lattice(args) -> int:
    shape = _shape(args)
    p = _vector(args.target, shape)
    if shape is not None:
        ok = lattice_member_balanced(p, shape)
    elif args.k is not None:
        ok = lattice_member_uniform(p, args.k)
    else:
        raise InputError("give --k or --lambda/--parts")
    _emit(args, {"point": p, "member": ok}, f"lattice member: {str(ok).lower()}")
    return OK if ok else REFUTED


def cmd_member(args) -> int:
    K = _edges(args)
    p = _vector(args.target, K.shape)
    res = zonotope_member(p, K.edges)
    if isinstance(res, Feasible):
        payload = {"status": "Feasible", "decomposition": res.decomposition.to_json()}
        lines = ["Feasible"] + [f"  {format_fraction(c)} * {list(e)}"
                                for e, c in res.decomposition.terms]
        _emit(args, payload, "\n".join(lines))
        return OK
    cert = res.certificate
    _emit(args, {"status": "Infeasible", "certificate": cert.to_json()},
          f"Infeasible\n  functional {[format_fraction(a) for a in cert.functional]}\n"
          f"  threshold {format_fraction(cert.threshold)}")
    return REFUTED


def cmd_realize(args) -> int:
    K = _edges(args)
    p = _vector(args.target, K.shape)
    res = realize_subhypergraph(p, K.edges, budget=args.budget)
    summary = f"{res.status.value} ({res.nodes_explored} nodes)"
    if res.witness is not None:
        res.witness.shape = K.shape
        summary += "\n" + io.format_hypergraph(res.witness).rstrip()
    _emit(args, res.to_json(), summary)
    return {Status.REALIZABLE: OK, Status.INFEASIBLE: REFUTED, Status.UNKNOWN: UNKNOWN}[res.status]


def cmd_faces(args) -> int:
    K = _edges(args)
    w = _vector(args.weights, K.shape)
    if len(w) != K.n:
        raise InputError(f"weight vector has {len(w)} entries, expected {K.n}")
    split = faces.face_split(K.edges, w)
    payload = {"zero": [list(e) for e in split.k_zero], "plus": [list(e) for e in split.k_plus],
               "minus": [list(e) for e in split.k_minus], "offset": split.offset(K.n)}
    summary = io.format_face_split(split, K.n, K.k).rstrip()
    if args.target:
        p = _vector(args.target, K.shape)
        moved = faces.face_point_translate(p, split, args.direction)
        payload["translated"] = moved
        summary += f"\n[translated {args.direction}]\n" + io.format_vector(moved, K.shape).rstrip()
    _emit(args, payload, summary)
    return OK


def cmd_lift(args) -> int:
    if args.k is None:
        raise InputError("--k is required")
    p = _vector(args.target)
    lifted = faces.lift_map(p, args.k)
    payload = {"lifted": lifted}
    summary = io.format_vector(lifted).rstrip()
    if args.weights:
        lw = faces.lift_weights(_vector(args.weights), args.k)
        payload["lifted_weights"] = lw
        summary += "\n" + io.format_vector(lw).rstrip()
    _emit(args, payload, summary)
    return OK


def cmd_coarsen(args) -> int:
    shape = _shape(args)
    if shape is None or not args.fine:
        raise InputError("coarsen needs --lambda, --parts and --fine")
    cmap = faces.is_coarsening(shape, args.fine)
    if cmap is None:
        _emit(args, {"coarsening": None}, "not a coarsening")
        return REFUTED
    payload = {"coarsening": cmap.to_json()}
    summary = json.dumps(cmap.to_json(), sort_keys=True)
    if args.N is not None:
        w = faces.coarsening_weights(cmap, args.N)
        payload["weights"] = w
        summary += "\n" + io.format_vector(w, shape).rstrip()
    _emit(args, payload, summary)
    return OK


def cmd_verify(args) -> int:
    if args.claim == "example1":
        report = certificates.verify_example1()
    elif args.claim == "example2":
        report = certificates.verify_example2(cap=args.cap if args.cap is not None else 5)
    else:
        report = certificates.verify_lift_chain(args.steps)
    _emit(args, report.to_json(), report.summary())
    return OK if report.passed else REFUTED


def cmd_scan(args) -> int:
    K = _edges(args)
    if args.find:
        hints = [_vector(args.weights, K.shape)] if args.weights else []
        res = search.find_nonrealizable_point(
            K.edges, K.n, k=K.k, shape=K.shape, cap=args.cap, budget=args.budget or math.inf,
            moduli=[args.mod] if args.mod else None, size_cap=args.size_cap, functionals=hints)
        summary = f"{res.status} via {res.strategy}"
        if res.point is not None:
            summary += "\n" + io.format_vector(res.point, K.shape).rstrip()
        _emit(args, res.to_json(), summary)
        return {"found": OK, "none": REFUTED}.get(res.status, UNKNOWN)
    found = search.scan_obstructions(K.edges, args.mod or K.k, size_cap=args.size_cap, n=K.n)
    _emit(args, {"modulus": args.mod or K.k, "size_cap": args.size_cap,
                 "subsets": [list(T) for T in found]},
          "\n".join(" ".join(map(str, T)) for T in found) or "no obstruction sets")
    return OK if found else REFUTED


def cmd_exhaustive(args) -> int:
    if args.n is None or args.k is None or args.cap is None:
        raise InputError("exhaustive needs --n, --k and --cap")
    rep = search.exhaustive_check(args.n, args.k, args.cap, budget=args.budget,
                                  shards=args.shards)
    summary = (f"{rep.status}: {rep.points_examined} points, {rep.members_of_D_cap_L} in D∩L, "
               f"{len(rep.nonrealizable_points)} not realizable")
    _emit(args, rep.to_json(), summary)
    if rep.nonrealizable_points:
        return REFUTED
    return UNKNOWN if rep.status == "truncated" else OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hypdeg", description="Degree sequences of uniform and balanced hypergraphs.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print a JSON report")
    common.add_argument("--budget", type=int, default=0, help="search node / point budget, 0 = unlimited")
    common.add_argument("--cap", type=int)
    common.add_argument("--mod", type=int)
    common.add_argument("--shards", type=int, default=1)
    common.add_argument("--k", type=int)
    common.add_argument("--n", type=int)
    common.add_argument("--lambda", dest="lam", type=int, nargs="+")
    common.add_argument("--parts", type=int, nargs="+")
    common.add_argument("--edges", help="hypergraph file")
    common.add_argument("--target", help="vector file (default: stdin)")
    common.add_argument("--weights", help="weight vector file")

    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)
    sub.add_parser("lattice", parents=[common], help="lattice membership").set_defaults(func=cmd_lattice)
    sub.add_parser("member", parents=[common], help="zonotope membership").set_defaults(func=cmd_member)
    sub.add_parser("realize", parents=[common], help="subhypergraph realizability").set_defaults(func=cmd_realize)
    p = sub.add_parser("faces", parents=[common], help="face split for a weight vector")
    p.add_argument("--direction", choices=[d.value for d in faces.Direction], default="into_face")
    p.set_defaults(func=cmd_faces)
    sub.add_parser("lift", parents=[common], help="append sum/k").set_defaults(func=cmd_lift)
    p = sub.add_parser("coarsen", parents=[common], help="coarsening map and weights")
    p.add_argument("--fine", type=int, nargs="+")
    p.add_argument("--N", type=int)
    p.set_defaults(func=cmd_coarsen)
    p = sub.add_parser("verify-paper", parents=[common], help="re-check a built-in certificate")
    p.add_argument("--claim", choices=["example1", "example2", "lift-chain"], required=True)
    p.add_argument("--steps", type=int, default=1)
    p.set_defaults(func=cmd_verify)
    p = sub.add_parser("scan", parents=[common], help="obstruction sets; --find searches for a point")
    p.add_argument("--size-cap", type=int, default=search.DEFAULT_SIZE_CAP)
    p.add_argument("--find", action="store_true")
    p.set_defaults(func=cmd_scan, budget=20_000)
    sub.add_parser("exhaustive", parents=[common], help="desk-scale exhaustive check").set_defaults(func=cmd_exhaustive)
    return parser


def main(argv=None) -> int:
    level = os.environ.get("DEGSEQ_LOG", "WARNING").upper()
    logging.basicConfig(level=getattr(logging, level, logging.WARNING),
                        format="%(levelname)s %(name)s: %(message)s")
    args = build_parser().parse_args(argv)
    log.debug("verb %s, kernel backend %s", args.verb, kernels.BACKEND)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
