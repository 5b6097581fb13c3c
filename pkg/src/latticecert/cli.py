"""Command-line front end: one JSON document per run, stable exit codes.

Exit codes: 0 ok, 2 invalid input, 3 inconclusive (an unbounded check
could not be settled), 4 counterexample (a verification that a theorem
guarantees must pass did not; always an artifact bug, never user error).
Diagnostics go to standard error; standard output carries exactly one
JSON document, byte-identical across runs with the same arguments and
seed.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bounds import c_report, c_upper
from .certificates import (
    CertificateSearchFailed,
    greedy_certificate,
    minimum_certificate,
)
from .enumeration import (
    CapExceeded,
    Exact,
    UnboundedInconclusive,
    UnboundedWithWitness,
    enumerate_points,
)
from .geometry import (
    Polyhedron,
    PostconditionError,
    PreconditionError,
)
from .lbest import (
    TieBreakCollision,
    clarkson_basis,
    ilp_from_json,
    violator_axiom_check,
)
from .lemma_lab import CAMPAIGNS, campaign_main_lemma
from .witness import build_witness, scaled_rows, verify

OK = 0
INVALID_INPUT = 2
INCONCLUSIVE = 3
COUNTEREXAMPLE = 4

_STATUS_CODE = {
    "ok": OK,
    "invalid-input": INVALID_INPUT,
    "inconclusive": INCONCLUSIVE,
    "counterexample": COUNTEREXAMPLE,
}


def _read_json_file(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ValueError(f"cannot read input file {path!r}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(
            f"malformed JSON in {path!r} at byte offset {exc.pos}: {exc.msg}"
        ) from exc


def _cmd_bound(args) -> tuple[dict, str]:
    report = c_report(args.n, args.k)
    return report.to_json_dict(), "ok"


def _cmd_witness(args) -> tuple[dict, str]:
    w = build_witness(args.n)
    payload: dict = {
        "n": w.n,
        "facet_count": w.poly.m,
        "polyhedron": w.poly.to_json_dict(),
        "tags": [t.to_json_dict() for t in w.tags],
    }
    if args.scaled:
        payload["scaled_rows"] = [
            {"a": list(a), "b": b} for a, b in scaled_rows(w)
        ]
    status = "ok"
    if args.verify:
        report = verify(w, cap=args.cap)
        payload["verification"] = report.to_json_dict()
        if not report.all_ok:
            status = "counterexample"
    return payload, status


def _cmd_enumerate(args) -> tuple[dict, str]:
    poly = Polyhedron.from_json_dict(_read_json_file(args.input))
    outcome = enumerate_points(poly, cap=args.cap)
    if isinstance(outcome, Exact):
        return {
            "outcome": "exact",
            "count": len(outcome.points),
            "points": outcome.points.to_json_list(),
        }, "ok"
    if isinstance(outcome, CapExceeded):
        return {"outcome": "cap_exceeded", "cap": outcome.cap}, "ok"
    if isinstance(outcome, UnboundedWithWitness):
        return {
            "outcome": "unbounded_witness",
            "point": list(outcome.point),
            "ray": list(outcome.ray),
        }, "ok"
    assert isinstance(outcome, UnboundedInconclusive)
    return {
        "outcome": "unbounded_inconclusive",
        "searched": outcome.searched.to_json_dict(),
    }, "inconclusive"


def _cmd_certificate(args) -> tuple[dict, str]:
    poly = Polyhedron.from_json_dict(_read_json_file(args.input))
    if args.mode == "greedy":
        cert, audit = greedy_certificate(poly, cap=args.cap)
    else:
        cert, audit = minimum_certificate(poly, cap=args.cap)
    outcome = enumerate_points(poly, cap=args.cap)
    assert isinstance(outcome, Exact)
    payload = {
        "mode": args.mode,
        "certificate": cert.to_json_dict(),
        "bound": c_upper(poly.n, cert.k),
        "points": outcome.points.to_json_list(),
        "audit": audit,
    }
    return payload, "ok"


def _cmd_lemma_lab(args) -> tuple[dict, str]:
    if args.lemma == "main":
        report = campaign_main_lemma(args.n, args.k, args.trials, seed=args.seed)
    else:
        report = CAMPAIGNS[args.lemma](args.n, args.trials, seed=args.seed)
    status = "counterexample" if report["failures"] else "ok"
    return report, status


def _cmd_lbest(args) -> tuple[dict, str]:
    inst = ilp_from_json(json.dumps(_read_json_file(args.input)))
    if args.algo == "brute":
        from .lbest import _engine

        engine = _engine(inst)
        indices = engine.greedy_basis(range(inst.m), args.l)
        gmask = 0
        for i in indices:
            gmask |= 1 << i
        payload = {
            "basis": sorted(indices),
            "basis_size": len(indices),
            "l": args.l,
            "delta": c_upper(inst.n, args.l),
            "tuple": [list(p) for p in engine.tuple_of(gmask, args.l)],
            "method": "brute",
            "stats": {"tuple_queries": engine.tuple_queries},
        }
        payload["seed"] = args.seed
        return payload, "ok"
    basis = clarkson_basis(inst, args.l, seed=args.seed)
    payload = basis.to_json_dict()
    payload["seed"] = args.seed
    return payload, "ok"


def _cmd_axioms(args) -> tuple[dict, str]:
    inst = ilp_from_json(json.dumps(_read_json_file(args.input)))
    report = violator_axiom_check(inst, args.l, args.trials, seed=args.seed)
    failures = report["consistency_failures"] + report["locality_failures"]
    return report, "counterexample" if failures else "ok"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="latticecert",
        description="Exact bounds, witnesses, and certificates for lattice "
        "points of rational polyhedra.",
    )
    parser.add_argument(
        "--output", choices=["json"], default="json", help="output format"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bound", help="certificate-size bound report")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(handler=_cmd_bound)

    p = sub.add_parser("witness", help="build (and verify) the tight witness polytope")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--verify", action="store_true")
    p.add_argument("--scaled", action="store_true")
    p.add_argument("--cap", type=int, default=10**6)
    p.set_defaults(handler=_cmd_witness)

    p = sub.add_parser("enumerate", help="enumerate integer points of a polyhedron")
    p.add_argument("--input", required=True)
    p.add_argument("--cap", type=int, default=10**6)
    p.set_defaults(handler=_cmd_enumerate)

    p = sub.add_parser("certificate", help="find a point-set-preserving row subset")
    p.add_argument("--input", required=True)
    p.add_argument("--mode", choices=["greedy", "minimum"], default="greedy")
    p.add_argument("--cap", type=int, default=10**6)
    p.set_defaults(handler=_cmd_certificate)

    p = sub.add_parser("lemma-lab", help="randomized lemma campaigns")
    p.add_argument(
        "--lemma",
        choices=["shp", "midpoint", "split1", "split2", "main"],
        required=True,
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(handler=_cmd_lemma_lab)

    p = sub.add_parser("lbest", help="l best points of an integer program")
    p.add_argument("--input", required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--algo", choices=["clarkson", "brute"], default="clarkson")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(handler=_cmd_lbest)

    p = sub.add_parser("axioms", help="violator-space axiom check")
    p.add_argument("--input", required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(handler=_cmd_axioms)

    return parser


def dispatch(argv: list[str] | None = None) -> tuple[dict, int]:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse already printed a diagnostic to stderr
        return {"status": "invalid-input", "error": "argument parsing failed"}, (
            INVALID_INPUT if exc.code else OK
        )
    try:
        payload, status = args.handler(args)
    except (ValueError, PreconditionError, TieBreakCollision) as exc:
        return {"status": "invalid-input", "error": str(exc)}, INVALID_INPUT
    except CertificateSearchFailed as exc:
        return {"status": "inconclusive", "error": str(exc)}, INCONCLUSIVE
    except PostconditionError as exc:
        return {"status": "counterexample", "error": str(exc)}, COUNTEREXAMPLE
    return payload, _STATUS_CODE[status]


def main(argv: list[str] | None = None) -> int:
    payload, code = dispatch(argv)
    sys.stdout.write(json.dumps(payload, separators=(",", ":")) + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
