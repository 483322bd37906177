"""Batch command-line surface.

Subcommands (all I/O is UTF-8 JSON on files and stdout, no network):

    diracalg algebra check FILE     Jacobi certification plus derived/center
    diracalg dirac check FILE       Lagrangian + characteristic subspaces
    diracalg mult check FILE        cocycle / invariance / integrability
    diracalg homog classify FILE    full classification report
    diracalg homog search FILE      bounded enumeration of candidates

Exit codes: 0 check passed, 1 check failed, 2 malformed input, 3 search
space too large.  Identical input yields byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Optional

from . import dirac_linear, homogeneous, invariant, multiplicative
from .errors import DiracalgError, SearchSpaceTooLargeError
from .liealg import LieAlgebra
from .ratlin import Subspace

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_BAD_INPUT = 2
EXIT_SEARCH_TOO_LARGE = 3


def _emit(doc: dict) -> None:
    print(json.dumps(doc, sort_keys=True, indent=2))


def _load_json(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        doc = json.load(fh)
    if not isinstance(doc, dict):
        raise ValueError("top-level JSON value must be an object")
    return doc


def _load_candidate(doc: dict) -> homogeneous.HomogeneousCandidate:
    data = multiplicative.CocycleData.from_json(doc["data"])
    h = Subspace.from_json(data.g.dim, doc["h"])
    if "D" in doc:
        d = dirac_linear.DiracSubspace.from_json(doc["D"])
        return homogeneous.HomogeneousCandidate(data, h, d)
    if "D_bar" in doc:
        dbar = dirac_linear.DiracSubspace.from_json(doc["D_bar"])
        return homogeneous.HomogeneousCandidate.from_dbar_input(data, h, dbar)
    raise ValueError("candidate needs a 'D' or 'D_bar' block")


def cmd_algebra_check(path: str) -> int:
    doc = _load_json(path)
    algebra = LieAlgebra.from_json(doc, check=False)
    jacobi = algebra.jacobi_check()
    derived = algebra.derived_algebra()
    center = algebra.center()
    _emit(
        {
            "check": "algebra",
            "dim": algebra.dim,
            "jacobi": jacobi.as_json(),
            "derived_algebra": derived.to_json(),
            "derived_dim": derived.dim,
            "center": center.to_json(),
            "center_dim": center.dim,
        }
    )
    return EXIT_OK if jacobi.ok else EXIT_CHECK_FAILED


def cmd_dirac_check(path: str) -> int:
    doc = _load_json(path)
    n = doc["n"]
    if not isinstance(n, int) or n < 0:
        raise ValueError("n must be a non-negative integer")
    body = Subspace.from_json(2 * n, doc["basis"])
    space = dirac_linear.PairedSpace(n)
    lagr = dirac_linear.is_lagrangian(space, body)
    report: dict = {"check": "dirac", "n": n, "lagrangian": lagr.as_json()}
    if lagr.ok:
        d = dirac_linear.DiracSubspace(space, body)
        ch = dirac_linear.characteristic(d)
        report["characteristic"] = {
            "g0": ch.g0.to_json(),
            "g1": ch.g1.to_json(),
            "p0": ch.p0.to_json(),
            "p1": ch.p1.to_json(),
            "dims": {
                "g0": ch.g0.dim,
                "g1": ch.g1.dim,
                "p0": ch.p0.dim,
                "p1": ch.p1.dim,
            },
        }
        if "algebra" in doc:
            algebra = LieAlgebra.from_json(doc["algebra"])
            if algebra.dim != n:
                raise ValueError("algebra dimension must match n")
            report["integrability"] = {
                "cyclic": invariant.cyclic_integrability(algebra, d).as_json(),
                "courant_closure": invariant.courant_closure_check(algebra, d).as_json(),
            }
    _emit(report)
    return EXIT_OK if lagr.ok else EXIT_CHECK_FAILED


def cmd_multiplicative_check(path: str) -> int:
    doc = _load_json(path)
    data = multiplicative.CocycleData.from_json(doc)
    cocycle = multiplicative.cocycle_check(data)
    bracket = multiplicative.delta_to_bracket(data)
    _emit(
        {
            "check": "multiplicative",
            "dim": data.g.dim,
            "g0_dim": data.g0.dim,
            "cocycle": cocycle.as_json(),
            "n_invariance": multiplicative.n_invariance_check(bracket).as_json(),
            "integrability": multiplicative.integrability_check(bracket).as_json(),
            "ppart": multiplicative.ppart_identity_check(data).as_json(),
            "gpart": multiplicative.gpart_identity_check(data).as_json(),
        }
    )
    return EXIT_OK if cocycle.ok else EXIT_CHECK_FAILED


def _markdown_report(report: homogeneous.ClassificationReport) -> str:
    lines = [
        "| flag | rule | verdict |",
        "| --- | --- | --- |",
    ]
    for name, flag in report.flags.items():
        verdict = {True: "pass", False: "FAIL", None: "skipped"}[flag.ok]
        lines.append(f"| {name} | {flag.rule} | {verdict} |")
    lines.append("")
    lines.append(f"homogeneous: **{report.homogeneous}**")
    lines.append(f"integrable: **{report.integrable}**")
    return "\n".join(lines)


def cmd_homogeneous_classify(path: str, markdown: bool = False) -> int:
    doc = _load_json(path)
    candidate = _load_candidate(doc)
    report = homogeneous.classify(candidate)
    _emit({"check": "homogeneous", **report.as_json()})
    if markdown:
        print(_markdown_report(report))
    return EXIT_OK if report.homogeneous else EXIT_CHECK_FAILED


def cmd_search(path: str, bound: int, limit: Optional[int]) -> int:
    doc = _load_json(path)
    data = multiplicative.CocycleData.from_json(doc["data"])
    h = Subspace.from_json(data.g.dim, doc["h"])
    if bound < 0:
        raise ValueError("bound must be non-negative")
    hits = homogeneous.search_candidates(data, h, bound, limit=limit)
    _emit(
        {
            "check": "homog_search",
            "bound": bound,
            "limit": limit,
            "presentations": dirac_linear.count_range_forms(data.m, bound),
            "count": len(hits),
            "integrable_count": sum(1 for _, r in hits if r.integrable),
            "hits": [
                {
                    "D": candidate.D.to_json(),
                    "report": report.as_json(),
                }
                for candidate, report in hits
            ],
        }
    )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="diracalg",
        description="Exact verification of Dirac-structure data on Lie algebras.",
    )
    parser.add_argument(
        "--seed",
        type=int,
        default=None,
        help="seed the process RNG (replay hook for randomized drivers)",
    )
    groups = parser.add_subparsers(dest="group", required=True)

    p_algebra = groups.add_parser("algebra", help="Lie algebra inputs")
    a_actions = p_algebra.add_subparsers(dest="action", required=True)
    p = a_actions.add_parser("check", help="certify Jacobi, report derived algebra and center")
    p.add_argument("path")

    p_dirac = groups.add_parser("dirac", help="Lagrangian subspace inputs")
    d_actions = p_dirac.add_subparsers(dest="action", required=True)
    p = d_actions.add_parser("check", help="Lagrangian check and characteristic subspaces")
    p.add_argument("path")

    p_mult = groups.add_parser("mult", help="(ideal, cocycle) data inputs")
    m_actions = p_mult.add_subparsers(dest="action", required=True)
    p = m_actions.add_parser("check", help="cocycle, invariance and integrability checks")
    p.add_argument("path")

    p_homog = groups.add_parser("homog", help="homogeneous candidates")
    h_actions = p_homog.add_subparsers(dest="action", required=True)
    p = h_actions.add_parser("classify", help="run the classification pipeline")
    p.add_argument("path")
    p.add_argument("--md", action="store_true", help="also print a markdown summary")
    p = h_actions.add_parser("search", help="enumerate candidates on an integer grid")
    p.add_argument("path")
    p.add_argument("--bound", type=int, default=1, help="entry bound for the grid")
    p.add_argument("--limit", type=int, default=None, help="stop after this many hits")

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.seed is not None:
        random.seed(args.seed)
    try:
        if args.group == "algebra":
            return cmd_algebra_check(args.path)
        if args.group == "dirac":
            return cmd_dirac_check(args.path)
        if args.group == "mult":
            return cmd_multiplicative_check(args.path)
        if args.group == "homog" and args.action == "classify":
            return cmd_homogeneous_classify(args.path, markdown=args.md)
        if args.group == "homog" and args.action == "search":
            return cmd_search(args.path, args.bound, args.limit)
        raise AssertionError("unreachable")
    except SearchSpaceTooLargeError as exc:
        _emit({"error": str(exc), "size": exc.size})
        return EXIT_SEARCH_TOO_LARGE
    except (
        OSError,
        json.JSONDecodeError,
        KeyError,
        TypeError,
        ValueError,
        ZeroDivisionError,
        DiracalgError,
    ) as exc:
        _emit({"error": f"{type(exc).__name__}: {exc}"})
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
