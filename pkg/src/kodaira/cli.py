"""Command-line front end.

Subcommands: list, show, classify, compare, matrix. Reports go to stdout,
diagnostics to stderr. Exit status is 0 on success, 1 for usage and parse
errors, 2 for validation failures and unrecognized curves. `--format json`
emits machine-readable output with stable field names.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any

from .catalog import (
    TypeSpecError,
    build,
    catalog_types,
    classify,
    parse_type,
    subclass_of,
)
from .curves import ConfigurationError, CurveConfiguration, fiber_obstruction, intersection_matrix
from .document import DocumentError, parse_document
from .invariants import (
    DsgStatus,
    InvariantProfile,
    dsg_status,
    euler_characteristic,
    invariant_profile,
    is_k_minus_one_regular,
)
from .partner import PartnerVerdict, VerdictKind, compare, partner_matrix

_DSG_TEXT = {
    DsgStatus.TRIVIAL: "trivial (smooth curve)",
    DsgStatus.IDEMPOTENT_COMPLETE: "idempotent complete",
    DsgStatus.UNKNOWN: "unknown",
}

_CELL_CHAR = {
    VerdictKind.ISOMORPHIC: "=",
    VerdictKind.NOT_EQUIVALENT: "x",
    VerdictKind.POSSIBLY_EQUIVALENT: "?",
}

_CATALOG_LISTING = [
    (
        "L1 (reduced fibers)",
        [
            ("I(0)", "smooth elliptic curve"),
            ("I(1)", "rational curve with one node"),
            ("I(N)", "cycle of N rational curves, N >= 2; N components, multiplicities (1,...,1)"),
            ("II", "rational curve with one cusp"),
            ("III", "two rational curves meeting at a tacnode"),
            ("IV", "three concurrent rational curves"),
        ],
    ),
    (
        "L2 (non-reduced, non-multiple fibers)",
        [
            ("IStar(N)", "N+5 components, multiplicities (1,1,1,1,2,...,2), N >= 0"),
            ("IIStar", "9 components, multiplicities (1,2,3,4,5,6,4,3,2)"),
            ("IIIStar", "8 components, multiplicities (1,2,3,4,3,2,2,1)"),
            ("IVStar", "7 components, multiplicities (1,2,3,2,2,1,1)"),
        ],
    ),
    (
        "L3 (multiple fibers)",
        [
            ("mI(m,0)", "multiple smooth elliptic curve, m >= 2"),
            ("mI(m,1)", "multiple rational curve with one node, m >= 2"),
            ("mI(m,N)", "cycle of N rational curves with multiplicity m, m >= 2, N >= 2"),
        ],
    ),
]


def _emit_json(payload: Any) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True))


def cmd_list(args: argparse.Namespace) -> int:
    if args.format == "json":
        families = [
            {"name": name, "subclass": group.split(" ", 1)[0], "description": text}
            for group, entries in _CATALOG_LISTING
            for name, text in entries
        ]
        _emit_json({"families": families})
        return 0
    print("Kodaira curve catalog")
    for group, entries in _CATALOG_LISTING:
        print(f"{group}:")
        for name, text in entries:
            print(f"  {name}: {text}")
    return 0


def _matrix_lines(config: CurveConfiguration) -> list[str]:
    entries = intersection_matrix(config).entries
    width = max(len(str(e)) for row in entries for e in row)
    return ["  [" + " ".join(f"{e:>{width}}" for e in row) + "]" for row in entries]


def _singular_locus_text(profile: InvariantProfile) -> str:
    if profile.smooth:
        return "empty (smooth curve)"
    if profile.reduced:
        count = profile.singular_point_count
        return f"{count} isolated point" + ("s" if count != 1 else "")
    return "the whole curve (non-reduced)"


def cmd_show(args: argparse.Namespace) -> int:
    kind = parse_type(args.type)
    config = build(kind)
    profile = invariant_profile(config)
    status = dsg_status(config)
    if args.format == "json":
        _emit_json(
            {
                "type": str(kind),
                "subclass": subclass_of(kind).value,
                "components": profile.n_components,
                "multiplicities": list(config.multiplicities()),
                "reduced": profile.reduced,
                "smooth": profile.smooth,
                "euler_characteristic": euler_characteristic(config),
                "arithmetic_genus": profile.arithmetic_genus,
                "g0_rank": profile.g0_rank,
                "k_minus_one_rank": profile.k_minus_one_rank,
                "k_minus_one_regular": is_k_minus_one_regular(config),
                "picard": {
                    "unipotent_dim": profile.picard.unipotent_dim,
                    "torus_rank": profile.picard.torus_rank,
                    "elliptic_rank": profile.picard.elliptic_rank,
                    "discrete_rank": profile.picard.discrete_rank,
                },
                "singular_point_count": profile.singular_point_count,
                "dualising_sheaf": "trivial",
                "dsg_status": status.value,
                "intersection_matrix": [list(r) for r in intersection_matrix(config).entries],
            }
        )
        return 0
    print(f"type: {kind}")
    print(f"subclass: {subclass_of(kind).value}")
    print(f"components: {profile.n_components}")
    print(f"multiplicities: ({', '.join(str(m) for m in config.multiplicities())})")
    print(f"reduced: {'yes' if profile.reduced else 'no'}")
    print(f"smooth: {'yes' if profile.smooth else 'no'}")
    print(f"euler characteristic: {euler_characteristic(config)}")
    print(f"arithmetic genus: {profile.arithmetic_genus}")
    print(f"G0 rank: {profile.g0_rank}")
    print(f"K^-1 rank: {profile.k_minus_one_rank}")
    print("K^i rank for i <= -2: 0")
    print(f"K^-1-regular: {'yes' if is_k_minus_one_regular(config) else 'no'}")
    print(f"Pic: {profile.picard.describe()}")
    print(f"singular locus: {_singular_locus_text(profile)}")
    print("dualising sheaf: trivial")
    print(f"D_sg: {_DSG_TEXT[status]}")
    print("intersection matrix:")
    for line in _matrix_lines(config):
        print(line)
    return 0


def cmd_classify(args: argparse.Namespace) -> int:
    with open(args.path, encoding="utf-8") as handle:
        text = handle.read()
    config = parse_document(text)
    kind = classify(config)
    if kind is not None:
        if args.format == "json":
            _emit_json({"recognized": True, "type": str(kind)})
        else:
            print(str(kind))
        return 0
    obstruction = fiber_obstruction(config)
    reason = obstruction if obstruction is not None else "no catalog match"
    if args.format == "json":
        payload: dict[str, Any] = {
            "recognized": False,
            "reason": reason,
            "fiber_like": obstruction is None,
        }
        if obstruction is None:
            payload["dualising_sheaf"] = "assumed trivial by fiber convention"
        _emit_json(payload)
    else:
        print(f"not a Kodaira curve: {reason}")
    return 2


def _verdict_payload(left: str, right: str, verdict: PartnerVerdict) -> dict[str, Any]:
    return {
        "left": left,
        "right": right,
        "verdict": verdict.kind.value,
        "witnesses": [
            {"invariant": w.invariant, "left": w.left, "right": w.right}
            for w in verdict.witnesses
        ],
        "note": verdict.note,
    }


def cmd_compare(args: argparse.Namespace) -> int:
    kind_a = parse_type(args.left)
    kind_b = parse_type(args.right)
    verdict = compare(build(kind_a), build(kind_b))
    if args.format == "json":
        _emit_json(_verdict_payload(str(kind_a), str(kind_b), verdict))
        return 0
    print(f"left: {kind_a}")
    print(f"right: {kind_b}")
    print(f"verdict: {verdict.kind.value}")
    for witness in verdict.witnesses:
        print(f"witness: {witness}")
    if verdict.note:
        print(f"note: {verdict.note}")
    return 0


def cmd_matrix(args: argparse.Namespace) -> int:
    types = catalog_types(args.max_n, args.max_m)
    table = partner_matrix(types)
    names = [str(t) for t in types]
    if args.format == "json":
        _emit_json(
            {
                "types": names,
                "cells": [[v.kind.value for v in row] for row in table],
            }
        )
        return 0
    print("legend: = isomorphic, x not equivalent, ? possibly equivalent")
    width = max(len(name) for name in names)
    print(" " * width + "".join(f" {name:>{width}}" for name in names))
    for name, row in zip(names, table):
        cells = "".join(f" {_CELL_CHAR[v.kind]:>{width}}" for v in row)
        print(f"{name:<{width}}" + cells)
    return 0


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # exit 1 on usage errors
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _add_format(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--format", choices=("table", "json"), default="table", help="output format"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="kodaira",
        description="Kodaira curves: catalog, invariants and Fourier-Mukai partner checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_list = sub.add_parser("list", help="list the catalog type families")
    _add_format(p_list)
    p_list.set_defaults(func=cmd_list)

    p_show = sub.add_parser("show", help="full invariant report for a type")
    p_show.add_argument("type", help='type spec, e.g. "IStar(3)" or "mI(2,4)"')
    _add_format(p_show)
    p_show.set_defaults(func=cmd_show)

    p_classify = sub.add_parser("classify", help="recognize a configuration document")
    p_classify.add_argument("path", help="configuration document to read")
    _add_format(p_classify)
    p_classify.set_defaults(func=cmd_classify)

    p_compare = sub.add_parser("compare", help="Fourier-Mukai partner verdict for two types")
    p_compare.add_argument("left")
    p_compare.add_argument("right")
    _add_format(p_compare)
    p_compare.set_defaults(func=cmd_compare)

    p_matrix = sub.add_parser("matrix", help="pairwise verdicts over a parameter range")
    p_matrix.add_argument("--max-n", type=int, default=4, help="largest cycle/star parameter N")
    p_matrix.add_argument("--max-m", type=int, default=3, help="largest multiplicity m")
    _add_format(p_matrix)
    p_matrix.set_defaults(func=cmd_matrix)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        if code is None:
            return 0
        return code if isinstance(code, int) else 1
    try:
        return args.func(args)
    except (TypeSpecError, DocumentError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ConfigurationError as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
