"""Command-line front end: ``lagfib classify | formula | catalog``."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable

from . import canbundle
from .canbundle import DiscriminantComponent, assemble
from .degeneration import analyse
from .errors import (
    ClassifierError,
    LagfibError,
    NotQuasiUnipotent,
    NotSymplectic,
    ParseError,
    RankGateViolation,
    VerificationFailure,
)
from .examples import FIXTURE_DIR, catalog_all, extended_catalog, write_fixture_files
from .germfile import GermFile, load_germ
from .intmat import MonodromyMatrix, quasi_unipotent_index, semisimple_order, torus_rank
from .kodaira import kodaira_from_monodromy

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_CLASSIFIER = 3
EXIT_GATE = 4
EXIT_VERIFY = 5

BRANCH_BY_RANK = {0: "smooth", 1: "first order"}


def exit_code(exc: Exception) -> int:
    if isinstance(exc, ParseError):
        return EXIT_PARSE
    if isinstance(exc, (RankGateViolation, NotQuasiUnipotent, NotSymplectic)):
        return EXIT_GATE
    if isinstance(exc, VerificationFailure):
        return EXIT_VERIFY
    return EXIT_CLASSIFIER


def _yes_no(flag: bool) -> str:
    return "yes" if flag else "no"


def record_dict(rec) -> dict:
    return {
        "name": rec.name,
        "row": rec.row,
        "components": [{"label": label, "multiplicity": mult} for label, mult in rec.components],
        "kodaira_fibre": str(rec.kodaira_fibre),
        "degree": rec.degree,
        "local_section": rec.local_section,
        **({"axis": rec.axis} if rec.axis else {}),
    }


def monodromy_dict(germ: GermFile) -> dict:
    mat = MonodromyMatrix(germ.monodromy)
    rank = torus_rank(mat)
    out = {
        "torus_rank": rank,
        "branch": BRANCH_BY_RANK[rank],
        "semisimple_order": semisimple_order(mat),
        "quasi_unipotent_index": quasi_unipotent_index(mat),
    }
    if germ.base_dim == 1:
        out["kodaira_type"] = str(kodaira_from_monodromy(germ.monodromy))
    return out


def classify_document(germ: GermFile, with_formula: bool) -> dict:
    doc: dict = {"schema": germ.schema, "base_dim": germ.base_dim}
    if germ.name:
        doc["name"] = germ.name
    if germ.monodromy is not None:
        doc["monodromy"] = monodromy_dict(germ)
    components = list(germ.discriminant)
    if germ.datum is not None:
        result = analyse(germ.datum)
        doc["classification"] = {
            "branch": result.branch,
            "group_order": result.group_order,
            "record": record_dict(result.record),
            "notes": list(result.notes),
        }
        if with_formula and not components:
            components = [
                DiscriminantComponent("P", result.record, result.branch, result.group_order)
            ]
    if with_formula or components:
        if not components:
            raise ParseError("file: --formula needs a germ payload or a discriminant list")
        doc["canonical_bundle"] = _assemble(components).as_dict()
    return doc


def _assemble(components):
    try:
        return assemble(components)
    except ValueError as exc:
        raise ClassifierError(str(exc)) from None


# ---------------------------------------------------------------------------
# text rendering


def render_classify(doc: dict) -> str:
    lines = []
    if "name" in doc:
        lines.append(f"germ: {doc['name']}")
    lines.append(f"base dimension: {doc['base_dim']}")
    if "monodromy" in doc:
        mono = doc["monodromy"]
        lines.append(f"torus rank: {mono['torus_rank']} ({mono['branch']} branch)")
        lines.append(f"semisimple order: {mono['semisimple_order']}")
        lines.append(f"quasi-unipotent index: {mono['quasi_unipotent_index']}")
        if "kodaira_type" in mono:
            lines.append(f"kodaira type: {mono['kodaira_type']}")
    if "classification" in doc:
        cls = doc["classification"]
        rec = cls["record"]
        comps = " + ".join(
            (f"{c['multiplicity']}{c['label']}" if c["multiplicity"] != 1 else c["label"])
            for c in rec["components"]
        )
        lines += [
            f"type: {rec['name']}",
            f"branch: {cls['branch']} (group order {cls['group_order']})",
            f"components: {comps}",
            f"kodaira fibre: {rec['kodaira_fibre']}",
            f"degree: {rec['degree']}",
            f"local section: {_yes_no(rec['local_section'])}",
        ]
        if "axis" in rec:
            lines.append(f"reflection axis: {rec['axis']}")
        lines += [f"note: {n}" for n in cls["notes"]]
    if "canonical_bundle" in doc:
        lines.append(render_formula(doc["canonical_bundle"]))
    return "\n".join(lines)


def render_formula(report: dict) -> str:
    lines = [report["formula"]]
    for c in report["components"]:
        lines.append(
            f"  {c['id']}: {c['type']}  a_P = {c['a_P']}  "
            f"(coefficient column {c['table_column']}, character order {c['character_order']})"
        )
    lines.append(f"cartier multiple: {report['cartier_multiple']}")
    return "\n".join(lines)


def _emit(doc: dict, as_json: bool, text: Callable[[dict], str]) -> None:
    print(json.dumps(doc, indent=2) if as_json else text(doc))


# ---------------------------------------------------------------------------
# commands


def _guarded(fn: Callable[[], int]) -> int:
    try:
        return fn()
    except LagfibError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return exit_code(exc)


def cmd_classify(paths: list[str], with_formula: bool = False, as_json: bool = False) -> int:
    worst = EXIT_OK
    for path in paths:
        def run(path=path) -> int:
            germ = load_germ(path)
            _emit(classify_document(germ, with_formula), as_json, render_classify)
            return EXIT_OK
        worst = max(worst, _guarded(run))
    return worst


def cmd_formula(path: str, as_json: bool = False) -> int:
    def run() -> int:
        germ = load_germ(path)
        if not germ.discriminant:
            raise ParseError(f"{path}: formula needs a non-empty 'discriminant' array")
        _emit(_assemble(germ.discriminant).as_dict(), as_json, render_formula)
        return EXIT_OK
    return _guarded(run)


def verify_fixture(fx) -> str | None:
    """Mismatch description, or None when the fixture reproduces its row."""
    try:
        got = analyse(fx.datum).record
        canbundle.coefficient(got)
    except LagfibError as exc:
        return f"{type(exc).__name__}: {exc}"
    if got != fx.expected:
        return f"classified as {got.name} {got.multiplicities} degree {got.degree}"
    return None


def cmd_catalog(
    verify: bool = False,
    shaded: bool = False,
    extended: bool = False,
    as_json: bool = False,
    write: str | None = None,
) -> int:
    fixtures = catalog_all() + (extended_catalog() if extended else [])
    if shaded:
        fixtures = [f for f in fixtures if f.expected.shaded]
    rows = []
    failures = []
    for fx in fixtures:
        rec = fx.expected
        row = {
            **record_dict(rec),
            "formula": rec.formula(),
            "a_P": str(canbundle.table_coefficient(rec)[1]),
            "provenance": fx.provenance,
        }
        if verify:
            problem = verify_fixture(fx)
            row["verified"] = problem is None
            if problem:
                failures.append(f"{fx.name}: {problem}")
        rows.append(row)
    if as_json:
        doc = {"fixtures": rows}
        if verify:
            doc["verified"] = len(rows) - len(failures)
            doc["total"] = len(rows)
        print(json.dumps(doc, indent=2))
    else:
        width = max(len(r["name"]) for r in rows)
        for r in rows:
            mark = "" if "verified" not in r else ("  ok" if r["verified"] else "  MISMATCH")
            print(
                f"{r['name']:<{width}}  {r['formula']:<62}  {r['kodaira_fibre']:<6}  "
                f"deg {r['degree']}  section {_yes_no(r['local_section']):<3}  a_P {r['a_P']}{mark}"
            )
        if verify:
            print(f"{len(rows) - len(failures)}/{len(rows)} verified")
    if write:
        for path in write_fixture_files(write):
            print(f"wrote {path}", file=sys.stderr)
    if failures:
        for line in failures:
            print(f"error: {line}", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lagfib",
        description="Classify codimension-one degenerations of abelian fibrations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify the germ described in one or more TOML files")
    p.add_argument("paths", nargs="+")
    p.add_argument("--formula", action="store_true", help="append the canonical bundle formula")
    p.add_argument("--json", action="store_true", help="machine-readable output")

    p = sub.add_parser("formula", help="assemble the canonical bundle formula of a discriminant")
    p.add_argument("path")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("catalog", help="list the fixture catalogue")
    p.add_argument("--verify", action="store_true", help="re-run the classifier on every fixture")
    p.add_argument("--shaded", action="store_true", help="only rows without a local section")
    p.add_argument("--extended", action="store_true", help="include extra parameter values")
    p.add_argument("--json", action="store_true")
    p.add_argument("--write", metavar="DIR", nargs="?", const=str(FIXTURE_DIR),
                   help="write fixture files (default: the packaged fixture directory)")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "classify":
        return cmd_classify(args.paths, args.formula, args.json)
    if args.command == "formula":
        return cmd_formula(args.path, args.json)
    return cmd_catalog(args.verify, args.shaded, args.extended, args.json, args.write)


if __name__ == "__main__":
    sys.exit(main())
