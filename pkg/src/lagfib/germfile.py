"""Reading and writing germ descriptions as TOML documents.

A file carries ``schema``, ``base_dim`` and exactly one payload table:
``monodromy`` (a row-major integer matrix), ``smooth_case`` or
``first_order``.  An optional ``discriminant`` array lists typed components
for the canonical bundle formula.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

import tomli_w

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from .canbundle import BRANCHES, DiscriminantComponent
from .degeneration import FirstOrderDatum, SmoothCaseDatum, table_record
from .degeneration.resolution import QuotientSingularity
from .dualgraph import AXES, GraphAction, classify_action
from .errors import LagfibError, ParseError
from .intmat import identity
from .mhs import ActionOnModel, CycleNCModel

SCHEMA_VERSION = 1
PAYLOADS = ("monodromy", "smooth_case", "first_order")


@dataclass
class GermFile:
    base_dim: int
    monodromy: tuple[tuple[int, ...], ...] | None = None
    smooth_case: SmoothCaseDatum | None = None
    first_order: FirstOrderDatum | None = None
    discriminant: list[DiscriminantComponent] = field(default_factory=list)
    name: str | None = None
    provenance: str | None = None
    schema: int = SCHEMA_VERSION

    @property
    def datum(self) -> SmoothCaseDatum | FirstOrderDatum | None:
        return self.smooth_case or self.first_order


# ---------------------------------------------------------------------------
# field helpers


def _get(table: dict, key: str, kind, where: str, default: Any = ...):
    if key not in table:
        if default is ...:
            raise ParseError(f"{where}: missing field '{key}'")
        return default
    value = table[key]
    if kind is int and isinstance(value, bool):
        raise ParseError(f"{where}.{key}: expected integer, got boolean")
    if not isinstance(value, kind):
        raise ParseError(f"{where}.{key}: expected {kind.__name__}, got {type(value).__name__}")
    return value


def _matrix(value: Any, where: str, size: int | None = None) -> tuple[tuple[int, ...], ...]:
    if not isinstance(value, list) or not all(isinstance(r, list) for r in value):
        raise ParseError(f"{where}: expected a list of integer rows")
    rows = []
    for i, row in enumerate(value):
        if not all(isinstance(x, int) and not isinstance(x, bool) for x in row):
            raise ParseError(f"{where}[{i}]: entries must be integers")
        rows.append(tuple(row))
    if not rows or any(len(r) != len(rows) for r in rows):
        raise ParseError(f"{where}: matrix must be square and non-empty")
    if size is not None and len(rows) != size:
        raise ParseError(f"{where}: expected a {size}x{size} matrix")
    return tuple(rows)


def _singularity(text: Any, where: str) -> QuotientSingularity:
    if not isinstance(text, str):
        raise ParseError(f"{where}: expected a string like \"(1/3)(1,2)\"")
    try:
        return QuotientSingularity.parse(text)
    except ValueError as exc:
        raise ParseError(f"{where}: {exc}") from None


def _parse_smooth(t: dict, n: int) -> SmoothCaseDatum:
    where = "smooth_case"
    locus = []
    for i, entry in enumerate(_get(t, "fixed_locus", list, where, [])):
        w = f"{where}.fixed_locus[{i}]"
        if not isinstance(entry, dict):
            raise ParseError(f"{w}: expected a table")
        locus.append((_get(entry, "degree", int, w), _singularity(entry.get("singularity"), w)))
    gen = t.get("h1_generator")
    order_hbar = _get(t, "order_Hbar", int, where)
    return SmoothCaseDatum(
        n=n,
        order_H=_get(t, "order_H", int, where, order_hbar),
        order_Hbar=order_hbar,
        order_Hbar_prime=_get(t, "order_Hbar_prime", int, where),
        fixed_locus=tuple(locus),
        base_multiplicity=_get(t, "base_multiplicity", int, where, 1),
        h1_generator=None if gen is None else _matrix(gen, f"{where}.h1_generator", 2 * n),
    )


def _parse_action(t: Any, m: int) -> GraphAction:
    where = "first_order.action"
    if not isinstance(t, dict):
        raise ParseError(f"{where}: expected a table")
    try:
        if "images" in t:
            images = _get(t, "images", list, where)
            reversing = t.get("orientation_reversing")
            return classify_action(m, images, reversing)
        kind = _get(t, "kind", str, where)
        if kind == "rotation":
            return GraphAction.rotation(m, _get(t, "shift", int, where))
        if kind == "reflection":
            axis = _get(t, "axis", str, where)
            if axis not in AXES:
                raise ParseError(f"{where}.axis: one of {', '.join(AXES)}")
            return GraphAction.reflection(m, axis)
    except LagfibError as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(f"{where}: {exc}") from None
    raise ParseError(f"{where}.kind: expected 'rotation' or 'reflection'")


def _parse_first_order(t: dict, n: int) -> FirstOrderDatum:
    where = "first_order"
    m = _get(t, "m", int, where)
    if m < 1:
        raise ParseError(f"{where}.m: must be positive")
    action = _parse_action(t.get("action"), m)
    a = n - 1
    mt = _get(t, "model", dict, where, {})
    translation = _get(mt, "translation", bool, f"{where}.model", "gluing" not in mt)
    if "gluing" in mt:
        gluing = _matrix(mt["gluing"], f"{where}.model.gluing", 2 * a) if a else ()
    else:
        gluing = identity(2 * a) if a else ()
    try:
        model = CycleNCModel(m, a, gluing, translation)
    except LagfibError as exc:
        raise ParseError(f"{where}.model: {exc}") from None
    h1 = None
    if "h1_action" in t:
        ht = _get(t, "h1_action", dict, where)
        try:
            h1 = ActionOnModel(
                _get(ht, "order", int, f"{where}.h1_action"),
                _matrix(ht["matrix"], f"{where}.h1_action.matrix", 2 * a) if a else (),
                action,
            )
        except LagfibError as exc:
            if isinstance(exc, ParseError):
                raise
            raise ParseError(f"{where}.h1_action: {exc}") from None
    return FirstOrderDatum(
        n=n,
        m=m,
        action=action,
        has_fixed_points=_get(t, "has_fixed_points", bool, where, False),
        model=model,
        fixed_locus_degree=_get(t, "fixed_locus_degree", int, where, 1),
        base_multiplicity=_get(t, "base_multiplicity", int, where, 1),
        h1_action=h1,
    )


def _parse_discriminant(items: Any) -> list[DiscriminantComponent]:
    if not isinstance(items, list) or not items:
        raise ParseError("discriminant: expected a non-empty array of tables")
    out = []
    for i, entry in enumerate(items):
        where = f"discriminant[{i}]"
        if not isinstance(entry, dict):
            raise ParseError(f"{where}: expected a table")
        name = _get(entry, "type", str, where)
        try:
            rec = table_record(name)
        except KeyError as exc:
            raise ParseError(f"{where}.type: {exc.args[0]}") from None
        branch = _get(entry, "branch", str, where, None)
        if branch is not None and branch not in BRANCHES:
            raise ParseError(f"{where}.branch: one of {', '.join(BRANCHES)}")
        order = _get(entry, "group_order", int, where, None)
        cid = _get(entry, "id", str, where, f"P_{i + 1}")
        out.append(DiscriminantComponent(cid, rec, branch, order))
    return out


def parse_germ(doc: dict) -> GermFile:
    schema = _get(doc, "schema", int, "file", SCHEMA_VERSION)
    if schema != SCHEMA_VERSION:
        raise ParseError(f"file.schema: unsupported version {schema}")
    n = _get(doc, "base_dim", int, "file")
    if n < 1:
        raise ParseError("file.base_dim: must be positive")
    present = [p for p in PAYLOADS if p in doc]
    if len(present) > 1:
        raise ParseError(f"file: exactly one germ payload allowed, found {', '.join(present)}")
    germ = GermFile(base_dim=n, name=doc.get("name"), provenance=doc.get("provenance"))
    if "monodromy" in doc:
        germ.monodromy = _matrix(doc["monodromy"], "monodromy")
        if len(germ.monodromy) != 2 * n:
            raise ParseError(f"monodromy: expected a {2 * n}x{2 * n} matrix for base_dim {n}")
    elif "smooth_case" in doc:
        germ.smooth_case = _parse_smooth(_get(doc, "smooth_case", dict, "file"), n)
    elif "first_order" in doc:
        germ.first_order = _parse_first_order(_get(doc, "first_order", dict, "file"), n)
    if "discriminant" in doc:
        germ.discriminant = _parse_discriminant(doc["discriminant"])
    if not present and not germ.discriminant:
        raise ParseError("file: no germ payload and no discriminant list")
    return germ


def load_germ(path: str | Path) -> GermFile:
    try:
        with open(path, "rb") as fh:
            doc = tomllib.load(fh)
    except OSError as exc:
        raise ParseError(f"{path}: {exc.strerror}") from None
    except tomllib.TOMLDecodeError as exc:
        raise ParseError(f"{path}: {exc}") from None
    return parse_germ(doc)


# ---------------------------------------------------------------------------
# writing


def _action_doc(action: GraphAction) -> dict:
    if action.kind == "rotation":
        return {"kind": "rotation", "shift": action.shift}
    return {"kind": "reflection", "axis": action.axis}


def datum_document(datum, name: str | None = None, provenance: str | None = None) -> dict:
    doc: dict[str, Any] = {"schema": SCHEMA_VERSION}
    if name:
        doc["name"] = name
    if provenance:
        doc["provenance"] = provenance
    doc["base_dim"] = datum.n
    if isinstance(datum, SmoothCaseDatum):
        t: dict[str, Any] = {
            "order_H": datum.order_H,
            "order_Hbar": datum.order_Hbar,
            "order_Hbar_prime": datum.order_Hbar_prime,
            "fixed_locus": [{"degree": d, "singularity": str(s)} for d, s in datum.fixed_locus],
        }
        if datum.base_multiplicity != 1:
            t["base_multiplicity"] = datum.base_multiplicity
        if datum.h1_generator is not None:
            t["h1_generator"] = [list(r) for r in datum.h1_generator]
        doc["smooth_case"] = t
    else:
        t = {
            "m": datum.m,
            "has_fixed_points": datum.has_fixed_points,
            "fixed_locus_degree": datum.fixed_locus_degree,
            "action": _action_doc(datum.action),
            "model": {
                "translation": datum.model.translation_flag,
                "gluing": [list(r) for r in datum.model.gluing],
            },
        }
        if datum.h1_action is not None:
            t["h1_action"] = {
                "order": datum.h1_action.order,
                "matrix": [list(r) for r in datum.h1_action.matrix],
            }
        doc["first_order"] = t
    return doc


def dumps(doc: dict) -> str:
    return tomli_w.dumps(doc)
