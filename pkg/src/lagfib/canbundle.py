"""Canonical bundle formula: coefficients a_P and the Cartier multiple of L^ss."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

from .degeneration.records import (
    FULL_KERNEL_ROWS,
    PROPER_KERNEL_ROWS,
    FibreTypeRecord,
    stored_coefficient,
)
from .errors import CoefficientMismatch, DuplicateComponent, EmptyDiscriminant, OrderOutOfRange
from .kodaira import fibre_graph, lct

SMOOTH, ROTATION, REFLECTION = "smooth", "rotation", "reflection"
BRANCHES = (SMOOTH, ROTATION, REFLECTION)
SMOOTH_ORDERS = (1, 2, 3, 4, 6)


def computed_coefficient(rec: FibreTypeRecord) -> Fraction:
    """1 - lct of the fibre graph carrying the record's global multiplicity."""
    weighted = fibre_graph(rec.kodaira_fibre).scaled(rec.global_multiplicity)
    return 1 - lct(weighted)


def table_coefficient(rec: FibreTypeRecord) -> tuple[str, Fraction]:
    found = stored_coefficient(rec.kodaira_fibre, rec.global_multiplicity)
    if found is None:
        raise CoefficientMismatch(f"no tabulated coefficient for {rec.name}")
    return found


def coefficient(rec: FibreTypeRecord) -> Fraction:
    computed = computed_coefficient(rec)
    label, stored = table_coefficient(rec)
    if computed != stored:
        raise CoefficientMismatch(
            f"{rec.name}: lct gives {computed}, table column {label} gives {stored}"
        )
    return computed


def _first_order_row(rec: FibreTypeRecord) -> str | None:
    if rec.row == "I_m":
        return ROTATION
    if rec.row.startswith("I*_m"):
        return REFLECTION
    return None


def default_provenance(rec: FibreTypeRecord) -> tuple[str, int]:
    """Branch and group order that produce this record in the classifier."""
    branch = _first_order_row(rec)
    if branch == ROTATION:
        return branch, 1
    if branch == REFLECTION:
        return branch, 2
    if rec.row == "I_0":
        return SMOOTH, 1
    if rec.row == "I_0-l":
        return SMOOTH, rec.degree
    for row in FULL_KERNEL_ROWS + PROPER_KERNEL_ROWS:
        if row.row == rec.row:
            return SMOOTH, row.order
    raise ValueError(f"unknown provenance for {rec.name}")


def character_order(rec: FibreTypeRecord, branch: str, group_order: int) -> int:
    """Order of the character through which the local group acts on the
    relevant one-dimensional piece of cohomology."""
    if branch not in BRANCHES:
        raise ValueError(f"unknown branch {branch!r}")
    expected = _first_order_row(rec)
    if (branch == SMOOTH) != (expected is None):
        raise ValueError(f"branch {branch} cannot produce {rec.name}")
    if branch == SMOOTH:
        if group_order not in SMOOTH_ORDERS:
            raise OrderOutOfRange(f"order {group_order} is not one of 1, 2, 3, 4, 6")
        return group_order
    return 1 if branch == ROTATION else 2


@dataclass(frozen=True)
class DiscriminantComponent:
    id: str
    record: FibreTypeRecord
    branch: str | None = None
    group_order: int | None = None

    def provenance(self) -> tuple[str, int]:
        if self.branch is None:
            return default_provenance(self.record)
        return self.branch, self.group_order if self.group_order is not None else 1


@dataclass(frozen=True)
class CanonicalBundleReport:
    components: tuple[tuple[str, Fraction], ...]
    labels: tuple[tuple[str, str, str], ...]  # (id, instantiated name, table column)
    character_orders: tuple[int, ...]
    cartier_multiple: int

    @property
    def character_order(self) -> int:
        return self.cartier_multiple

    def formula(self) -> str:
        terms = " + ".join(f"{_render(a)} f*{cid}" for cid, a in self.components)
        return f"K_X ~ f*(K_S + L^ss) + {terms}"

    def as_dict(self) -> dict:
        return {
            "formula": self.formula(),
            "components": [
                {"id": cid, "type": name, "table_column": col, "a_P": str(a),
                 "character_order": order}
                for (cid, a), (_, name, col), order in zip(
                    self.components, self.labels, self.character_orders
                )
            ],
            "cartier_multiple": self.cartier_multiple,
        }


def _render(a: Fraction) -> str:
    return str(a.numerator) if a.denominator == 1 else f"({a})"


def assemble(components: Sequence[DiscriminantComponent]) -> CanonicalBundleReport:
    if not components:
        raise EmptyDiscriminant("the discriminant has no components")
    ids = [c.id for c in components]
    dupes = sorted({i for i in ids if ids.count(i) > 1})
    if dupes:
        raise DuplicateComponent(f"repeated component ids: {', '.join(dupes)}")
    coeffs, labels, orders = [], [], []
    for comp in components:
        coeffs.append((comp.id, coefficient(comp.record)))
        labels.append((comp.id, comp.record.name, table_coefficient(comp.record)[0]))
        orders.append(character_order(comp.record, *comp.provenance()))
    return CanonicalBundleReport(tuple(coeffs), tuple(labels), tuple(orders), lcm(*orders))
