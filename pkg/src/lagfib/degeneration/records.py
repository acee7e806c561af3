"""Catalogue of fibre types and the singular-locus relations feeding the classifier."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from math import gcd

from ..dualgraph import EDGE_EDGE, VERTEX_VERTEX
from ..kodaira import KodairaType
from .resolution import QuotientSingularity as QS

# Rows without a local section: every component has multiplicity >= 2.
SHADED_ROWS = frozenset(
    {"I_0-l", "I*_0-1", "I*_0-5", "I*_0-3", "I*_m-2", "I*_m-3", "IV-2", "IV*-2"}
)

ROW_LABELS = (
    "I_0-l", "I*_0-0", "I*_0-2", "I*_0-4", "I*_0-1", "I*_0-5", "I*_0-3",
    "I*_m-0", "I*_m-1", "I*_m-2", "I*_m-3", "II", "II*", "III-0", "III-1",
    "III*-0", "III*-1", "IV-0", "IV-1", "IV-2", "IV*-0", "IV*-1", "IV*-2",
)

# label -> (multiplicities in printed order, fibre, degree)
_FIXED_ROWS: dict[str, tuple[tuple[int, ...], str, int]] = {
    "I*_0-0": ((2, 1, 1, 1, 1), "I*_0", 1),
    "I*_0-2": ((2, 1, 1), "I*_0", 2),
    "I*_0-4": ((2, 1), "I*_0", 4),
    "I*_0-1": ((4, 2, 2, 2), "I*_0", 2),
    "I*_0-5": ((4, 2, 2), "I*_0", 4),
    "I*_0-3": ((6, 3, 3), "I*_0", 3),
    "II": ((1,), "II", 1),
    "II*": ((6, 3, 4, 2, 5, 4, 3, 2, 1), "II*", 1),
    "III-0": ((1, 1), "III", 1),
    "III-1": ((1,), "III", 2),
    "III*-0": ((4, 3, 3, 2, 2, 1, 1, 2), "III*", 1),
    "III*-1": ((4, 3, 2, 1, 2), "III*", 2),
    "IV-0": ((1, 1, 1), "IV", 1),
    "IV-1": ((1,), "IV", 3),
    "IV-2": ((2, 2), "IV", 2),
    "IV*-0": ((3, 2, 2, 2, 1, 1, 1), "IV*", 1),
    "IV*-1": ((3, 2, 1), "IV*", 3),
    "IV*-2": ((6, 4, 4, 2, 2), "IV*", 2),
}


@dataclass(frozen=True)
class FibreTypeRecord:
    """One classified fibre type.

    ``name`` is the instantiated label (``I*_2-3``, ``I_0-4``), ``row`` the
    catalogue row it instantiates (``I*_m-3``, ``I_0-l``).
    """

    name: str
    row: str
    components: tuple[tuple[str, int], ...]
    kodaira_fibre: KodairaType
    degree: int
    local_section: bool
    axis: str | None = field(default=None)

    @property
    def multiplicities(self) -> tuple[int, ...]:
        return tuple(m for _, m in self.components)

    @property
    def global_multiplicity(self) -> int:
        return reduce(gcd, self.multiplicities)

    @property
    def shaded(self) -> bool:
        return not self.local_section

    def formula(self) -> str:
        """Components written as a divisor, e.g. ``4E_0 + 2E_1 + 2E_2``."""
        return " + ".join(f"{m if m > 1 else ''}{lab}" for lab, m in self.components)


def _labels(indices) -> tuple[str, ...]:
    return tuple(f"E_{i}" for i in indices)


def _make(name, row, mults, labels, fibre, degree, axis=None) -> FibreTypeRecord:
    local = any(m == 1 for m in mults)
    if local == (row in SHADED_ROWS):
        raise AssertionError(f"shading of {row} disagrees with its multiplicities")
    if isinstance(fibre, str):
        fibre = KodairaType.parse(fibre)
    return FibreTypeRecord(name, row, tuple(zip(labels, mults)), fibre, degree, local, axis)


def table_record(name: str) -> FibreTypeRecord:
    """Catalogue record for an instantiated label.

    Accepts the 23 row labels with parameters filled in (``I_0-3``,
    ``I*_2-1``), ``I_m`` for m >= 1 and ``I_0`` for a smooth fibre.
    """
    name = name.strip()
    if name in _FIXED_ROWS:
        mults, fibre, degree = _FIXED_ROWS[name]
        return _make(name, name, mults, _labels(range(len(mults))), fibre, degree)
    if name == "I_0":
        return FibreTypeRecord(name, "I_0", (("E_0", 1),), KodairaType("I", 0), 1, True)
    match = re.fullmatch(r"I_0-(\d+)", name)
    if match:
        l = int(match.group(1))
        if l not in (2, 3, 4, 6):
            raise KeyError(f"multiple smooth fibre needs l in 2,3,4,6: {name}")
        return _make(name, "I_0-l", (l,), ("E_0",), "I_0", l)
    match = re.fullmatch(r"I_(\d+)", name)
    if match and int(match.group(1)) >= 1:
        m = int(match.group(1))
        return FibreTypeRecord(
            name, "I_m", tuple((f"E_{i}", 1) for i in range(m)), KodairaType("I", m), 1, True
        )
    match = re.fullmatch(r"I\*_(\d+)-([0-3])", name)
    if match and int(match.group(1)) >= 1:
        m, kind = int(match.group(1)), int(match.group(2))
        row = f"I*_m-{kind}"
        if kind == 0:
            mults = (2,) * (m + 1) + (1,) * 4
            return _make(name, row, mults, _labels(range(m + 5)), f"I*_{m}", 1)
        if kind == 1:
            mults = (2,) * (m + 1) + (1,) * 2
            return _make(name, row, mults, _labels(range(m + 3)), f"I*_{m}", 2)
        if kind == 2:
            # vertex-vertex free reflection of the 2m-cycle leaves m + 1 orbits
            return _make(name, row, (2,) * (m + 1), _labels(range(m + 1)), f"I_{2 * m}", 4,
                         VERTEX_VERTEX)
        return _make(name, row, (2,) * m, _labels(range(1, m + 1)), f"I_{2 * m}", 4, EDGE_EDGE)
    raise KeyError(f"no catalogue row for {name!r}")


def candidate_names(fibre: KodairaType, multiplicities) -> list[str]:
    """Instantiated labels whose fibre column equals ``fibre``."""
    fam, m = fibre.family, fibre.index
    if fam == "I" and m == 0:
        l = reduce(gcd, multiplicities) if multiplicities else 1
        return ["I_0"] if l == 1 else [f"I_0-{l}"]
    if fam == "I":
        out = [f"I_{m}"]
        if m % 2 == 0:
            out += [f"I*_{m // 2}-2", f"I*_{m // 2}-3"]
        return out
    if fam == "I*" and m == 0:
        return [r for r in _FIXED_ROWS if r.startswith("I*_0")]
    if fam == "I*":
        return [f"I*_{m}-0", f"I*_{m}-1"]
    return [r for r, v in _FIXED_ROWS.items() if v[1] == fam]


def match_record(
    fibre: KodairaType, multiplicities, degree: int, axis: str | None = None
) -> FibreTypeRecord | None:
    """Catalogue row with the given fibre, multiplicity multiset and degree."""
    want = sorted(multiplicities)
    for name in candidate_names(fibre, multiplicities):
        try:
            rec = table_record(name)
        except KeyError:
            continue
        if sorted(rec.multiplicities) != want or rec.degree != degree:
            continue
        if rec.axis is not None and axis is not None and rec.axis != axis:
            continue
        return rec
    return None


# ---------------------------------------------------------------------------
# Singular-locus relations.  Each entry: (order of H, [order of H'],
# ((multisection degree, singularity), ...)) -> (label, catalogue row, degree).

A1 = QS(2, 1)


def _key(entries) -> tuple:
    return tuple(sorted((d, s.r, s.a) for d, s in entries))


@dataclass(frozen=True)
class LocusRow:
    label: str
    order: int
    order_kernel: int
    entries: tuple[tuple[int, QS], ...]
    row: str | None  # catalogue row, None for excluded configurations
    degree: int | None = None

    @property
    def key(self) -> tuple:
        return (self.order, self.order_kernel, _key(self.entries))

    @property
    def excluded(self) -> bool:
        return self.row is None


# group order equals kernel order: the group acts on the base curve with fixed points
FULL_KERNEL_ROWS = (
    LocusRow("I*_0-0", 2, 2, ((1, A1),) * 4, "I*_0-0", 1),
    LocusRow("I*_0-2", 2, 2, ((2, A1),) * 2, "I*_0-2", 2),
    LocusRow("I*_0-4", 2, 2, ((4, A1),), "I*_0-4", 4),
    LocusRow("II", 6, 6, ((1, QS(6, 1)), (1, QS(3, 1)), (1, A1)), "II", 1),
    LocusRow("II*", 6, 6, ((1, QS(6, 5)), (1, QS(3, 2)), (1, A1)), "II*", 1),
    LocusRow("III-1", 4, 4, ((1, QS(4, 1)),) * 2 + ((1, A1),), "III-0", 1),
    LocusRow("III-2", 4, 4, ((2, QS(4, 1)), (1, A1)), "III-1", 2),
    LocusRow("III*-1", 4, 4, ((1, QS(4, 3)),) * 2 + ((1, A1),), "III*-0", 1),
    LocusRow("III*-2", 4, 4, ((2, QS(4, 3)), (1, A1)), "III*-1", 2),
    LocusRow("IV-1", 3, 3, ((1, QS(3, 1)),) * 3, "IV-0", 1),
    LocusRow("IV-2", 3, 3, ((3, QS(3, 1)),), "IV-1", 3),
    LocusRow("IV*-1", 3, 3, ((1, QS(3, 2)),) * 3, "IV*-0", 1),
    LocusRow("IV*-2", 3, 3, ((3, QS(3, 2)),), "IV*-1", 3),
)

# proper kernel: a further free quotient of order (order / order_kernel)
PROPER_KERNEL_ROWS = (
    LocusRow("I*_0-1", 4, 2, ((1, A1),) * 4, "I*_0-1"),
    LocusRow("I*_0-5", 4, 2, ((2, A1),) * 2, "I*_0-5"),
    LocusRow("I*_0-3", 6, 2, ((1, A1),) * 4, "I*_0-3"),
    LocusRow("I*_0-7", 4, 2, ((4, A1),), None),
    LocusRow("I*_0-8", 6, 2, ((2, A1),) * 2, None),
    LocusRow("I*_0-9", 6, 2, ((4, A1),), None),
    LocusRow("IV-3", 6, 3, ((1, QS(3, 1)),) * 3, "IV-2"),
    LocusRow("IV-4", 6, 3, ((3, QS(3, 1)),), None),
    LocusRow("IV*-3", 6, 3, ((1, QS(3, 2)),) * 3, "IV*-2"),
    LocusRow("IV*-4", 6, 3, ((3, QS(3, 2)),), None),
)

_LOCUS_INDEX = {row.key: row for row in FULL_KERNEL_ROWS + PROPER_KERNEL_ROWS}


def lookup_locus(order: int, order_kernel: int, entries) -> LocusRow | None:
    return _LOCUS_INDEX.get((order, order_kernel, _key(entries)))


# ---------------------------------------------------------------------------
# Canonical bundle coefficients, keyed by (fibre family, global multiplicity).
# I_0 rows follow 1 - 1/l and are handled separately.

STORED_COEFFICIENTS: dict[tuple[str, int], tuple[str, Fraction]] = {
    ("I", 1): ("I_m", Fraction(0)),
    ("I*", 1): ("I*_0-1,2,3", Fraction(1, 2)),
    ("I*", 2): ("I*_0-4,5", Fraction(3, 4)),
    ("I*", 3): ("I*_0-6", Fraction(5, 6)),
    ("I", 2): ("I*_m-1,2,3,4", Fraction(1, 2)),
    ("II", 1): ("II", Fraction(1, 6)),
    ("II*", 1): ("II*", Fraction(5, 6)),
    ("III", 1): ("III-1,2", Fraction(1, 4)),
    ("III*", 1): ("III*-1,2", Fraction(3, 4)),
    ("IV", 1): ("IV-1,2", Fraction(1, 3)),
    ("IV*", 1): ("IV*-1,2", Fraction(2, 3)),
    ("IV", 2): ("IV-3", Fraction(2, 3)),
    ("IV*", 2): ("IV*-3", Fraction(5, 6)),
}


def stored_coefficient(fibre: KodairaType, l: int) -> tuple[str, Fraction] | None:
    if fibre.family == "I" and fibre.index == 0:
        return ("I_0-l", 1 - Fraction(1, l))
    if fibre.family == "mI":
        return ("I_0-l", 1 - Fraction(1, fibre.index * l))
    if fibre.family == "I*" and fibre.index and l == 1:
        return ("I*_m-1,2,3,4", Fraction(1, 2))
    return STORED_COEFFICIENTS.get((fibre.family, l))
