"""Classification of quotients of first-order degenerations (cycles of P^1-bundles)."""

from __future__ import annotations

from dataclasses import dataclass

from ..dualgraph import VERTEX_VERTEX, GraphAction, quotient_rotation
from ..errors import InadmissibleGerm, InconsistentDatum, OddReflection
from ..kodaira import RATIONAL, Component, FibreGraph, KodairaType, Point
from ..mhs import ActionOnModel, CycleNCModel, h01, invariant_h01_dim
from .gates import canonical_multiplicity_relation
from .perm import closure, cycles_perm, orbits
from .records import FibreTypeRecord, match_record, table_record
from .resolution import Marker, MarkedQuotient, QuotientSingularity, resolve_slice
from .smooth import Classification, _merge_orbits

A1 = QuotientSingularity(2, 1)


@dataclass(frozen=True)
class FirstOrderDatum:
    """Input for the first-order branch.

    ``action`` is the faithful action on the dual cycle of length ``m``.
    ``fixed_locus_degree`` says whether the fixed points of a reflection
    form sections (1) or a 2-section (2) over each preserved component.
    """

    n: int
    m: int
    action: GraphAction
    has_fixed_points: bool
    model: CycleNCModel
    fixed_locus_degree: int = 1
    base_multiplicity: int = 1
    h1_action: ActionOnModel | None = None


def _validate(d: FirstOrderDatum) -> None:
    if d.n < 1 or d.m < 1:
        raise InconsistentDatum("need n >= 1 and m >= 1")
    if d.action.m != d.m or d.model.m != d.m:
        raise InconsistentDatum("cycle lengths of action, model and datum disagree")
    if d.model.abelian_dim != d.n - 1:
        raise InconsistentDatum("abelian base must have dimension n - 1")
    if h01(d.model) != d.n - 1:
        raise InadmissibleGerm(
            f"h^(0,1) = {h01(d.model)} but a first-order degeneration needs {d.n - 1}"
        )
    if d.h1_action is not None and invariant_h01_dim(d.model, d.h1_action) < d.n - 1:
        raise InadmissibleGerm("invariant part of H^(0,1) is smaller than n - 1")
    if canonical_multiplicity_relation(d.base_multiplicity):
        raise InadmissibleGerm(
            f"K ~ {d.base_multiplicity - 1} F_red is not trivial, so the fibre is not reduced"
        )
    if d.action.kind == "rotation" and d.has_fixed_points:
        raise InconsistentDatum("a rotation of the cycle acts freely")
    if d.fixed_locus_degree not in (1, 2):
        raise InconsistentDatum("fixed locus must consist of sections or 2-sections")


def _reflection_quotient(q: int, degree: int) -> MarkedQuotient:
    """Chain of q + 1 doubled components; two A1 points on each end."""
    ids = [f"B{i}" for i in range(q + 1)]
    comps = tuple(Component(c, 2, 0, RATIONAL, ("base", c)) for c in ids)
    pts = tuple(Point.transversal(a, b) for a, b in zip(ids, ids[1:]))
    markers = (
        Marker(ids[0], A1, 0), Marker(ids[0], A1, 1),
        Marker(ids[-1], A1, 2), Marker(ids[-1], A1, 3),
    )
    return MarkedQuotient(FibreGraph(comps, pts), markers)


def _record(fibre: KodairaType, mults, degree: int, axis=None) -> FibreTypeRecord:
    rec = match_record(fibre, mults, degree, axis)
    if rec is None:
        raise InconsistentDatum(
            f"no catalogue row has fibre {fibre}, multiplicities {sorted(mults)}, degree {degree}"
        )
    return rec


def analyse_first_order(d: FirstOrderDatum) -> Classification:
    _validate(d)
    act = d.action
    if act.kind == "rotation":
        length = d.m if act.shift == 0 else quotient_rotation(d.m, act.shift).length
        rec = table_record(f"I_{length}")
        return Classification(rec, "rotation", act.order, None, None,
                              (f"rotation of order {act.order} acts freely",))
    if d.m % 2:
        raise OddReflection(
            f"a reflection of a cycle of odd length {d.m} cannot occur: "
            "the number of components must be even"
        )
    q = d.m // 2
    if d.has_fixed_points:
        if act.axis != VERTEX_VERTEX:
            raise InconsistentDatum("a reflection with fixed points preserves two components")
        sl = resolve_slice(_reflection_quotient(q, d.fixed_locus_degree))
        if d.fixed_locus_degree == 1:
            sigma = tuple(range(4))
        else:
            sigma = cycles_perm(4, [[0, 1], [2, 3]])
        mults = _merge_orbits(sl.terminal, orbits([sigma], 4), 1)
        degree = len(closure([sigma], 4))
        rec = _record(sl.fibre, mults, degree)
        return Classification(rec, "reflection", act.order, None, sl,
                              ("reflection with fixed points",))
    # free reflection: components are orbits of the cycle, all doubled; the
    # abelian base picks up a degree-two cover and a free quotient of order two
    mults = [2] * len(act.vertex_orbits())
    degree = 2 * act.order
    rec = _record(KodairaType("I", d.m), mults, degree, act.axis)
    return Classification(rec, "reflection", act.order, None, None,
                          (f"free reflection through a {act.axis} axis",))


def classify_first_order(d: FirstOrderDatum) -> FibreTypeRecord:
    return analyse_first_order(d).record
