"""Classification engine for degenerations of abelian fibrations in codimension one."""

from __future__ import annotations

from dataclasses import replace

from .first_order import FirstOrderDatum, analyse_first_order, classify_first_order
from .gates import (
    canonical_multiplicity_relation,
    exclusion_check,
    torsion_candidates,
    torsion_exclusion,
)
from .records import (
    ROW_LABELS,
    SHADED_ROWS,
    FibreTypeRecord,
    lookup_locus,
    match_record,
    table_record,
)
from .resolution import (
    MarkedQuotient,
    Marker,
    QuotientSingularity,
    blow_down_step,
    hj_expansion,
    marked_curve,
    resolve_and_minimalize,
    resolve_cyclic,
    resolve_markers,
    resolve_slice,
)
from .smooth import Classification, SmoothCaseDatum, analyse_smooth, classify_smooth

GermDatum = SmoothCaseDatum | FirstOrderDatum


def analyse(datum: GermDatum) -> Classification:
    if isinstance(datum, SmoothCaseDatum):
        result = analyse_smooth(datum)
    elif isinstance(datum, FirstOrderDatum):
        result = analyse_first_order(datum)
    else:
        raise TypeError(f"not a germ datum: {type(datum).__name__}")
    if datum.n == 1:
        result = replace(result, notes=result.notes + ("surface slice (n = 1)",))
    return result


def classify(datum: GermDatum) -> FibreTypeRecord:
    return analyse(datum).record


__all__ = [
    "Classification", "FibreTypeRecord", "FirstOrderDatum", "GermDatum",
    "MarkedQuotient", "Marker", "QuotientSingularity", "ROW_LABELS", "SHADED_ROWS",
    "SmoothCaseDatum", "analyse", "analyse_first_order", "analyse_smooth",
    "blow_down_step", "canonical_multiplicity_relation", "classify",
    "classify_first_order", "classify_smooth", "exclusion_check", "hj_expansion",
    "lookup_locus", "marked_curve", "match_record", "resolve_and_minimalize",
    "resolve_cyclic", "resolve_markers", "resolve_slice", "table_record",
    "torsion_candidates", "torsion_exclusion",
]
