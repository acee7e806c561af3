"""Singular fibres of Lagrangian fibrations in codimension one.

Exact monodromy arithmetic, Kodaira fibre graphs, the two-branch
classification engine and the canonical bundle coefficients.
"""

from .canbundle import DiscriminantComponent, assemble, character_order, coefficient
from .degeneration import FirstOrderDatum, SmoothCaseDatum, analyse, classify
from .examples import catalog_all, example_I0star5, example_Imstar3
from .kodaira import KodairaType, fibre_graph

__version__ = "0.1.0"

__all__ = [
    "DiscriminantComponent", "FirstOrderDatum", "KodairaType", "SmoothCaseDatum",
    "analyse", "assemble", "catalog_all", "character_order", "classify",
    "coefficient", "example_I0star5", "example_Imstar3", "fibre_graph",
]
