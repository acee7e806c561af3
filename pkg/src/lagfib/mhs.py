"""Hodge-dimension counts for cycles of P^1-bundles over an abelian variety.

The weight-one part of H^1 of such a cycle is the kernel of (gluing - I) on
H^1 of the abelian base, where the gluing is the map induced by one full
circuit around the cycle.  The weight-zero part is H^1 of the dual graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .dualgraph import GraphAction
from .errors import IncompatibleAction, InvalidModel, NotQuasiUnipotent, OddWeightOneDimension
from .intmat import (
    Matrix,
    fixed_space_dim,
    identity,
    is_symplectic,
    matmul,
    matpow,
    matsub,
    quasi_unipotent_index,
    rank,
)


def _square(rows: Sequence[Sequence[int]], size: int, what: str) -> Matrix:
    out = tuple(tuple(int(x) for x in row) for row in rows)
    if len(out) != size or any(len(r) != size for r in out):
        raise InvalidModel(f"{what} must be {size}x{size}")
    return out


def _finite_order(g: Matrix) -> bool:
    try:
        k = quasi_unipotent_index(g)
    except NotQuasiUnipotent:
        return False
    return matpow(g, k) == identity(len(g))


@dataclass(frozen=True)
class CycleNCModel:
    m: int
    abelian_dim: int
    gluing: Matrix
    translation_flag: bool = False

    def __post_init__(self) -> None:
        if self.m < 1 or self.abelian_dim < 0:
            raise InvalidModel("need m >= 1 and a >= 0")
        size = 2 * self.abelian_dim
        g = _square(self.gluing, size, "gluing")
        object.__setattr__(self, "gluing", g)
        if size and not is_symplectic(g):
            raise InvalidModel("gluing does not preserve the polarization form")
        if size and not _finite_order(g):
            raise InvalidModel(
                "gluing must have finite order, as an automorphism of a polarized abelian variety"
            )
        if self.translation_flag and size and g != identity(size):
            raise InvalidModel("a translation acts trivially on cohomology")

    @classmethod
    def translation(cls, m: int, abelian_dim: int) -> "CycleNCModel":
        return cls(m, abelian_dim, identity(2 * abelian_dim) if abelian_dim else (), True)

    @property
    def weight_zero_dim(self) -> int:
        """H^1 of the dual cycle graph."""
        return 1


@dataclass(frozen=True)
class ActionOnModel:
    order: int
    matrix: Matrix
    graph_action: GraphAction | None = None

    def __post_init__(self) -> None:
        if self.order < 1:
            raise InvalidModel("group order must be positive")
        mat = tuple(tuple(int(x) for x in row) for row in self.matrix)
        object.__setattr__(self, "matrix", mat)
        if mat and matpow(mat, self.order) != identity(len(mat)):
            raise InvalidModel("matrix order does not divide the group order")

    @property
    def weight_zero_sign(self) -> int:
        """Action on the one-dimensional weight-zero piece: +1 or -1."""
        if self.graph_action is None or self.graph_action.sign == 1:
            return 1
        return -1


def gr1_dim(model: CycleNCModel) -> int:
    if not model.abelian_dim:
        return 0
    return fixed_space_dim(model.gluing)


def h01(model: CycleNCModel) -> int:
    dim = gr1_dim(model)
    if dim % 2:
        raise OddWeightOneDimension(f"weight-one piece has odd dimension {dim}")
    return dim // 2


def satisfies_condition4(model: CycleNCModel) -> bool:
    """h^{0,1} equals the number of components of the abelian base."""
    return h01(model) == model.abelian_dim


def invariant_h01_dim(model: CycleNCModel, act: ActionOnModel) -> int:
    """Dimension of the group-invariant part of H^{0,1}."""
    size = 2 * model.abelian_dim
    if not size:
        return 0
    mat = _square(act.matrix, size, "action matrix")
    if matmul(mat, model.gluing) != matmul(model.gluing, mat):
        raise IncompatibleAction("action does not commute with the gluing")
    ident = identity(size)
    stacked = matsub(model.gluing, ident) + matsub(mat, ident)
    dim = size - rank(stacked)
    if dim % 2:
        raise OddWeightOneDimension(f"invariant weight-one piece has odd dimension {dim}")
    return dim // 2
