"""Cycle dual graphs and the dihedral actions on them.

Vertices of an m-cycle are Z/mZ and edge j joins vertices j and j + 1.  Every
automorphism is ``i -> sign * i + shift``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Sequence

from .errors import AmbiguousAction, InvalidAxis, NotAutomorphism, TrivialRotation

VERTEX_VERTEX = "vertex-vertex"
EDGE_EDGE = "edge-edge"
VERTEX_EDGE = "vertex-edge"
AXES = (VERTEX_VERTEX, EDGE_EDGE, VERTEX_EDGE)


@dataclass(frozen=True)
class CycleGraph:
    length: int

    def __post_init__(self) -> None:
        if self.length < 1:
            raise ValueError("cycle length must be at least 1")

    @property
    def degenerate(self) -> bool:
        """Length 1 is a loop and length 2 a double edge."""
        return self.length <= 2


@dataclass(frozen=True)
class GraphAction:
    m: int
    sign: int
    shift: int

    def __post_init__(self) -> None:
        if self.m < 1 or self.sign not in (1, -1):
            raise ValueError("invalid dihedral element")
        object.__setattr__(self, "shift", self.shift % self.m)

    @classmethod
    def rotation(cls, m: int, k: int) -> "GraphAction":
        return cls(m, 1, k)

    @classmethod
    def reflection(cls, m: int, axis: str) -> "GraphAction":
        """The reflection through the standard axis of the given kind."""
        _check_axis(m, axis)
        return cls(m, -1, 1 if axis == EDGE_EDGE else 0)

    @property
    def kind(self) -> str:
        return "rotation" if self.sign == 1 else "reflection"

    @property
    def order(self) -> int:
        if self.sign == -1:
            return 2
        return self.m // gcd(self.m, self.shift)

    @property
    def axis(self) -> str | None:
        if self.sign == 1:
            return None
        if self.m % 2:
            return VERTEX_EDGE
        return VERTEX_VERTEX if self.shift % 2 == 0 else EDGE_EDGE

    def __call__(self, i: int) -> int:
        return (self.sign * i + self.shift) % self.m

    def compose(self, other: "GraphAction") -> "GraphAction":
        """self after other."""
        if self.m != other.m:
            raise ValueError("cycle lengths differ")
        return GraphAction(self.m, self.sign * other.sign, self.sign * other.shift + self.shift)

    def power(self, k: int) -> "GraphAction":
        out = GraphAction(self.m, 1, 0)
        for _ in range(k):
            out = self.compose(out)
        return out

    def fixed_vertices(self) -> list[int]:
        return [i for i in range(self.m) if self(i) == i]

    def fixed_edges(self) -> list[int]:
        # edge j = {j, j+1} maps to {s*j + k, s*j + s + k}
        if self.sign == 1:
            return list(range(self.m)) if self.shift == 0 else []
        return [j for j in range(self.m) if (2 * j + 1 - self.shift) % self.m == 0]

    def vertex_orbits(self) -> list[list[int]]:
        seen: set[int] = set()
        orbits = []
        for i in range(self.m):
            if i in seen:
                continue
            orbit, j = [], i
            while j not in orbit:
                orbit.append(j)
                j = self(j)
            seen.update(orbit)
            orbits.append(orbit)
        return orbits

    def __str__(self) -> str:
        if self.sign == 1:
            return f"rotation({self.shift})"
        return f"reflection({self.axis})"


def _check_axis(m: int, axis: str) -> None:
    if axis not in AXES:
        raise InvalidAxis(f"unknown axis {axis!r}")
    if (axis == VERTEX_EDGE) != (m % 2 == 1):
        raise InvalidAxis(f"axis {axis} is impossible on a cycle of length {m}")


def classify_action(
    m: int, images: Sequence[int], orientation_reversing: bool | None = None
) -> GraphAction:
    """Identify a vertex permutation of the m-cycle as a rotation or reflection.

    For m <= 2 the vertex permutation does not determine the automorphism, so
    ``orientation_reversing`` must be supplied.
    """
    if len(images) != m or sorted(x % m for x in images) != list(range(m)):
        raise NotAutomorphism("images must be a permutation of Z/mZ")
    images = [x % m for x in images]
    if m <= 2:
        if orientation_reversing is None:
            raise AmbiguousAction("cycles of length <= 2 need an explicit orientation")
        sign = -1 if orientation_reversing else 1
        return GraphAction(m, sign, images[0])
    step = (images[1] - images[0]) % m
    if step == 1:
        sign = 1
    elif step == m - 1:
        sign = -1
    else:
        raise NotAutomorphism("adjacency of vertices 0 and 1 is not preserved")
    action = GraphAction(m, sign, images[0])
    if any(action(i) != images[i] for i in range(m)):
        raise NotAutomorphism("map does not preserve adjacency")
    if orientation_reversing is not None and orientation_reversing != (sign == -1):
        raise NotAutomorphism("orientation flag contradicts the permutation")
    return action


def quotient_rotation(m: int, k: int) -> CycleGraph:
    """Quotient of the m-cycle by the rotation i -> i + k, by orbit counting."""
    if k % m == 0:
        raise TrivialRotation("rotation by a multiple of m acts trivially")
    return CycleGraph(len(GraphAction.rotation(m, k).vertex_orbits()))


def reflection_fixed_data(m: int, axis: str) -> tuple[int, int]:
    """(number of fixed vertices, number of fixed edges)."""
    action = GraphAction.reflection(m, axis)
    return len(action.fixed_vertices()), len(action.fixed_edges())
