"""Kodaira fibre types: monodromy recognition, fibre graphs and their invariants.

A fibre is stored as a list of components together with explicit intersection
points.  Each point records how many local branches of each component pass
through it, the delta invariant of each component there, and the local
intersection number of every pair of distinct components.  Nodes, cusps,
tangencies and triple points are therefore all first-class data.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import reduce
from itertools import combinations, product
from math import gcd
from typing import Iterable, Mapping, Sequence

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher

from .errors import NotElliptic, NotQuasiUnipotent, NotSymplectic, UnsupportedGraph
from .intmat import Matrix, as_matrix, matmul, rank

RATIONAL = "rational"
ELLIPTIC = "elliptic"


# ---------------------------------------------------------------------------
# Kodaira type tags


_FAMILIES = ("I", "I*", "II", "III", "IV", "II*", "III*", "IV*", "mI")


@dataclass(frozen=True, order=True)
class KodairaType:
    """A Kodaira fibre type.

    ``family`` is one of ``I``, ``I*``, ``II``, ``III``, ``IV``, ``II*``,
    ``III*``, ``IV*`` or ``mI``.  ``index`` is m for ``I_m`` and ``I*_m``
    and the multiplicity l for the multiple smooth fibre ``lI_0``.
    """

    family: str
    index: int = 0

    def __post_init__(self) -> None:
        if self.family not in _FAMILIES:
            raise ValueError(f"unknown Kodaira family {self.family!r}")
        if self.family in ("I", "I*") and self.index < 0:
            raise ValueError("index must be non-negative")
        if self.family == "mI" and self.index < 2:
            raise ValueError("a multiple smooth fibre needs multiplicity >= 2")
        if self.family not in ("I", "I*", "mI") and self.index:
            raise ValueError(f"{self.family} takes no index")

    def __str__(self) -> str:
        if self.family == "I":
            return f"I_{self.index}"
        if self.family == "I*":
            return f"I*_{self.index}"
        if self.family == "mI":
            return f"{self.index}I_0"
        return self.family

    @classmethod
    def parse(cls, text: str) -> "KodairaType":
        s = text.strip().replace(" ", "").replace("^", "")
        if s in ("II", "III", "IV", "II*", "III*", "IV*"):
            return cls(s)
        match = re.fullmatch(r"(\d*)I(\*?)_?\{?(\d+)\}?", s)
        if not match:
            raise ValueError(f"cannot parse Kodaira type {text!r}")
        mult, star, idx = match.groups()
        if mult:
            if star or idx != "0":
                raise ValueError(f"only I_0 can be multiple: {text!r}")
            return cls("mI", int(mult)) if int(mult) > 1 else cls("I", 0)
        return cls("I*" if star else "I", int(idx))

    @property
    def reduced(self) -> "KodairaType":
        return KodairaType("I", 0) if self.family == "mI" else self


I0 = KodairaType("I", 0)


# ---------------------------------------------------------------------------
# Monodromy


def standard_monodromy(k: KodairaType) -> Matrix:
    """Representative of the monodromy class acting on H^1 of the fibre."""
    m = k.index
    table = {
        "II": ((1, 1), (-1, 0)),
        "II*": ((0, -1), (1, 1)),
        "III": ((0, 1), (-1, 0)),
        "III*": ((0, -1), (1, 0)),
        "IV": ((0, 1), (-1, -1)),
        "IV*": ((-1, -1), (1, 0)),
    }
    if k.family == "I":
        return ((1, m), (0, 1))
    if k.family == "I*":
        return ((-1, -m), (0, -1))
    if k.family == "mI":
        return ((1, 0), (0, 1))
    return table[k.family]


def _unipotent_parameter(n: Matrix) -> int:
    """m such that N = P [[0, m], [0, 0]] P^-1, for a nilpotent 2x2 integer N."""
    (a, b), (c, d) = n
    size = reduce(gcd, (abs(a), abs(b), abs(c), abs(d)))
    if size == 0:
        return 0
    # N = m * [[-ac, a^2], [-c^2, ac]] with gcd(a, c) = 1
    sign = 1 if (b > 0 or (b == 0 and c < 0)) else -1
    return sign * size


def kodaira_from_monodromy(mat: Sequence[Sequence[int]]) -> KodairaType:
    """Kodaira type whose standard monodromy is SL(2, Z)-conjugate to ``mat``.

    Uses the trace, the sign of the unipotent parameter, and for elliptic
    elements the sign of the lower-left entry, which separates a class from
    its inverse.
    """
    m = as_matrix(mat)
    if len(m) != 2:
        raise ValueError("expected a 2x2 matrix")
    (a, b), (c, d) = m
    if a * d - b * c != 1:
        raise NotSymplectic("determinant must be 1")
    t = a + d
    if abs(t) > 2:
        raise NotQuasiUnipotent(f"trace {t} gives a hyperbolic element")
    if t in (2, -2):
        s = 1 if t == 2 else -1
        u = tuple(tuple(s * x for x in row) for row in m)
        nil = ((u[0][0] - 1, u[0][1]), (u[1][0], u[1][1] - 1))
        param = _unipotent_parameter(nil)
        if param < 0:
            raise NotElliptic(
                "negative unipotent class is not the monodromy of a Kodaira fibre"
            )
        return KodairaType("I" if t == 2 else "I*", param)
    starred = c > 0
    family = {0: "III", 1: "II", -1: "IV"}[t]
    return KodairaType(family + "*" if starred else family)


def _inverse2(p: Matrix) -> Matrix:
    (a, b), (c, d) = p
    return ((d, -b), (-c, a))


def find_conjugator(
    source: Sequence[Sequence[int]], target: Sequence[Sequence[int]], bound: int = 6
) -> Matrix | None:
    """Search P in SL(2, Z) with entries in [-bound, bound] and P S P^-1 = T."""
    s, t = as_matrix(source), as_matrix(target)
    rng = range(-bound, bound + 1)
    for a, b, c in product(rng, rng, rng):
        # solve a*d - b*c = 1 for d
        if a == 0:
            if b * c != -1:
                continue
            ds: Iterable[int] = rng
        else:
            if (1 + b * c) % a:
                continue
            d0 = (1 + b * c) // a
            if abs(d0) > bound:
                continue
            ds = (d0,)
        for d in ds:
            if a * d - b * c != 1:
                continue
            p = ((a, b), (c, d))
            if matmul(matmul(p, s), _inverse2(p)) == t:
                return p
    return None


# ---------------------------------------------------------------------------
# Fibre graphs


@dataclass(frozen=True)
class Component:
    id: str
    multiplicity: int
    self_intersection: int
    kind: str = RATIONAL
    origin: object = field(default=None, compare=False)

    @property
    def genus(self) -> int:
        """Geometric genus of the normalisation."""
        return 1 if self.kind == ELLIPTIC else 0


def _pair(a: str, b: str) -> tuple[str, str]:
    return (a, b) if a <= b else (b, a)


@dataclass(frozen=True)
class Point:
    """A point of the fibre lying on at least one component.

    ``branches`` counts local branches per component, ``delta`` is the delta
    invariant of each component at the point, and ``local`` gives local
    intersection numbers of unordered pairs of distinct components.
    """

    branches: tuple[tuple[str, int], ...]
    delta: tuple[tuple[str, int], ...] = ()
    local: tuple[tuple[tuple[str, str], int], ...] = ()

    @classmethod
    def make(
        cls,
        branches: Mapping[str, int],
        delta: Mapping[str, int] | None = None,
        local: Mapping[tuple[str, str], int] | None = None,
    ) -> "Point":
        ids = sorted(k for k, v in branches.items() if v > 0)
        loc: dict[tuple[str, str], int] = {}
        for a, b in combinations(ids, 2):
            loc[(a, b)] = branches[a] * branches[b]
        for (a, b), v in (local or {}).items():
            loc[_pair(a, b)] = v
        return cls(
            branches=tuple((k, branches[k]) for k in ids),
            delta=tuple(sorted((k, v) for k, v in (delta or {}).items() if v)),
            local=tuple(sorted(loc.items())),
        )

    @classmethod
    def transversal(cls, *ids: str) -> "Point":
        return cls.make({i: 1 for i in ids})

    @classmethod
    def node(cls, cid: str) -> "Point":
        return cls.make({cid: 2}, {cid: 1})

    @classmethod
    def cusp(cls, cid: str) -> "Point":
        return cls.make({cid: 1}, {cid: 1})

    def branch_count(self, cid: str) -> int:
        return dict(self.branches).get(cid, 0)

    def delta_of(self, cid: str) -> int:
        return dict(self.delta).get(cid, 0)

    def local_number(self, a: str, b: str) -> int:
        return dict(self.local).get(_pair(a, b), 0)

    @property
    def components(self) -> tuple[str, ...]:
        return tuple(k for k, _ in self.branches)

    @property
    def total_branches(self) -> int:
        return sum(v for _, v in self.branches)


@dataclass(frozen=True)
class Edge:
    a: str
    b: str
    tangency: int
    count: int


@dataclass(frozen=True)
class FibreGraph:
    components: tuple[Component, ...]
    points: tuple[Point, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "components", tuple(self.components))
        object.__setattr__(self, "points", tuple(self.points))
        ids = [c.id for c in self.components]
        if len(set(ids)) != len(ids):
            raise ValueError("component ids must be distinct")
        known = set(ids)
        for p in self.points:
            if not set(p.components) <= known:
                raise ValueError("point lies on an unknown component")
        if any(c.multiplicity < 1 for c in self.components):
            raise ValueError("multiplicities must be positive")

    # -- accessors -----------------------------------------------------------

    def component(self, cid: str) -> Component:
        for c in self.components:
            if c.id == cid:
                return c
        raise KeyError(cid)

    @property
    def ids(self) -> tuple[str, ...]:
        return tuple(c.id for c in self.components)

    @property
    def multiplicities(self) -> tuple[int, ...]:
        return tuple(c.multiplicity for c in self.components)

    @property
    def global_multiplicity(self) -> int:
        return reduce(gcd, self.multiplicities)

    def intersection(self, a: str, b: str) -> int:
        if a == b:
            return self.component(a).self_intersection
        return sum(p.local_number(a, b) for p in self.points)

    def intersection_matrix(self) -> Matrix:
        ids = self.ids
        return tuple(tuple(self.intersection(a, b) for b in ids) for a in ids)

    def is_connected(self) -> bool:
        g = nx.Graph()
        g.add_nodes_from(self.ids)
        for p in self.points:
            comps = p.components
            g.add_edges_from(zip(comps, comps[1:]))
        return nx.is_connected(g)

    @property
    def edges(self) -> tuple[Edge, ...]:
        """Intersections grouped as (a, b, tangency, count); a == b for nodes."""
        tally: dict[tuple[str, str, int], int] = {}
        for p in self.points:
            for cid, n in p.branches:
                if n >= 2:
                    key = (cid, cid, 1)
                    tally[key] = tally.get(key, 0) + n * (n - 1) // 2
            for (a, b), v in p.local:
                key = (a, b, v)
                tally[key] = tally.get(key, 0) + 1
        return tuple(Edge(a, b, t, n) for (a, b, t), n in sorted(tally.items()))

    @property
    def snc(self) -> bool:
        """True when every point is an ordinary double point of the fibre.

        Nodes of a single component are allowed, so the nodal rational curve
        and the cycles of rational curves count as normal crossing.
        """
        for p in self.points:
            if p.total_branches != 2:
                return False
            if len(p.components) == 1:
                if p.delta_of(p.components[0]) != 1:
                    return False
            elif any(v != 1 for _, v in p.local) or p.delta:
                return False
        return True

    # -- transformations -----------------------------------------------------

    def scaled(self, factor: int) -> "FibreGraph":
        comps = tuple(
            replace(c, multiplicity=c.multiplicity * factor) for c in self.components
        )
        return FibreGraph(comps, self.points)

    def relabelled(self, prefix: str = "E") -> "FibreGraph":
        mapping = {c.id: f"{prefix}{i}" for i, c in enumerate(self.components)}
        comps = tuple(replace(c, id=mapping[c.id]) for c in self.components)
        pts = tuple(
            Point.make(
                {mapping[k]: v for k, v in p.branches},
                {mapping[k]: v for k, v in p.delta},
                {(mapping[a], mapping[b]): v for (a, b), v in p.local},
            )
            for p in self.points
        )
        return FibreGraph(comps, pts)

    # -- invariants ----------------------------------------------------------

    def euler_number(self) -> int:
        total = sum(2 - 2 * c.genus for c in self.components)
        return total - sum(p.total_branches - 1 for p in self.points)

    def fibre_degrees(self) -> dict[str, int]:
        """F.C for every component C; zero for a genuine fibre."""
        return {
            c.id: sum(d.multiplicity * self.intersection(d.id, c.id) for d in self.components)
            for c in self.components
        }


# ---------------------------------------------------------------------------
# Standard graphs


def _chain_points(ids: Sequence[str]) -> list[Point]:
    return [Point.transversal(a, b) for a, b in zip(ids, ids[1:])]


def _tree(
    mults: Sequence[int], edges: Sequence[tuple[int, int]], self_int: int = -2
) -> FibreGraph:
    comps = [Component(f"E{i}", m, self_int) for i, m in enumerate(mults)]
    pts = [Point.transversal(f"E{a}", f"E{b}") for a, b in edges]
    return FibreGraph(tuple(comps), tuple(pts))


def fibre_graph(k: KodairaType | str) -> FibreGraph:
    """Components, multiplicities and intersection points of a Kodaira fibre."""
    if isinstance(k, str):
        k = KodairaType.parse(k)
    fam, m = k.family, k.index
    if fam == "mI":
        return FibreGraph((Component("E0", m, 0, ELLIPTIC),))
    if fam == "I":
        if m == 0:
            return FibreGraph((Component("E0", 1, 0, ELLIPTIC),))
        if m == 1:
            return FibreGraph((Component("E0", 1, 0),), (Point.node("E0"),))
        ids = [f"E{i}" for i in range(m)]
        comps = tuple(Component(i, 1, -2) for i in ids)
        pts = [Point.transversal(ids[i], ids[(i + 1) % m]) for i in range(m)]
        return FibreGraph(comps, tuple(pts))
    if fam == "I*":
        # chain E0..Em of multiplicity 2, tails E_{m+1}, E_{m+2} on E0 and
        # E_{m+3}, E_{m+4} on Em
        mults = [2] * (m + 1) + [1] * 4
        edges = [(i, i + 1) for i in range(m)]
        edges += [(0, m + 1), (0, m + 2), (m, m + 3), (m, m + 4)]
        return _tree(mults, edges)
    if fam == "II":
        return FibreGraph((Component("E0", 1, 0),), (Point.cusp("E0"),))
    if fam == "III":
        comps = (Component("E0", 1, -2), Component("E1", 1, -2))
        return FibreGraph(comps, (Point.make({"E0": 1, "E1": 1}, local={("E0", "E1"): 2}),))
    if fam == "IV":
        comps = tuple(Component(f"E{i}", 1, -2) for i in range(3))
        return FibreGraph(comps, (Point.transversal("E0", "E1", "E2"),))
    if fam == "II*":
        # E0 centre; arms E1 (length 1), E2-E3 (length 2), E4..E8 (length 5)
        mults = [6, 3, 4, 2, 5, 4, 3, 2, 1]
        edges = [(0, 1), (0, 2), (2, 3), (0, 4), (4, 5), (5, 6), (6, 7), (7, 8)]
        return _tree(mults, edges)
    if fam == "III*":
        # E0 centre; arms E1-E3-E5, E2-E4-E6, E7
        mults = [4, 3, 3, 2, 2, 1, 1, 2]
        edges = [(0, 1), (1, 3), (3, 5), (0, 2), (2, 4), (4, 6), (0, 7)]
        return _tree(mults, edges)
    if fam == "IV*":
        # E0 centre; three arms E1-E4, E2-E5, E3-E6
        mults = [3, 2, 2, 2, 1, 1, 1]
        edges = [(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6)]
        return _tree(mults, edges)
    raise AssertionError(fam)


def euler_number(k: KodairaType | str) -> int:
    return fibre_graph(k).euler_number()


# ---------------------------------------------------------------------------
# Intersection form


def _leading_minors_negative(mat: Sequence[Sequence[int]]) -> bool:
    """Sylvester's criterion for negative definiteness, exactly."""
    size = len(mat)
    for k in range(1, size + 1):
        sub = [[Fraction(mat[i][j]) for j in range(k)] for i in range(k)]
        det = _det(sub)
        if (det > 0) != (k % 2 == 0) or det == 0:
            return False
    return True


def _det(rows: list[list[Fraction]]) -> Fraction:
    rows = [r[:] for r in rows]
    size = len(rows)
    det = Fraction(1)
    for c in range(size):
        pivot = next((i for i in range(c, size) if rows[i][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            rows[c], rows[pivot] = rows[pivot], rows[c]
            det = -det
        det *= rows[c][c]
        for i in range(c + 1, size):
            f = rows[i][c] / rows[c][c]
            if f:
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[c])]
    return det


def check_fibre_form(g: FibreGraph) -> bool:
    """Intersection matrix is negative semidefinite with kernel spanned by the multiplicities.

    Verified as Q.mult = 0 together with negative definiteness after deleting
    any single component, which pins the kernel to one dimension.
    """
    q = g.intersection_matrix()
    mult = g.multiplicities
    if any(sum(x * y for x, y in zip(row, mult)) for row in q):
        return False
    if len(q) == 1:
        return True
    minor = [row[1:] for row in q[1:]]
    return _leading_minors_negative(minor) and rank(q) == len(q) - 1


# ---------------------------------------------------------------------------
# Recognition


def _incidence(g: FibreGraph) -> nx.Graph:
    h = nx.Graph()
    for c in g.components:
        h.add_node(("c", c.id), label=("c", c.multiplicity, c.self_intersection, c.kind))
    for i, p in enumerate(g.points):
        h.add_node(("p", i), label=("p", tuple(sorted(v for _, v in p.local))))
        for cid, n in p.branches:
            h.add_edge(("c", cid), ("p", i), label=(n, p.delta_of(cid)))
    return h


def isomorphic(g1: FibreGraph, g2: FibreGraph) -> bool:
    if len(g1.components) != len(g2.components) or len(g1.points) != len(g2.points):
        return False
    same = lambda x, y: x["label"] == y["label"]  # noqa: E731
    return GraphMatcher(
        _incidence(g1), _incidence(g2), node_match=same, edge_match=same
    ).is_isomorphic()


def candidate_types(euler: int) -> list[KodairaType]:
    out = []
    if euler == 0:
        out.append(I0)
    if euler >= 1:
        out.append(KodairaType("I", euler))
    if euler >= 6:
        out.append(KodairaType("I*", euler - 6))
    out += [KodairaType(f) for f, e in
            (("II", 2), ("III", 3), ("IV", 4), ("IV*", 8), ("III*", 9), ("II*", 10))
            if e == euler]
    return out


def recognize(g: FibreGraph) -> tuple[KodairaType, int] | None:
    """Kodaira type and global multiplicity of a fibre graph, if it is one."""
    l = g.global_multiplicity
    for k in candidate_types(g.euler_number()):
        if isomorphic(g, fibre_graph(k).scaled(l)):
            return k, l
    return None


# ---------------------------------------------------------------------------
# Log canonical threshold

_NON_SNC_LCT = {"II": Fraction(5, 6), "III": Fraction(3, 4), "IV": Fraction(2, 3)}


def lct(g: FibreGraph) -> Fraction:
    """Log canonical threshold of the pair (surface, fibre) at the fibre.

    Normal-crossing fibres use the stratum formula; cuspidal, tangential and
    triple-point fibres use their known thresholds divided by the common
    multiplicity.
    """
    if g.snc:
        best = min(Fraction(1, c.multiplicity) for c in g.components)
        for p in g.points:
            total = sum(g.component(cid).multiplicity * n for cid, n in p.branches)
            best = min(best, Fraction(2, total))
        return best
    l = g.global_multiplicity
    for fam, value in _NON_SNC_LCT.items():
        if isomorphic(g, fibre_graph(KodairaType(fam)).scaled(l)):
            return value / l
    raise UnsupportedGraph("non-normal-crossing fibre outside the cusp/tangency/triple-point cases")
