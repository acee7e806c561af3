"""Cyclic quotient singularities, their minimal resolutions, and blow-downs."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

from ..errors import InconsistentDatum, NothingToContract, UnrecognizedFibre
from ..kodaira import RATIONAL, Component, FibreGraph, KodairaType, Point, recognize


@dataclass(frozen=True, order=True)
class QuotientSingularity:
    """The germ C^2 / mu_r with weights (1, a)."""

    r: int
    a: int

    def __post_init__(self) -> None:
        if self.r < 2 or not 1 <= self.a < self.r or gcd(self.a, self.r) != 1:
            raise ValueError(f"invalid cyclic quotient (1/{self.r})(1,{self.a})")

    @property
    def du_val(self) -> bool:
        return self.a == self.r - 1

    def __str__(self) -> str:
        return f"(1/{self.r})(1,{self.a})"

    @classmethod
    def parse(cls, text: str) -> "QuotientSingularity":
        s = text.replace(" ", "")
        if s.upper().startswith("A") and s[1:].lstrip("_").isdigit():
            n = int(s[1:].lstrip("_"))
            return cls(n + 1, n)
        try:
            head, tail = s.split(")(")
            r = int(head.strip("(").split("/")[1])
            one, a = tail.strip(")").split(",")
        except (ValueError, IndexError):
            raise ValueError(f"cannot parse quotient singularity {text!r}") from None
        if int(one) != 1:
            raise ValueError("weights must be normalised to (1, a)")
        return cls(r, int(a))


def hj_expansion(r: int, a: int) -> list[int]:
    """Hirzebruch-Jung continued fraction r/a = b1 - 1/(b2 - 1/(...))."""
    out = []
    num, den = r, a
    while den:
        b = -(-num // den)  # ceiling
        out.append(b)
        num, den = den, b * den - num
    return out


def resolve_cyclic(s: QuotientSingularity) -> list[int]:
    """Self-intersections of the exceptional chain of the minimal resolution."""
    return [-b for b in hj_expansion(s.r, s.a)]


def chain_multiplicities(base_multiplicity: int, chain: Sequence[int]) -> list[int]:
    """Multiplicities along a chain hanging off a curve of the given multiplicity.

    Solves m_{i-1} + E_i^2 m_i + m_{i+1} = 0 with m_0 the base multiplicity and
    m_{k+1} = 0, which is F.E_i = 0 on every chain curve.
    """
    # run the recurrence backwards from (m_k, m_{k+1}) = (1, 0)
    vals = [Fraction(0), Fraction(1)]
    for e in reversed(chain):
        vals.append(-e * vals[-1] - vals[-2])
    scale = Fraction(base_multiplicity) / vals[-1]
    mults = [v * scale for v in reversed(vals[1:-1])]
    if any(m.denominator != 1 or m <= 0 for m in mults):
        raise InconsistentDatum(
            f"no integral multiplicities on chain {list(chain)} "
            f"over multiplicity {base_multiplicity}"
        )
    return [int(m) for m in mults]


@dataclass(frozen=True)
class Marker:
    """A quotient singularity sitting on a base component, indexed by its point."""

    component: str
    sing: QuotientSingularity
    point: int


@dataclass(frozen=True)
class MarkedQuotient:
    """Reduced quotient fibre before resolution.

    ``base`` holds the curves through the singular points with their
    multiplicities; their self-intersections are ignored and recomputed from
    F.C = 0 once the resolution chains are in place.
    """

    base: FibreGraph
    markers: tuple[Marker, ...]


def resolve_markers(q: MarkedQuotient) -> FibreGraph:
    """Insert the Hirzebruch-Jung chain of every marker and fix self-intersections."""
    comps = {c.id: c for c in q.base.components}
    points = list(q.base.points)
    new_comps: list[Component] = []
    chain_contrib: dict[str, int] = {cid: 0 for cid in comps}
    for mk in q.markers:
        if mk.component not in comps:
            raise InconsistentDatum(f"marker on unknown component {mk.component}")
        chain = resolve_cyclic(mk.sing)
        mults = chain_multiplicities(comps[mk.component].multiplicity, chain)
        ids = [f"{mk.component}.p{mk.point}.{i}" for i in range(len(chain))]
        for i, (cid, e, m) in enumerate(zip(ids, chain, mults)):
            new_comps.append(Component(cid, m, e, RATIONAL, ("marker", mk.point, i)))
        points.append(Point.transversal(mk.component, ids[0]))
        points += [Point.transversal(a, b) for a, b in zip(ids, ids[1:])]
        chain_contrib[mk.component] += mults[0]
    partial = FibreGraph(tuple(comps.values()) + tuple(new_comps), tuple(points))
    fixed = []
    for cid, c in comps.items():
        rest = sum(
            d.multiplicity * partial.intersection(d.id, cid)
            for d in partial.components
            if d.id != cid
        )
        if rest % c.multiplicity:
            raise InconsistentDatum(f"non-integral self-intersection on {cid}")
        origin = c.origin if c.origin is not None else ("base", cid)
        fixed.append(Component(cid, c.multiplicity, -rest // c.multiplicity, c.kind, origin))
    return FibreGraph(tuple(fixed) + tuple(new_comps), tuple(points))


def contractible(g: FibreGraph) -> list[str]:
    """Smooth rational curves of self-intersection -1."""
    out = []
    for c in g.components:
        if c.kind != RATIONAL or c.self_intersection != -1 or len(g.components) == 1:
            continue
        if any(p.branch_count(c.id) > 1 or p.delta_of(c.id) for p in g.points):
            continue
        out.append(c.id)
    return out


def contract(g: FibreGraph, eid: str) -> FibreGraph:
    """Blow down the (-1)-curve ``eid``.

    Every curve A meeting it with A.E = e gets A^2 + e^2, all points on the
    curve merge into one, and the new point carries local intersection
    numbers (A.B)_E + e_A e_B and delta invariants increased by e(e - 1)/2.
    """
    on_e = [p for p in g.points if p.branch_count(eid)]
    off_e = [p for p in g.points if not p.branch_count(eid)]
    meet = {c.id: g.intersection(c.id, eid) for c in g.components if c.id != eid}
    comps = tuple(
        Component(c.id, c.multiplicity, c.self_intersection + meet[c.id] ** 2, c.kind, c.origin)
        for c in g.components
        if c.id != eid
    )
    branches: dict[str, int] = {}
    delta: dict[str, int] = {}
    local: dict[tuple[str, str], int] = {}
    for p in on_e:
        for cid, n in p.branches:
            if cid != eid:
                branches[cid] = branches.get(cid, 0) + n
        for cid, d in p.delta:
            if cid != eid:
                delta[cid] = delta.get(cid, 0) + d
        for (a, b), v in p.local:
            if eid not in (a, b):
                local[(a, b)] = local.get((a, b), 0) + v
    ids = sorted(branches)
    for cid in ids:
        e = meet[cid]
        delta[cid] = delta.get(cid, 0) + e * (e - 1) // 2
    for i, a in enumerate(ids):
        for b in ids[i + 1:]:
            local[(a, b)] = local.get((a, b), 0) + meet[a] * meet[b]
    merged = Point.make(branches, delta, local)
    keep = merged.total_branches >= 2 or merged.delta
    return FibreGraph(comps, tuple(off_e) + ((merged,) if keep else ()))


def blow_down_step(g: FibreGraph) -> FibreGraph:
    candidates = contractible(g)
    if not candidates:
        raise NothingToContract("no smooth rational (-1)-curve in the fibre")
    return contract(g, candidates[0])


def minimalize(g: FibreGraph) -> tuple[FibreGraph, int]:
    """Contract (-1)-curves until none is left; returns the graph and the count."""
    steps = 0
    while contractible(g):
        g = blow_down_step(g)
        steps += 1
    return g, steps


def resolve_and_minimalize(q: MarkedQuotient | FibreGraph) -> FibreGraph:
    """Resolve all markers, contract to a relatively minimal fibre and check it is Kodaira."""
    resolved = resolve_markers(q) if isinstance(q, MarkedQuotient) else q
    terminal, _ = minimalize(resolved)
    if recognize(terminal) is None:
        raise UnrecognizedFibre("terminal graph is not a Kodaira fibre")
    return terminal


@dataclass(frozen=True)
class SliceResolution:
    resolved: FibreGraph
    terminal: FibreGraph
    fibre: KodairaType
    multiplicity: int
    contractions: int


def resolve_slice(q: MarkedQuotient) -> SliceResolution:
    resolved = resolve_markers(q)
    terminal, steps = minimalize(resolved)
    found = recognize(terminal)
    if found is None:
        raise UnrecognizedFibre("terminal graph is not a Kodaira fibre")
    return SliceResolution(resolved, terminal, found[0], found[1], steps)


def marked_curve(multiplicity: int, sings: Sequence[QuotientSingularity]) -> MarkedQuotient:
    """A single rational curve of given multiplicity carrying the listed singular points."""
    base = FibreGraph((Component("C", multiplicity, 0, RATIONAL, ("base", "C")),))
    return MarkedQuotient(base, tuple(Marker("C", s, i) for i, s in enumerate(sings)))
