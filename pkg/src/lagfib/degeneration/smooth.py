"""Classification when the base-changed family is smooth (no torus part)."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from math import lcm

from ..errors import (
    ExcludedConfiguration,
    InadmissibleGerm,
    InconsistentDatum,
)
from ..intmat import Matrix, as_matrix, fixed_space_dim, identity, is_symplectic, matpow
from ..kodaira import FibreGraph
from .gates import canonical_multiplicity_relation, exclusion_check, torsion_exclusion
from .perm import Perm, closure, compose, cycles_perm, inverse, orbits
from .records import FibreTypeRecord, LocusRow, lookup_locus, match_record, table_record
from .resolution import QuotientSingularity, SliceResolution, marked_curve, resolve_slice

ALLOWED_ORDERS = (1, 2, 3, 4, 6)


@dataclass(frozen=True)
class SmoothCaseDatum:
    """Input for the smooth branch.

    ``fixed_locus`` lists (multisection degree, singularity) pairs describing
    the singular locus of the quotient by the kernel subgroup.  The optional
    ``h1_generator`` is the generator's action on H^1 of the general fibre and
    is checked against the invariant-dimension bound.
    """

    n: int
    order_H: int
    order_Hbar: int
    order_Hbar_prime: int
    fixed_locus: tuple[tuple[int, QuotientSingularity], ...] = ()
    base_multiplicity: int = 1
    h1_generator: Matrix | None = None

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "fixed_locus", tuple((int(d), s) for d, s in self.fixed_locus)
        )
        if self.h1_generator is not None:
            object.__setattr__(self, "h1_generator", as_matrix(self.h1_generator))


@dataclass(frozen=True)
class Classification:
    """A classified germ together with how the answer was reached."""

    record: FibreTypeRecord
    branch: str
    group_order: int
    locus_label: str | None = None
    slice: SliceResolution | None = None
    notes: tuple[str, ...] = field(default=())

    @property
    def global_multiplicity(self) -> int:
        return self.record.global_multiplicity


# ---------------------------------------------------------------------------
# Complex-multiplication model of the elliptic factor.  Torsion points of
# C / Z[zeta] are pairs (a, b) mod n standing for (a + b zeta) / n.


def _times_i(p, n):
    a, b = p
    return (-b % n, a % n)


def _times_omega(p, n):
    a, b = p
    return (-b % n, (a - b) % n)


def _times_zeta6(p, n):
    a, b = p
    return ((a - b) % n, a % n)


def _negate(p, n):
    return (-p[0] % n, -p[1] % n)


_GENERATOR = {4: _times_i, 6: _times_zeta6}
_KERNEL = {2: _negate, 3: _times_omega}


def cm_permutation(order: int, kernel_order: int) -> Perm:
    """Action of a generator of the cyclic group of order ``order`` on the
    fixed points of its subgroup of order ``kernel_order``.

    The elliptic factor has complex multiplication by Z[i] (order 4) or by
    Z[omega] (order 6); the fixed points of the subgroup are the
    ``kernel_order``-torsion points it fixes.
    """
    if order not in _GENERATOR or kernel_order not in _KERNEL or order % kernel_order:
        raise InconsistentDatum(
            f"no free quotient for orders ({order}, {kernel_order})"
        )
    n = kernel_order
    h = _KERNEL[kernel_order]
    g = _GENERATOR[order]
    pts = [(a, b) for a in range(n) for b in range(n) if h((a, b), n) == (a, b)]
    index = {p: i for i, p in enumerate(pts)}
    return tuple(index[g(p, n)] for p in pts)


# ---------------------------------------------------------------------------


def _expand(fixed_locus) -> tuple[list[QuotientSingularity], Perm]:
    """Marked points over the cover and the multisection permutation."""
    sings: list[QuotientSingularity] = []
    cycles = []
    for d, s in fixed_locus:
        start = len(sings)
        sings += [s] * d
        cycles.append(list(range(start, start + d)))
    return sings, cycles_perm(len(sings), cycles)


def _riemann_hurwitz(order: int, fixed_locus) -> None:
    for d, s in fixed_locus:
        if d < 1:
            raise InconsistentDatum("multisection degree must be positive")
        if order % s.r:
            raise InconsistentDatum(f"stabiliser order {s.r} does not divide {order}")
    total = sum(d * (1 - Fraction(1, s.r)) for d, s in fixed_locus)
    if total != 2:
        raise InconsistentDatum(
            f"branch data sum to {total}, but an elliptic curve over P^1 needs 2"
        )


def _merge_orbits(
    terminal: FibreGraph, point_orbits: list[list[int]], factor: int
) -> list[int]:
    """Multiplicities of the components of the divisor after identifying
    components exchanged by the group."""
    orbit_of = {p: i for i, orb in enumerate(point_orbits) for p in orb}
    seen: dict[tuple, int] = {}
    mults: list[int] = []
    for c in terminal.components:
        tag = c.origin
        key = ("marker", orbit_of[tag[1]], tag[2]) if tag and tag[0] == "marker" else tag
        if key not in seen:
            seen[key] = len(mults)
            mults.append(c.multiplicity * factor)
    return mults


def _compatible_actions(g: Perm, sigma: Perm, sings) -> list[Perm]:
    """Conjugates of ``g`` commuting with ``sigma`` and preserving singularity types."""
    n = len(g)
    found = []
    for beta in permutations(range(n)):
        cand = compose(inverse(beta), compose(g, beta))
        if compose(cand, sigma) != compose(sigma, cand):
            continue
        if any(sings[i] != sings[cand[i]] for i in range(n)):
            continue
        if cand not in found:
            found.append(cand)
    return found


def _check_gates(d: SmoothCaseDatum) -> None:
    if d.n < 1:
        raise InconsistentDatum("base dimension must be positive")
    if d.order_Hbar not in ALLOWED_ORDERS:
        raise InconsistentDatum(
            f"order {d.order_Hbar} is impossible: a one-dimensional non-trivial "
            "character of finite order on a lattice needs order 1, 2, 3, 4 or 6"
        )
    if d.order_H < 1 or d.order_H % d.order_Hbar:
        raise InconsistentDatum("faithful quotient order must divide the group order")
    if d.order_Hbar_prime < 1 or d.order_Hbar % d.order_Hbar_prime:
        raise InconsistentDatum("kernel order must divide the faithful quotient order")
    if d.h1_generator is not None:
        mat = d.h1_generator
        if len(mat) != 2 * d.n or not is_symplectic(mat):
            raise InconsistentDatum("generator must be a symplectic 2n x 2n matrix")
        if matpow(mat, d.order_Hbar) != identity(2 * d.n) or any(
            matpow(mat, k) == identity(2 * d.n)
            for k in range(1, d.order_Hbar)
            if d.order_Hbar % k == 0
        ):
            raise InconsistentDatum("generator order differs from the faithful quotient order")
        if fixed_space_dim(mat) < 2 * d.n - 2:
            raise InadmissibleGerm("invariant part of H^{0,1} is smaller than n - 1")


def _multiplicity_gate(l: int, tag: str | None) -> None:
    if l == 1:
        return
    if tag is not None and not torsion_exclusion(tag, l):
        raise ExcludedConfiguration(
            f"multiplicity {l} contradicts the torsion order of the reduced canonical class"
        )
    if canonical_multiplicity_relation(l):
        raise InadmissibleGerm(f"K ~ {l - 1} F_red is not trivial")


def _finish(
    fibre, mults, degree, row: LocusRow, d: SmoothCaseDatum, sl, notes
) -> Classification:
    rec = match_record(fibre, mults, degree)
    if rec is None or rec.row != table_record(row.row).row:
        raise InconsistentDatum(
            f"computed fibre {fibre} with multiplicities {sorted(mults)} and degree "
            f"{degree} does not match the expected row {row.row}"
        )
    return Classification(rec, "smooth", d.order_Hbar, row.label, sl, tuple(notes))


def analyse_smooth(d: SmoothCaseDatum) -> Classification:
    _check_gates(d)
    big, small = d.order_Hbar, d.order_Hbar_prime

    if small == 1:
        if d.fixed_locus:
            raise InconsistentDatum("a free action has no fixed locus")
        _multiplicity_gate(d.base_multiplicity, None)
        name = "I_0" if big == 1 else f"I_0-{big}"
        notes = ("free action: translation of order %d" % big,) if big > 1 else ()
        return Classification(table_record(name), "smooth", big, None, None, notes)

    if not d.fixed_locus:
        raise InconsistentDatum("a non-free action must have a fixed locus")
    _riemann_hurwitz(small, d.fixed_locus)
    row = lookup_locus(big, small, d.fixed_locus)
    if row is None:
        raise InconsistentDatum("orders and singular locus match no known configuration")
    sings, sigma = _expand(d.fixed_locus)
    npts = len(sings)
    k = big // small

    if k == 1:
        gens = [sigma]
        degree = len(closure(gens, npts))
        sl = resolve_slice(marked_curve(big, sings))
        tag = sl.fibre.family if sl.fibre.family in ("II", "III", "IV") else None
        _multiplicity_gate(d.base_multiplicity, tag)
        mults = _merge_orbits(sl.terminal, orbits(gens, npts), 1)
        if row.degree != degree:
            raise InconsistentDatum(f"degree {degree} differs from tabulated {row.degree}")
        return _finish(sl.fibre, mults, degree, row, d, sl, [])

    # kernel is proper: a free quotient of order k follows
    if any(s.r != small for s in sings):
        raise InconsistentDatum("every stabiliser must be the whole kernel")
    g = cm_permutation(big, small)
    if len(g) != npts:
        raise InconsistentDatum(
            f"the kernel fixes {len(g)} points of the elliptic factor, not {npts}"
        )
    expected_order = lcm(*(dd for dd, _ in d.fixed_locus)) * k
    actions = _compatible_actions(g, sigma, sings)
    if not actions or not exclusion_check(expected_order, npts):
        raise ExcludedConfiguration(
            f"no abelian group of order {expected_order} acts on P^1 preserving "
            f"{npts} points compatibly with the multisection structure ({row.label})"
        )
    if row.excluded:
        raise InconsistentDatum(f"configuration {row.label} should have been excluded")
    sl = resolve_slice(marked_curve(small, sings))
    tag = "IV-3" if sl.fibre.family == "IV" else (
        sl.fibre.family if sl.fibre.family in ("II", "III") else None
    )
    _multiplicity_gate(d.base_multiplicity, tag)
    outcomes = set()
    for act in actions:
        gens = [sigma, act]
        mults = _merge_orbits(sl.terminal, orbits(gens, npts), k)
        outcomes.add((tuple(sorted(mults)), len(closure(gens, npts))))
    if len(outcomes) != 1:
        raise InconsistentDatum("the free quotient is not determined by the datum")
    gens = [sigma, actions[0]]
    mults = _merge_orbits(sl.terminal, orbits(gens, npts), k)
    degree = len(closure(gens, npts))
    notes = [f"free quotient of order {k} permutes marked points as {actions[0]}"]
    return _finish(sl.fibre, mults, degree, row, d, sl, notes)


def classify_smooth(d: SmoothCaseDatum) -> FibreTypeRecord:
    return analyse_smooth(d).record
