"""Numerical obstructions used to rule out candidate configurations."""

from __future__ import annotations

from dataclasses import dataclass


def _orbit_sums(special: tuple[int, ...], generic: int, target: int) -> bool:
    """Can ``target`` be written as a sub-sum of ``special`` plus copies of ``generic``?"""
    sums = {0}
    for s in special:
        sums |= {x + s for x in sums}
    return any((target - s) >= 0 and (target - s) % generic == 0 for s in sums)


def exclusion_check(group_order: int, marked_points: int) -> bool:
    """Whether an abelian group of this order can act faithfully on P^1
    preserving a set of ``marked_points`` points.

    The finite abelian subgroups of PGL(2, C) are the cyclic groups, with two
    fixed points and all other orbits of full size, and the Klein four-group,
    with three orbits of size two and all other orbits of size four.
    """
    if group_order < 1:
        raise ValueError("group order must be positive")
    if marked_points < 0:
        raise ValueError("number of points must be non-negative")
    if _orbit_sums((1, 1), group_order, marked_points):
        return True
    return group_order == 4 and _orbit_sums((2, 2, 2), 4, marked_points)


def canonical_multiplicity_relation(l: int) -> int:
    """Coefficient c in K ~ c * F_red for a fibre of multiplicity l."""
    if l < 1:
        raise ValueError("multiplicity must be positive")
    return l - 1


@dataclass(frozen=True)
class TorsionProfile:
    """Data behind the torsion argument for one non-crepant configuration.

    ``excess`` is the integer e with K ~ e * F_red after resolving, so an
    admissible multiplicity must divide e + 1.  ``known_order`` is the order
    of the canonical class of the reduced fibre, and ``factor`` the extra
    multiplicity picked up by a further free quotient.
    """

    excess: int
    known_order: int
    factor: int = 1


TORSION_PROFILES = {
    "II": TorsionProfile(4, 1),
    "III": TorsionProfile(2, 1),
    "IV": TorsionProfile(1, 1),
    "IV-3": TorsionProfile(1, 2, 2),
}


def torsion_candidates(type_tag: str) -> list[int]:
    prof = _profile(type_tag)
    n = prof.excess + 1
    return [d for d in range(1, n + 1) if n % d == 0]


def _profile(type_tag: str) -> TorsionProfile:
    try:
        return TORSION_PROFILES[type_tag]
    except KeyError:
        raise ValueError(f"no torsion argument for type {type_tag!r}") from None


def torsion_exclusion(type_tag: str, l: int) -> bool:
    """True when multiplicity ``l`` survives the torsion argument.

    A multiplicity is a candidate when it divides excess + 1.  The reduced
    fibre's canonical class must then have order factor * l, which has to
    agree with its known order.
    """
    prof = _profile(type_tag)
    if l not in torsion_candidates(type_tag):
        return False
    return prof.factor * l == prof.known_order


