"""Small permutation-group helpers; permutations are tuples of images."""

from __future__ import annotations

from typing import Iterable, Sequence

Perm = tuple[int, ...]


def identity_perm(n: int) -> Perm:
    return tuple(range(n))


def compose(p: Perm, q: Perm) -> Perm:
    """p after q."""
    return tuple(p[i] for i in q)


def inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def cycles_perm(n: int, cycles: Iterable[Sequence[int]]) -> Perm:
    out = list(range(n))
    for cyc in cycles:
        for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
            out[a] = b
    return tuple(out)


def closure(gens: Sequence[Perm], n: int) -> set[Perm]:
    group = {identity_perm(n)}
    frontier = list(group)
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = compose(g, p)
                if q not in group:
                    group.add(q)
                    nxt.append(q)
        frontier = nxt
    return group


def orbits(gens: Sequence[Perm], n: int) -> list[list[int]]:
    """Orbits in order of their smallest element."""
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for i, j in enumerate(g):
            a, b = find(i), find(j)
            if a != b:
                parent[max(a, b)] = min(a, b)
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return [groups[k] for k in sorted(groups)]


def cycle_type(p: Perm) -> tuple[int, ...]:
    return tuple(sorted(len(o) for o in orbits([p], len(p))))
