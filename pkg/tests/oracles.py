"""Reference computations written independently of the library code paths."""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from math import ceil

# ---------------------------------------------------------------------------
# linear algebra


def mat_mul(a, b):
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0])))
        for i in range(len(a))
    )


def mat_id(n):
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def mat_pow(a, k):
    out = mat_id(len(a))
    for _ in range(k):
        out = mat_mul(out, a)
    return out


def det(rows):
    """Determinant by fraction-free cofactor-free Gaussian elimination."""
    m = [[Fraction(x) for x in r] for r in rows]
    n = len(m)
    sign, total = 1, Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            sign = -sign
        total *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return sign * total


def rank(rows):
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return 0
    r = 0
    for c in range(len(m[0])):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c] / m[r][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        r += 1
    return r


def charpoly_at(a, x):
    n = len(a)
    return det([[x * (i == j) - a[i][j] for j in range(n)] for i in range(n)])


def is_nilpotent(a):
    return not any(any(row) for row in mat_pow(a, len(a)))


def brute_unipotent_index(u, limit=60):
    """Least k with U^k - I nilpotent, by direct search."""
    n = len(u)
    power = mat_id(n)
    for k in range(1, limit + 1):
        power = mat_mul(power, u)
        diff = tuple(tuple(power[i][j] - (i == j) for j in range(n)) for i in range(n))
        if is_nilpotent(diff):
            return k
    return None


def symplectic_form(n):
    return tuple(
        tuple(1 if j == i + n else -1 if i == j + n else 0 for j in range(2 * n))
        for i in range(2 * n)
    )


def is_symplectic(u):
    n = len(u) // 2
    j = symplectic_form(n)
    ut = tuple(zip(*u))
    return mat_mul(mat_mul(ut, j), u) == j


def negative_semidefinite_with_kernel(q, v):
    """Q v = 0, rank Q = size - 1, and Q <= 0 (checked by symmetric elimination)."""
    n = len(q)
    if any(sum(q[i][j] * v[j] for j in range(n)) for i in range(n)):
        return False
    if rank(q) != n - 1:
        return False
    m = [[Fraction(x) for x in r] for r in q]
    for c in range(n):
        if m[c][c] > 0:
            return False
        if m[c][c] == 0:
            if any(m[c][j] != 0 for j in range(c, n)):
                return False
            continue
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return True


# ---------------------------------------------------------------------------
# random symplectic matrices


def random_symplectic(n, rng: random.Random, steps=4, bound=1):
    """Product of random elementary symplectic transvections and unimodular blocks."""
    u = [list(r) for r in mat_id(2 * n)]
    u = tuple(tuple(r) for r in u)
    for _ in range(steps):
        kind = rng.randrange(3)
        g = [list(r) for r in mat_id(2 * n)]
        i, j = rng.randrange(n), rng.randrange(n)
        s = rng.choice([x for x in range(-bound, bound + 1) if x])
        if kind == 0:
            g[i][n + j] += s
            if i != j:
                g[j][n + i] += s
        elif kind == 1:
            g[n + i][j] += s
            if i != j:
                g[n + j][i] += s
        elif i != j:
            # A = I + s e_ij on x, A^{-T} on y
            g[i][j] += s
            g[n + j][n + i] -= s
        else:
            g[i][i] = g[n + i][n + i] = -1
        u = mat_mul(u, tuple(tuple(r) for r in g))
    return u


def symplectic_inverse(u):
    n = len(u) // 2
    j = symplectic_form(n)
    ut = tuple(zip(*u))
    prod = mat_mul(mat_mul(j, ut), j)
    return tuple(tuple(-x for x in r) for r in prod)


def block_sum(blocks):
    """Direct sum of 2x2 matrices in the (x_1..x_n, y_1..y_n) basis."""
    n = len(blocks)
    out = [[0] * (2 * n) for _ in range(2 * n)]
    for k, ((a, b), (c, d)) in enumerate(blocks):
        out[k][k], out[k][n + k] = a, b
        out[n + k][k], out[n + k][n + k] = c, d
    return tuple(tuple(r) for r in out)


# ---------------------------------------------------------------------------
# continued fractions


def hj_oracle(r, a):
    """Entries b_i of r/a = b_1 - 1/(b_2 - ...), by exact rational ceiling."""
    x = Fraction(r, a)
    out = []
    while True:
        b = ceil(x)
        out.append(b)
        if x == b:
            return out
        x = 1 / (b - x)


def evaluate_hj(bs):
    val = Fraction(bs[-1])
    for b in reversed(bs[:-1]):
        val = b - 1 / val
    return val


# ---------------------------------------------------------------------------
# cycle automorphisms


def cycle_automorphisms(m):
    """Every permutation of Z/m preserving adjacency on the m-cycle (m >= 3),
    found by extending images of vertex 0 and its neighbour."""
    adj = {i: {(i - 1) % m, (i + 1) % m} for i in range(m)}
    found = []
    for f0 in range(m):
        for f1 in adj[f0]:
            images = [f0, f1]
            ok = True
            for i in range(2, m):
                nxt = [v for v in adj[images[-1]] if v != images[-2]]
                if len(nxt) != 1:
                    ok = False
                    break
                images.append(nxt[0])
            if ok and len(set(images)) == m and all(
                images[(i + 1) % m] in adj[images[i]] for i in range(m)
            ):
                found.append(tuple(images))
    return found


def is_cycle_automorphism(m, images):
    return len(set(images)) == m and all(
        (images[(i + 1) % m] - images[i]) % m in (1, m - 1) for i in range(m)
    )


def fixed_vertex_count(images):
    return sum(1 for i, v in enumerate(images) if i == v)


def fixed_edge_count(m, images):
    edges = {frozenset((i, (i + 1) % m)) for i in range(m)}
    return sum(1 for e in edges if frozenset(images[v] for v in e) == e)


# ---------------------------------------------------------------------------
# abelian groups acting on the projective line
#
# Points are either "0", "inf" or pairs (radius, angle) with angle a Fraction
# mod 1, standing for radius * exp(2 pi i angle).  Maps act exactly.


def _rotate(p, t):
    if p in ("0", "inf"):
        return p
    r, th = p
    return (r, (th + t) % 1)


def _invert(p):
    if p == "0":
        return "inf"
    if p == "inf":
        return "0"
    r, th = p
    return (1 / r, (-th) % 1)


def _negate(p):
    return _rotate(p, Fraction(1, 2))


def cyclic_group(order):
    return [lambda p, k=k: _rotate(p, Fraction(k, order)) for k in range(order)]


def klein_group():
    return [lambda p: p, _negate, _invert, lambda p: _negate(_invert(p))]


def abelian_subgroups(order):
    """Finite abelian subgroups of PGL(2, C) of the given order, up to conjugacy."""
    groups = [cyclic_group(order)]
    if order == 4:
        groups.append(klein_group())
    return groups


def sample_points(count):
    pts = ["0", "inf", (Fraction(1), Fraction(0)), (Fraction(1), Fraction(1, 4)),
           (Fraction(1), Fraction(1, 8)), (Fraction(1), Fraction(1, 3))]
    pts += [(Fraction(k + 2), Fraction(1, 7 * (k + 2))) for k in range(count)]
    return pts


def orbit_sizes(group, points):
    seen, sizes = set(), []
    for p in points:
        if p in seen:
            continue
        orb = {g(p) for g in group}
        seen |= orb
        sizes.append(len(orb))
    return sizes


def realizable(order, marked):
    """Some abelian group of this order preserves some set of ``marked`` points."""
    for group in abelian_subgroups(order):
        sizes = orbit_sizes(group, sample_points(marked))
        for k in range(1, len(sizes) + 1):
            if any(sum(c) == marked for c in itertools.combinations(sizes, k)):
                return True
    return False


# ---------------------------------------------------------------------------
# Euler numbers of Kodaira fibres, from the topological model


def kodaira_euler(family, index=0):
    if family == "I":
        return index
    if family == "I*":
        return index + 6
    return {"II": 2, "III": 3, "IV": 4, "IV*": 8, "III*": 9, "II*": 10}[family]


# ---------------------------------------------------------------------------
# log canonical thresholds from explicit log resolutions
#
# For the cusp, the tangency and the triple point, each exceptional divisor of
# the minimal log resolution is listed as (multiplicity of the fibre along it,
# discrepancy).  A divisor imposes t <= (discrepancy + 1) / multiplicity.

LOG_RESOLUTIONS = {
    "II": [(2, 1), (3, 2), (6, 4)],
    "III": [(2, 1), (4, 2)],
    "IV": [(3, 1)],
}


def lct_oracle(graph, family):
    bounds = [Fraction(1, c.multiplicity) for c in graph.components]
    if family in LOG_RESOLUTIONS:
        l = graph.components[0].multiplicity
        bounds += [Fraction(a + 1, m * l) for m, a in LOG_RESOLUTIONS[family]]
    else:
        for p in graph.points:
            total = sum(graph.component(cid).multiplicity * n for cid, n in p.branches)
            bounds.append(Fraction(2, total))
    return min(bounds)
