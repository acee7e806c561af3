"""Exact linear algebra for integer symplectic monodromy matrices.

Everything here works over the integers or the rationals; no floating point is
used anywhere, so rank and order decisions are exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Sequence

from .errors import NotQuasiUnipotent, NotSymplectic, RankGateViolation

Matrix = tuple[tuple[int, ...], ...]
Poly = tuple[int, ...]  # coefficients, lowest degree first


def as_matrix(rows: Sequence[Sequence[int]]) -> Matrix:
    out = tuple(tuple(int(x) for x in row) for row in rows)
    if not out or any(len(row) != len(out) for row in out):
        raise ValueError("matrix must be square and non-empty")
    return out


def identity(size: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(size)) for i in range(size))


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> tuple:
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)


def matsub(a: Sequence[Sequence], b: Sequence[Sequence]) -> tuple:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def transpose(a: Sequence[Sequence]) -> tuple:
    return tuple(zip(*a))


def matpow(a: Sequence[Sequence[int]], k: int) -> Matrix:
    if k < 0:
        raise ValueError("negative powers are not supported")
    result = identity(len(a))
    base = as_matrix(a)
    while k:
        if k & 1:
            result = matmul(result, base)
        base = matmul(base, base)
        k >>= 1
    return result


def standard_form(n: int) -> Matrix:
    """J = [[0, I_n], [-I_n, 0]]."""
    size = 2 * n
    rows = []
    for i in range(size):
        row = [0] * size
        if i < n:
            row[i + n] = 1
        else:
            row[i - n] = -1
        rows.append(tuple(row))
    return tuple(rows)


def is_symplectic(a: Sequence[Sequence[int]]) -> bool:
    size = len(a)
    if size % 2:
        return False
    form = standard_form(size // 2)
    return matmul(matmul(transpose(a), form), a) == form


def rank(a: Sequence[Sequence]) -> int:
    """Rank over the rationals by fraction-exact Gaussian elimination."""
    rows = [[Fraction(x) for x in row] for row in a]
    if not rows:
        return 0
    ncols = len(rows[0])
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        p = rows[r][c]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c] / p
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return r


def nullspace(a: Sequence[Sequence]) -> list[list[Fraction]]:
    """A basis of the right kernel of ``a`` over the rationals."""
    rows = [[Fraction(x) for x in row] for row in a]
    ncols = len(rows[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        p = rows[r][c]
        rows[r] = [x / p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    basis = []
    for free in (c for c in range(ncols) if c not in pivots):
        vec = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        for i, pc in enumerate(pivots):
            vec[pc] = -rows[i][free]
        basis.append(vec)
    return basis


def charpoly(a: Sequence[Sequence[int]]) -> Poly:
    """Characteristic polynomial det(xI - A) via Faddeev-LeVerrier.

    For an integer matrix every intermediate matrix is integral and each
    trace is divisible by its step index, so the recursion stays in Z.
    """
    size = len(a)
    ia = as_matrix(a)
    coeffs = [0] * (size + 1)
    coeffs[size] = 1
    m: list[list[int]] = [[0] * size for _ in range(size)]
    for k in range(1, size + 1):
        m = [list(row) for row in matmul(ia, m)]
        prev = coeffs[size - k + 1]
        for i in range(size):
            m[i][i] += prev
        am = matmul(ia, m)
        q, r = divmod(-sum(am[i][i] for i in range(size)), k)
        if r:
            raise ArithmeticError("non-integral characteristic polynomial")
        coeffs[size - k] = q
    return tuple(coeffs)


def _poly_divmod(num: Poly, den: Poly) -> tuple[Poly, Poly]:
    """Division by a monic integer polynomial."""
    if den[-1] != 1:
        raise ValueError("divisor must be monic")
    rem = list(num)
    quot = [0] * max(len(num) - len(den) + 1, 1)
    for shift in range(len(num) - len(den), -1, -1):
        c = rem[shift + len(den) - 1]
        quot[shift] = c
        if c:
            for i, d in enumerate(den):
                rem[shift + i] -= c * d
    while len(rem) > 1 and rem[-1] == 0:
        rem.pop()
    return tuple(quot), tuple(rem)


def euler_phi(d: int) -> int:
    result, k, p = d, d, 2
    while p * p <= k:
        if k % p == 0:
            while k % p == 0:
                k //= p
            result -= result // p
        p += 1
    if k > 1:
        result -= result // k
    return result


@lru_cache(maxsize=None)
def cyclotomic(d: int) -> Poly:
    """The d-th cyclotomic polynomial, from x^d - 1 = prod over e | d of Phi_e."""
    poly: Poly = (-1,) + (0,) * (d - 1) + (1,)
    for e in range(1, d):
        if d % e == 0:
            poly, rem = _poly_divmod(poly, cyclotomic(e))
            assert rem == (0,)
    return poly


def cyclotomic_factorization(poly: Poly) -> dict[int, int] | None:
    """Exponents of the cyclotomic factors of a monic polynomial.

    Returns ``None`` when a non-cyclotomic factor remains.
    """
    degree = len(poly) - 1
    # phi(d) >= sqrt(d / 2), so every relevant d is at most 2 * degree**2
    bound = max(2, 2 * degree * degree)
    factors: dict[int, int] = {}
    rest = poly
    for d in range(1, bound + 1):
        if len(rest) == 1:
            break
        if euler_phi(d) > len(rest) - 1:
            continue
        phi_d = cyclotomic(d)
        while len(rest) > 1:
            q, r = _poly_divmod(rest, phi_d)
            if r != (0,):
                break
            rest = q
            factors[d] = factors.get(d, 0) + 1
    return factors if rest == (1,) else None


@dataclass(frozen=True)
class MonodromyMatrix:
    """Integer 2n x 2n symplectic matrix with a unipotent power.

    Both conditions are checked on construction.
    """

    entries: Matrix

    def __post_init__(self) -> None:
        rows = as_matrix(self.entries)
        object.__setattr__(self, "entries", rows)
        if len(rows) % 2:
            raise NotSymplectic("monodromy matrix must have even size")
        if not is_symplectic(rows):
            raise NotSymplectic("transpose(U) J U != J")
        factors = cyclotomic_factorization(charpoly(rows))
        if factors is None:
            raise NotQuasiUnipotent(
                "characteristic polynomial has a non-cyclotomic factor"
            )
        object.__setattr__(self, "_orders", tuple(sorted(factors)))

    @property
    def n(self) -> int:
        return len(self.entries) // 2

    @property
    def eigenvalue_orders(self) -> tuple[int, ...]:
        return self._orders  # type: ignore[attr-defined]

    def homology(self) -> Matrix:
        """The transpose-inverse, i.e. the action on homology."""
        return transpose(inverse_symplectic(self.entries))


def inverse_symplectic(a: Matrix) -> Matrix:
    """U^{-1} = -J U^T J for symplectic U."""
    form = standard_form(len(a) // 2)
    prod = matmul(matmul(form, transpose(a)), form)
    return tuple(tuple(-x for x in row) for row in prod)


def _coerce(u: MonodromyMatrix | Sequence[Sequence[int]]) -> MonodromyMatrix:
    return u if isinstance(u, MonodromyMatrix) else MonodromyMatrix(as_matrix(u))


def quasi_unipotent_index(u: MonodromyMatrix | Sequence[Sequence[int]]) -> int:
    """Least m with U^m unipotent."""
    return lcm(*_coerce(u).eigenvalue_orders)


def semisimple_order(u: MonodromyMatrix | Sequence[Sequence[int]]) -> int:
    """Order of the semisimple part of U; it coincides with the quasi-unipotent index."""
    return quasi_unipotent_index(u)


def unipotent_rank_defect(u: MonodromyMatrix | Sequence[Sequence[int]]) -> int:
    mono = _coerce(u)
    power = matpow(mono.entries, quasi_unipotent_index(mono))
    return rank(matsub(power, identity(len(power))))


def torus_rank(u: MonodromyMatrix | Sequence[Sequence[int]]) -> int:
    """0 selects the smooth branch, 1 the first-order branch."""
    defect = unipotent_rank_defect(u)
    if defect >= 2:
        raise RankGateViolation(f"rank(U^m - I) = {defect} exceeds 1")
    return defect


def fixed_space_dim(a: Sequence[Sequence]) -> int:
    """Dimension of ker(A - I) over the rationals."""
    size = len(a)
    return size - rank(matsub(a, identity(size)))
