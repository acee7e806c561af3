from fractions import Fraction
from math import gcd

import pytest

from lagfib.errors import NotQuasiUnipotent, NotSymplectic, RankGateViolation
from lagfib.intmat import (
    MonodromyMatrix,
    charpoly,
    cyclotomic,
    cyclotomic_factorization,
    fixed_space_dim,
    inverse_symplectic,
    is_symplectic,
    matmul,
    quasi_unipotent_index,
    rank,
    semisimple_order,
    torus_rank,
    unipotent_rank_defect,
)

import oracles

T = ((1, 1), (0, 1))
S = ((0, -1), (1, 0))


def poly_eval(coeffs, x):
    # coefficients stored from the constant term upwards
    return sum(Fraction(c) * x**i for i, c in enumerate(coeffs))


@pytest.mark.parametrize(
    "mat, index, defect",
    [
        (((1, 0), (0, 1)), 1, 0),
        (T, 1, 1),
        (S, 4, 0),
        (((0, -1), (1, 1)), 6, 0),
        (((-1, 0), (0, -1)), 2, 0),
        (((0, -1), (1, -1)), 3, 0),
        (((-1, -3), (0, -1)), 2, 1),
    ],
)
def test_known_classes(mat, index, defect):
    assert quasi_unipotent_index(mat) == index
    assert semisimple_order(mat) == index
    assert unipotent_rank_defect(mat) == defect
    assert torus_rank(mat) == defect


def test_hyperbolic_rejected_at_construction():
    with pytest.raises(NotQuasiUnipotent):
        MonodromyMatrix(((2, 1), (1, 1)))


def test_non_symplectic_rejected():
    with pytest.raises(NotSymplectic):
        MonodromyMatrix(((1, 1), (1, 1)))
    with pytest.raises(NotSymplectic):
        MonodromyMatrix(((1, 0, 0), (0, 1, 0), (0, 0, 1)))


def test_rank_two_defect_hits_gate():
    u = oracles.block_sum([T, T])
    assert unipotent_rank_defect(u) == 2
    with pytest.raises(RankGateViolation):
        torus_rank(u)


def test_charpoly_matches_determinant_oracle(rng):
    for n in (1, 2, 3):
        for _ in range(25):
            u = oracles.random_symplectic(n, rng, steps=5, bound=2)
            coeffs = charpoly(u)
            for x in (-2, -1, 0, 1, 3, Fraction(1, 2)):
                assert poly_eval(coeffs, x) == oracles.charpoly_at(u, x)


def test_cyclotomic_degrees_and_roots():
    for d in range(1, 31):
        phi = cyclotomic(d)
        assert len(phi) - 1 == sum(1 for k in range(1, d + 1) if gcd(k, d) == 1)
    # x^12 - 1 is the product of the cyclotomic polynomials of the divisors of 12
    poly = (-1,) + (0,) * 11 + (1,)
    assert cyclotomic_factorization(poly) == {1: 1, 2: 1, 3: 1, 4: 1, 6: 1, 12: 1}
    assert cyclotomic_factorization((1, -3, 1)) is None


def test_index_matches_brute_force(rng):
    reps = [((1, 0), (0, 1)), T, S, ((0, -1), (1, 1)), ((0, -1), (1, -1)), ((-1, 0), (0, -1))]
    for _ in range(200):
        n = rng.choice((1, 2))
        u = oracles.block_sum([rng.choice(reps) for _ in range(n)])
        p = oracles.random_symplectic(n, rng)
        conj = oracles.mat_mul(oracles.mat_mul(p, u), oracles.symplectic_inverse(p))
        assert quasi_unipotent_index(conj) == oracles.brute_unipotent_index(conj)


def test_inverse_and_symplectic_check(rng):
    for n in (1, 2, 3):
        u = oracles.random_symplectic(n, rng, steps=6)
        assert is_symplectic(u) and oracles.is_symplectic(u)
        assert matmul(u, inverse_symplectic(u)) == oracles.mat_id(2 * n)
    # the homology action of a quasi-unipotent class is its transpose-inverse
    p = oracles.random_symplectic(2, rng)
    u = oracles.mat_mul(oracles.mat_mul(p, oracles.block_sum([S, T])), oracles.symplectic_inverse(p))
    assert MonodromyMatrix(u).homology() == tuple(zip(*oracles.symplectic_inverse(u)))


def test_rank_and_fixed_space():
    assert rank(((1, 2), (2, 4))) == 1
    assert rank(((0, 0), (0, 0))) == 0
    assert fixed_space_dim(((1, 0), (0, 1))) == 2
    assert fixed_space_dim(T) == 1
    assert fixed_space_dim(S) == 0


def test_raw_lists_accepted():
    assert quasi_unipotent_index([[0, -1], [1, 0]]) == 4
