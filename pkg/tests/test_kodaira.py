from fractions import Fraction

import pytest

from lagfib.errors import NotElliptic, NotQuasiUnipotent
from lagfib.kodaira import (
    Component,
    FibreGraph,
    KodairaType,
    Point,
    candidate_types,
    check_fibre_form,
    euler_number,
    fibre_graph,
    find_conjugator,
    isomorphic,
    kodaira_from_monodromy,
    lct,
    recognize,
    standard_monodromy,
)

import oracles

FINITE = ["II", "III", "IV", "II*", "III*", "IV*"]
ALL_TYPES = (
    [KodairaType.parse(f) for f in FINITE]
    + [KodairaType("I", m) for m in range(1, 9)]
    + [KodairaType("I*", m) for m in range(0, 9)]
)


@pytest.mark.parametrize("text", ["I_3", "I*_2", "I_0", "II*", "IV", "3I_0", "I*_0"])
def test_parse_roundtrip(text):
    assert str(KodairaType.parse(text)) == text


def test_parse_rejects_garbage():
    for bad in ("V", "2I_3", "I**_1", ""):
        with pytest.raises(ValueError):
            KodairaType.parse(bad)


def test_euler_numbers_against_topology():
    for m in range(1, 21):
        assert euler_number(KodairaType("I", m)) == oracles.kodaira_euler("I", m)
        assert euler_number(KodairaType("I*", m)) == oracles.kodaira_euler("I*", m)
        assert fibre_graph(KodairaType("I", m)).euler_number() == m
    for f in FINITE:
        assert euler_number(KodairaType(f)) == oracles.kodaira_euler(f)


@pytest.mark.parametrize("k", ALL_TYPES, ids=str)
def test_fibre_graphs_are_fibres(k):
    g = fibre_graph(k)
    assert g.is_connected()
    assert check_fibre_form(g)
    q = g.intersection_matrix()
    assert oracles.negative_semidefinite_with_kernel(q, g.multiplicities)
    assert recognize(g) == (k, 1)


@pytest.mark.parametrize("l", [2, 3, 5])
def test_multiple_fibres_recognized(l):
    for k in (KodairaType("I*", 0), KodairaType("IV"), KodairaType("I", 4)):
        assert recognize(fibre_graph(k).scaled(l)) == (k, l)


def test_multiple_smooth_fibre():
    k = KodairaType.parse("4I_0")
    g = fibre_graph(k)
    assert g.multiplicities == (4,)
    assert euler_number(k) == 0


@pytest.mark.parametrize(
    "name, value",
    [
        ("I_3", Fraction(1)), ("I*_0", Fraction(1, 2)), ("I*_4", Fraction(1, 2)),
        ("II", Fraction(5, 6)), ("III", Fraction(3, 4)), ("IV", Fraction(2, 3)),
        ("II*", Fraction(1, 6)), ("III*", Fraction(1, 4)), ("IV*", Fraction(1, 3)),
    ],
)
def test_lct_values(name, value):
    assert lct(fibre_graph(name)) == value


def test_lct_scales_with_multiplicity():
    for name in ("I*_0", "II", "IV*", "I_2"):
        base = lct(fibre_graph(name))
        for l in (2, 3, 4, 6):
            assert lct(fibre_graph(name).scaled(l)) == base / l


@pytest.mark.parametrize("k", ALL_TYPES, ids=str)
def test_monodromy_roundtrip(k, rng):
    mat = standard_monodromy(k)
    assert kodaira_from_monodromy(mat) == k
    for _ in range(20):
        p = oracles.random_symplectic(1, rng, steps=5)
        conj = oracles.mat_mul(oracles.mat_mul(p, mat), oracles.symplectic_inverse(p))
        assert kodaira_from_monodromy(conj) == k


def test_find_conjugator_brute_force(rng):
    for k in ALL_TYPES[:10]:
        std = standard_monodromy(k)
        p = oracles.random_symplectic(1, rng, steps=2)
        conj = oracles.mat_mul(oracles.mat_mul(p, std), oracles.symplectic_inverse(p))
        found = find_conjugator(std, conj)
        assert found is not None
        assert oracles.mat_mul(oracles.mat_mul(found, std), oracles.symplectic_inverse(found)) == conj
    assert find_conjugator(standard_monodromy(KodairaType("II")), standard_monodromy(KodairaType("II*"))) is None


def test_negative_unipotent_and_hyperbolic():
    with pytest.raises(NotElliptic):
        kodaira_from_monodromy(((1, -2), (0, 1)))
    with pytest.raises(NotQuasiUnipotent):
        kodaira_from_monodromy(((2, 1), (1, 1)))


def test_candidate_types_cover_euler():
    for e in range(0, 15):
        for k in candidate_types(e):
            assert euler_number(k) == e


def test_points_and_intersections():
    a = Component("A", 1, -2)
    b = Component("B", 1, -2)
    tangent = FibreGraph((a, b), (Point.make({"A": 1, "B": 1}, None, {("A", "B"): 2}),))
    assert tangent.intersection("A", "B") == 2
    assert not tangent.snc
    assert isomorphic(tangent, fibre_graph("III"))
    node = FibreGraph((Component("C", 1, 0),), (Point.node("C"),))
    assert node.snc and isomorphic(node, fibre_graph("I_1"))
    assert not isomorphic(node, fibre_graph("II"))
