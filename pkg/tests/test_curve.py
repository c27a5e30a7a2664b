from itertools import product

import pytest

from oracles import brute_points, chord_third_point, naive_multiple
from semimagic.curve import (
    INFINITY,
    Curve,
    CurvePoint,
    enumerate_points,
    find_full_torsion_curve,
    find_torsion_basis,
    point_order,
    torsion_subgroup,
)
from semimagic.errors import CharacteristicError, DomainError, ResourceError, TorsionError
from semimagic.group import verify_basis

SMALL_CURVES = [(5, 0, 1), (7, 0, 2), (7, 1, 1), (11, 1, 3), (13, 0, 5), (31, 0, 11)]


def as_pairs(points):
    return sorted((P.x, P.y) for P in points if not P.is_infinity)


@pytest.mark.parametrize("p, a4, a6", SMALL_CURVES)
def test_enumeration_matches_brute_force(p, a4, a6):
    E = Curve(p, a4, a6)
    points = enumerate_points(E)
    assert points[0] == INFINITY
    assert as_pairs(points) == sorted(brute_points(p, a4, a6)[1:])
    assert len(set(points)) == len(points)


def test_known_point_sets():
    points = enumerate_points(Curve(7, 0, 2))
    assert len(points) == 9
    assert {P.x for P in points if not P.is_infinity} == {0, 3, 5, 6}
    # brute-force count from oracles.brute_points
    assert len(enumerate_points(Curve(5, 0, 1))) == 6


def test_curve_construction_errors():
    with pytest.raises(DomainError):
        Curve(7, 0, 0)  # singular
    with pytest.raises(DomainError):
        Curve(9, 1, 1)  # not prime
    with pytest.raises(DomainError):
        Curve(3, 1, 1)
    with pytest.raises(DomainError):
        Curve.from_string("7,0")


def test_point_add_examples():
    E = Curve(7, 0, 2)
    P, Pm = E.point(0, 3), E.point(0, 4)
    assert E.add(INFINITY, P) == P
    assert E.add(P, Pm) == INFINITY
    # tangent at (0,3) has slope 0; y = 3 meets x^3 = 0 triply, so 2P = -P
    assert E.add(P, P) == Pm
    with pytest.raises(DomainError):
        E.add(P, CurvePoint(1, 1))


@pytest.mark.parametrize("p, a4, a6", SMALL_CURVES[:5])
def test_chord_rule_against_line_scan(p, a4, a6):
    E = Curve(p, a4, a6)
    affine = [P for P in enumerate_points(E) if not P.is_infinity]
    for P, Q in product(affine, repeat=2):
        if P.x == Q.x:
            continue
        S = E.add(P, Q)
        others = chord_third_point(p, a4, a6, (P.x, P.y), (Q.x, Q.y))
        if others:
            (R,) = others
            assert S == E.neg(CurvePoint(*R))
        else:
            assert S in (E.neg(P), E.neg(Q))


@pytest.mark.parametrize("p, a4, a6", SMALL_CURVES[:5])
def test_group_axioms_and_lagrange(p, a4, a6):
    E = Curve(p, a4, a6)
    points = enumerate_points(E)
    order = len(points)
    for P in points:
        assert E.add(P, E.neg(P)) == INFINITY
        assert E.add(P, INFINITY) == P
        assert E.scalar_mul(P, order) == INFINITY
    for P, Q in product(points, repeat=2):
        assert E.add(P, Q) == E.add(Q, P)
        assert E.contains(E.add(P, Q))
    if order <= 100:
        for P, Q, R in product(points, repeat=3):
            assert E.add(E.add(P, Q), R) == E.add(P, E.add(Q, R))


def test_scalar_mul_matches_naive_on_larger_curve():
    E = Curve(31, 0, 11)
    for P in enumerate_points(E)[:12]:
        for m in range(-40, 41):
            assert E.scalar_mul(P, m) == naive_multiple(E.add, E.neg, E.identity, P, m)


@pytest.mark.parametrize("p, a4, a6", SMALL_CURVES)
@pytest.mark.parametrize("N", [1, 2, 3, 5])
def test_torsion_subgroup_filters_by_multiple(p, a4, a6, N):
    E = Curve(p, a4, a6)
    if N % p == 0:
        with pytest.raises(CharacteristicError):
            torsion_subgroup(E, N)
        return
    points = enumerate_points(E)
    expected = [P for P in points if naive_multiple(E.add, E.neg, E.identity, P, N) == INFINITY]
    sub = torsion_subgroup(E, N)
    assert sub == expected
    assert len(points) % len(sub) == 0
    assert (N * N) % len(sub) == 0


def test_torsion_examples():
    E = Curve(7, 0, 2)
    assert len(torsion_subgroup(E, 3)) == 9
    assert torsion_subgroup(E, 1) == [INFINITY]
    with pytest.raises(CharacteristicError, match="characteristic"):
        torsion_subgroup(E, 14)


def test_enumeration_limit():
    E = Curve(101, 1, 1)
    with pytest.raises(ResourceError):
        enumerate_points(E, limit=100)
    assert len(enumerate_points(E, limit=101)) > 0


def test_enumeration_limit_env(monkeypatch):
    monkeypatch.setenv("SEMIMAGIC_ENUM_LIMIT", "50")
    with pytest.raises(ResourceError):
        enumerate_points(Curve(53, 1, 1))


def test_find_torsion_basis():
    E = Curve(7, 0, 2)
    basis = find_torsion_basis(E, 3)
    assert verify_basis(basis)
    assert (basis.P, basis.Q) == (E.point(0, 3), E.point(3, 1))
    one = find_torsion_basis(E, 1)
    assert (one.P, one.Q) == (INFINITY, INFINITY)
    with pytest.raises(TorsionError, match="not fully rational"):
        find_torsion_basis(E, 9)
    # E(F_5): 6 points, so only part of the 3-torsion is rational; 3 does not divide 4
    with pytest.raises(TorsionError, match=r"N \| p-1"):
        find_torsion_basis(Curve(5, 0, 1), 3)


def test_point_order():
    E = Curve(31, 0, 11)
    for P in torsion_subgroup(E, 5):
        assert point_order(E, P, 5) == (1 if P.is_infinity else 5)


def test_full_torsion_search_n5():
    E, basis = find_full_torsion_curve(5)
    assert (E.p, E.a4, E.a6) == (31, 0, 11)
    assert verify_basis(basis)
    # confirm with the brute-force oracle
    pts = brute_points(31, 0, 11)
    assert len(pts) % 25 == 0
    killed = [
        P for P in enumerate_points(E)
        if naive_multiple(E.add, E.neg, E.identity, P, 5) == INFINITY
    ]
    assert len(killed) == 25


def test_full_torsion_search_n3_finds_small_curve():
    E, basis = find_full_torsion_curve(3)
    assert E.p == 7
    assert len(torsion_subgroup(E, 3)) == 9
    with pytest.raises(TorsionError):
        find_full_torsion_curve(5, max_p=30)


def test_parse_and_format_points():
    E = Curve(7, 0, 2)
    assert E.parse_element("O") == INFINITY
    assert E.parse_element("inf") == INFINITY
    assert E.parse_element("0,3") == E.point(0, 3)
    assert E.format_element(E.point(0, 3)) == "0,3"
    with pytest.raises(DomainError):
        E.parse_element("1,1")
    with pytest.raises(DomainError):
        E.parse_element("x")
