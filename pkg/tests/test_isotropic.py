import json
from math import gcd

import pytest

from equilib.core import XS, YS, ZS, apply, to_matrix
from equilib.linalg import Matrix
from equilib.psl2 import enumerate_normal_forms, hat, normal_to_matrix
from equilib.isotropic import (
    PythTriple,
    TripleABC,
    brute_force_isotropic,
    canonical_pair,
    canonical_pairs,
    decompose_isotropic,
    dual_label,
    enumerate_isotropic,
    isotropic_record,
    omega,
    orbit_element,
    orbit_matrix,
    orbit_point,
    pythagorean,
    sz_power,
    triple_record,
    triples,
)
from equilib.roots import norm


def test_orbit_point_examples():
    assert orbit_point(1, 0) == ZS
    assert orbit_point(0, 1) == YS
    assert orbit_point(1, 1) == XS
    assert to_matrix(orbit_point(1, 1)) == Matrix([[1, -1], [1, -1]])
    with pytest.raises(ValueError):
        orbit_point(2, 4)
    with pytest.raises(ValueError):
        orbit_point(0, 0)


def test_orbit_point_properties():
    for m in range(-20, 21):
        for n in range(-20, 21):
            if (m, n) == (0, 0) or gcd(m, n) != 1:
                continue
            u = orbit_point(m, n)
            mat = to_matrix(u)
            assert mat == orbit_matrix(m, n)
            assert (mat @ mat).is_zero()
            assert norm((2 * u).coords()) == 0


def test_orbit_element_realises_point():
    for m, n in canonical_pairs(9):
        g = orbit_element(m, n)
        assert (g.a, g.c) in ((m, n), (-m, -n))
        assert apply(hat(g), ZS) == orbit_point(m, n)


def test_decompose_examples():
    d = decompose_isotropic((-1, -1, 0))
    assert (d.k, d.m, d.n) == (1, 1, 0)
    d = decompose_isotropic((-1, -4, -9))
    assert (d.k, d.m, d.n, d.abc) == (1, 2, 3, (1, 2, 3))
    d2 = decompose_isotropic((-2, -8, -18))
    assert (d2.k, d2.m, d2.n) == (2, 2, 3)
    with pytest.raises(ValueError):
        decompose_isotropic((1, 0, 0))
    with pytest.raises(ValueError):
        decompose_isotropic((0, 0, 0))


def test_decompose_inverts_construction():
    for m in range(-20, 21):
        for n in range(-20, 21):
            if (m, n) == (0, 0) or gcd(m, n) != 1:
                continue
            for k in range(-5, 6):
                if k == 0:
                    continue
                u = (2 * k * orbit_point(m, n)).coords()
                d = decompose_isotropic(u)
                cm, cn = canonical_pair(m, n)
                assert (d.k, d.m, d.n) == (k, cm, cn)
                assert d.vector() == u


def test_canonical_pair():
    assert canonical_pair(-2, 3) == (2, -3)
    assert canonical_pair(0, -1) == (0, 1)
    assert canonical_pair(3, -1) == (3, -1)


def test_enumerate_isotropic_small():
    assert enumerate_isotropic(1) == sorted(
        [(1, 1, 0), (-1, -1, 0), (0, 1, 1), (0, -1, -1), (1, 0, 1), (-1, 0, -1)]
    )
    assert enumerate_isotropic(0) == []
    assert brute_force_isotropic(0) == []


def test_enumerate_matches_brute_force():
    for box in (2, 5, 9, 16):
        assert enumerate_isotropic(box) == brute_force_isotropic(box)


def test_orbit_and_its_negative_are_disjoint():
    orbit = {apply(hat(normal_to_matrix(nw)), ZS) for nw in enumerate_normal_forms(10)}
    assert orbit & {-v for v in orbit} == set()
    # every image is one of the explicit points
    for v in orbit:
        d = decompose_isotropic((2 * v).coords())
        assert d.k == 1 and orbit_point(d.m, d.n) == v


def test_stabiliser_of_z_star():
    powers = set()
    for nw in enumerate_normal_forms(8):
        k = sz_power(normal_to_matrix(nw))
        if k is not None:
            powers.add(k)
    # (b c2)^k and (c b)^k only
    assert powers == set(range(-4, 5))


def test_triple_validation():
    assert TripleABC.of(1, 2, 3).relation == "c=a+b"
    assert TripleABC.of(3, 1, 2).relation == "a=b+c"
    assert TripleABC.of(1, 3, 2).relation == "b=c+a"
    with pytest.raises(ValueError):
        TripleABC.of(2, 4, 6)
    with pytest.raises(ValueError):
        TripleABC.of(1, 1, 1)
    with pytest.raises(ValueError):
        TripleABC(1, 2, 3, "a=b+c")
    with pytest.raises(ValueError):
        TripleABC.of(0, 0, 0)


def test_pythagorean_examples():
    assert pythagorean(TripleABC.of(1, 1, 2)) == PythTriple(4, 3, 5, "gamma")
    assert pythagorean(TripleABC.of(1, 2, 3)).as_tuple() == (12, 5, 13)
    assert pythagorean(TripleABC.of(1, 3, 4)).as_tuple() == (24, 7, 25)
    deg = TripleABC.of(0, 1, 1)
    assert deg.degenerate and pythagorean(deg).as_tuple() == (2, 0, 2)
    p = pythagorean(TripleABC.of(4, 1, 3))
    assert p.hypotenuse == "alpha" and p.holds()


def test_pythagorean_identity_up_to_200():
    count = 0
    for t in triples(200):
        assert pythagorean(t).holds()
        count += 1
    assert count > 10_000


def test_omega():
    out = omega(1)
    vecs = {v for v, _ in out}
    assert vecs == {XS, YS, ZS}
    labels = {(t.a, t.b, t.c) for _, t in out}
    assert (0, 1, 1) in labels
    big = omega(5)
    labels = {(t.a, t.b, t.c) for _, t in big}
    for fam in ((0, 1, 1), (1, 1, 2), (1, 2, 3), (1, 3, 4), (2, 3, 5)):
        assert fam in labels
    v = [v for v, t in big if (t.a, t.b, t.c) == (1, 3, 4)][0]
    assert (2 * v).coords() == (-1, -9, -16)
    for v, _ in big:
        assert norm((2 * v).coords()) == 0
    with pytest.raises(ValueError):
        omega(0)


def test_dual_label():
    v = [v for v, t in omega(3) if (t.a, t.b, t.c) == (1, 2, 3)][0]
    assert dual_label(v) == "6x*+3y*−2z*"
    assert dual_label(XS) == "x*"
    assert dual_label(-YS) == "−y*"


def test_records_round_trip():
    rec = isotropic_record((-1, -4, -9))
    assert rec == {"k": 1, "m": 2, "n": 3, "vector": [-1, -4, -9], "abc": [1, 2, 3], "pythagorean": [12, 5, 13]}
    assert json.loads(json.dumps(rec)) == rec
    tr = triple_record(TripleABC.of(1, 1, 2))
    assert tr["pythagorean"] == [4, 3, 5] and tr["hypotenuse"] == "gamma" and not tr["degenerate"]
