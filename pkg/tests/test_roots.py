import random

import pytest
from hypothesis import given

from equilib.core import EquiVec, trace_form
from equilib.psl2 import enumerate_normal_forms, hat, normal_to_matrix
from equilib.roots import (
    REFLECT,
    brute_force_real,
    classify,
    descent,
    enumerate_real,
    in_box,
    norm,
    norm_five_ways,
    parity_class,
    replay,
    rho,
    root_record,
    tau_x,
    tau_y,
    tau_z,
)
from equilib.psl2 import word_hat

from strategies import triples


def test_norm_five_ways_examples():
    assert norm_five_ways((1, 0, 0)) == (1,) * 5
    assert norm_five_ways((1, 1, 0)) == (0,) * 5
    assert norm_five_ways((1, 2, 0)) == (1,) * 5


def test_norm_five_ways_random():
    rng = random.Random(7)
    for _ in range(100_000):
        u = tuple(rng.randint(-10**6, 10**6) for _ in range(3))
        five = norm_five_ways(u)
        assert len(set(five)) == 1
        assert 2 * five[0] == norm(u)


@given(triples)
def test_norm_is_trace_form(u):
    v = EquiVec.of(u)
    assert norm(u) == trace_form(v, v)


def test_classify_examples():
    assert classify((1, 0, 0)).kind == "real"
    assert classify((1, 0, 0)).parity == "Wx"
    assert classify((1, 0, 0)).height == 1
    info = classify((2, 0, 1))
    assert (info.kind, info.height, info.parity) == ("real", 3, "Wz")
    info = classify((1, 1, 1))
    assert (info.kind, info.norm) == ("negativeNorm", -6)
    assert classify((1, 1, 0)).kind == "isotropic"
    zero = classify((0, 0, 0))
    assert zero.zero and zero.kind == "nonRoot-positiveNorm" and zero.norm == 0
    assert classify((2, 0, 0)).kind == "nonRoot-positiveNorm"


def test_coordinate_maps_are_hats():
    for f, tok in ((tau_x, "tx"), (tau_y, "ty"), (tau_z, "tz"), (rho, "r")):
        m = word_hat((tok,))
        for u in ((1, 0, 0), (0, 1, 0), (0, 0, 1), (3, -2, 5)):
            assert f(u) == m @ u


def test_descent_examples():
    assert descent((1, 0, 0)) == ()
    assert descent((0, 1, 0)) == ("r",)
    assert descent((0, 0, 1)) == ("r2",)
    assert descent((1, 2, 0)) == ("ty", "r2")
    assert descent((-1, 0, 0)) == ("tx",)
    with pytest.raises(ValueError):
        descent((1, 1, 1))


def test_brute_force_small():
    assert sorted(brute_force_real(1)) == sorted(
        [(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)]
    )
    assert [u for u in enumerate_real(1) if sum(u) > 0] == [(0, 0, 1), (0, 1, 0), (1, 0, 0)]
    assert enumerate_real(0) == []


def test_real_roots_in_box_20():
    found = brute_force_real(20)
    assert found == sorted(found)
    assert found == [u for u in enumerate_real(60) if in_box(u, 20)]
    for u in found:
        assert replay(descent(u)) == u
        assert 2 * sum(c * c for c in u) - sum(u) ** 2 == 1
        assert parity_class(u) is not None
        assert all(c >= 0 for c in u) or all(c <= 0 for c in u)


def test_parity_invariant_under_reflections():
    for u in enumerate_real(40):
        for f in REFLECT.values():
            assert parity_class(f(u)) == parity_class(u)
            assert norm(f(u)) == 2


def test_normal_forms_move_x_injectively():
    images = {}
    for nw in enumerate_normal_forms(10):
        v = hat(normal_to_matrix(nw)).column(0)
        assert v not in images
        images[v] = nw


def test_root_record():
    rec = root_record((1, 2, 0))
    assert rec == {"vector": [1, 2, 0], "norm": 2, "height": 3, "class": "real", "parity": "Wx", "word": "ty r2"}
    assert root_record((1, 1, 0)) == {"vector": [1, 1, 0], "norm": 0, "height": 2, "class": "isotropic"}
