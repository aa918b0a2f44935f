import json
from fractions import Fraction

import pytest
from hypothesis import given, settings

from equilib.core import (
    BASIS,
    DUAL_BASIS,
    DUAL_GRAM,
    DUAL_TO_EQUITABLE,
    GRAM,
    NAMED,
    X,
    XS,
    Y,
    YS,
    Z,
    ZERO,
    ZS,
    E,
    EquiVec,
    F,
    H,
    apply,
    bracket,
    element,
    exp_ad,
    from_dual_coords,
    from_matrix,
    killing_form,
    preserves_gram,
    to_dual_coords,
    to_matrix,
    trace_form,
)
from equilib.linalg import Matrix

from strategies import equivecs

half = Fraction(1, 2)


def test_matrix_realisation():
    assert to_matrix(X) == Matrix([[1, 0], [0, -1]])
    assert to_matrix(Y) == to_matrix(E) * 2 - to_matrix(H)
    assert to_matrix(Z) == to_matrix(F) * -2 - to_matrix(H)
    assert to_matrix(ZERO) == Matrix.zeros(2)
    assert to_matrix(XS) == Matrix([[1, -1], [1, -1]])
    assert XS == H - E + F


def test_from_matrix_rejects_trace():
    with pytest.raises(ValueError):
        from_matrix(Matrix([[1, 0], [0, 0]]))


@given(equivecs())
def test_matrix_round_trip(u):
    assert from_matrix(to_matrix(u)) == u


def test_bracket_relations():
    assert bracket(X, Y) == EquiVec(2, 2, 0)
    assert bracket(Y, Z) == 2 * Y + 2 * Z
    assert bracket(Z, X) == 2 * Z + 2 * X
    assert bracket(XS, YS) == Z
    assert bracket(YS, ZS) == X
    assert bracket(ZS, XS) == Y


def test_mixed_bracket_table():
    # [x*, y] = y + z and its cyclic images; [x*, x] is the only "diagonal" one
    assert bracket(XS, Y) == Y + Z
    assert bracket(ZS, X) == X + Y
    assert bracket(YS, Z) == Z + X
    assert bracket(XS, X) == Y - Z
    assert bracket(YS, Y) == Z - X
    assert bracket(ZS, Z) == X - Y


def test_sum_identities():
    assert X + Y + Z == -(XS + YS + ZS)
    assert ZS + X + YS == XS
    assert XS + Y + ZS == YS
    assert YS + Z + XS == ZS
    assert 2 * ZS == -(X + Y)
    assert 2 * XS == -(Y + Z)
    assert 2 * YS == -(Z + X)


@settings(max_examples=200)
@given(equivecs(), equivecs(), equivecs())
def test_jacobi(u, v, w):
    total = bracket(u, bracket(v, w)) + bracket(v, bracket(w, u)) + bracket(w, bracket(u, v))
    assert total == ZERO


@given(equivecs(), equivecs())
def test_bracket_antisymmetric(u, v):
    assert bracket(u, v) == -bracket(v, u)
    assert bracket(u, u) == ZERO


@given(equivecs(), equivecs())
def test_trace_form_matches_matrix_trace(u, v):
    assert trace_form(u, v) == (to_matrix(u) @ to_matrix(v)).trace()
    assert killing_form(u, v) == 4 * trace_form(u, v)


def test_trace_form_values():
    assert trace_form(X, X) == 2
    assert trace_form(X, YS) == 0
    assert trace_form(X, XS) == 2
    assert trace_form(XS, XS) == 0
    gram = Matrix([[trace_form(u, v) for v in BASIS] for u in BASIS])
    assert gram == GRAM
    dual = Matrix([[trace_form(u, v) for v in DUAL_BASIS] for u in DUAL_BASIS])
    assert dual == DUAL_GRAM


def test_dual_lattice_index():
    assert abs(DUAL_TO_EQUITABLE.det()) == Fraction(1, 4)


@given(equivecs())
def test_dual_coordinates_round_trip(u):
    assert from_dual_coords(to_dual_coords(u)) == u


def test_exp_ad_reference_matrices():
    assert exp_ad(XS) == Matrix([[1, 0, 0], [2, 2, -1], [0, 1, 0]])
    assert exp_ad(YS) == Matrix([[0, 0, 1], [0, 1, 0], [-1, 2, 2]])
    assert exp_ad(ZS) == Matrix([[2, -1, 2], [1, 0, 0], [0, 0, 1]])
    assert exp_ad(ZERO) == Matrix.identity(3)


def test_exp_ad_rejects_semisimple():
    with pytest.raises(ValueError):
        exp_ad(X)


def test_exp_ad_is_automorphism_and_isometry():
    for u in (XS, YS, ZS, E, F, 3 * E, XS * -1):
        m = exp_ad(u)
        assert preserves_gram(m)
        for a in BASIS:
            for b in BASIS:
                assert apply(m, bracket(a, b)) == bracket(apply(m, a), apply(m, b))


def test_json_round_trip():
    u = EquiVec(Fraction(-1, 2), 3, Fraction(7, 3))
    obj = u.to_json()
    assert obj == {"alpha": "-1/2", "beta": "3", "gamma": "7/3"}
    assert EquiVec.from_json(json.dumps(obj)) == u
    assert EquiVec.from_json(obj) == u


def test_named_elements():
    assert set(NAMED) == {"e", "f", "h", "x", "y", "z", "x*", "y*", "z*"}
    assert element("y*") == YS
    with pytest.raises(ValueError):
        element("w")
