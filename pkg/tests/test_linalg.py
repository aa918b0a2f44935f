from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from equilib.linalg import Matrix, binomial, clean, column_space, qstr, same_span

entries = st.fractions(min_value=-6, max_value=6, max_denominator=4)


def matrices(n, m=None):
    m = n if m is None else m
    return st.lists(st.lists(entries, min_size=m, max_size=m), min_size=n, max_size=n).map(Matrix)


def test_clean_and_qstr():
    assert clean(Fraction(4, 2)) == 2 and isinstance(clean(Fraction(4, 2)), int)
    assert clean(Fraction(1, 2)) == Fraction(1, 2)
    assert qstr(Fraction(-3, 6)) == "-1/2"
    assert qstr(5) == "5"


def test_construction_and_access():
    m = Matrix([[1, 2], [3, 4]])
    assert m.shape == (2, 2)
    assert m[1, 0] == 3
    assert m.column(1) == (2, 4)
    assert m.T == Matrix([[1, 3], [2, 4]])
    assert Matrix.from_columns([(1, 3), (2, 4)]) == m
    assert m.trace() == 5
    with pytest.raises(ValueError):
        Matrix([[1, 2], [3]])


def test_hashable_and_equal():
    a = Matrix([[Fraction(2, 2), 0], [0, 1]])
    assert a == Matrix.identity(2)
    assert len({a, Matrix.identity(2)}) == 1


def test_matrix_vector_product_is_clean():
    v = Matrix([[Fraction(1, 2), Fraction(1, 2)]]) @ (1, 1)
    assert v == (1,) and isinstance(v[0], int)


def test_powers():
    c = Matrix([[1, -1], [1, 0]])
    assert c ** 6 == Matrix.identity(2)
    assert c ** -1 @ c == Matrix.identity(2)
    assert c ** 0 == Matrix.identity(2)


def test_singular_inverse_raises():
    with pytest.raises(ZeroDivisionError):
        Matrix([[1, 2], [2, 4]]).inverse()


@settings(max_examples=60, deadline=None)
@given(matrices(3, 4))
def test_rref_matches_sympy(m):
    ours, pivots = m.rref()
    theirs, their_pivots = sympy.Matrix(m.tolist()).rref()
    assert pivots == tuple(their_pivots)
    assert [[sympy.Rational(v) for v in r] for r in ours.rows] == theirs.tolist()


@settings(max_examples=60, deadline=None)
@given(matrices(3))
def test_det_and_inverse_match_sympy(m):
    d = m.det()
    assert sympy.Rational(d) == sympy.Matrix(m.tolist()).det()
    if d != 0:
        assert m @ m.inverse() == Matrix.identity(3)
        assert m.inverse() @ m == Matrix.identity(3)


@settings(max_examples=40, deadline=None)
@given(matrices(3), matrices(3), matrices(3))
def test_product_associative(a, b, c):
    assert (a @ b) @ c == a @ (b @ c)


def test_column_space_and_spans():
    assert same_span([(1, 0, 0), (0, 1, 0)], [(1, 1, 0), (1, -1, 0)])
    assert not same_span([(1, 0, 0)], [(0, 1, 0)])
    assert column_space([(2, 4), (1, 2)]).rows == ((1, 2),)
    assert column_space([]).rows == ()
    assert Matrix([[1, 2], [2, 4]]).rank() == 1


def test_binomial():
    assert [binomial(4, k) for k in range(-1, 6)] == [0, 1, 4, 6, 4, 1, 0]
