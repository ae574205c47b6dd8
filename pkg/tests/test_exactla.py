from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from rigdim.exactla import (
    QQ,
    Coordinates,
    FieldSpec,
    Matrix,
    complement_basis,
    kernel,
    rank_of_columns,
    reduce,
    solve,
)

F7 = FieldSpec.prime(7)


def matrices(field, max_dim=5):
    entries = st.integers(-4, 4) if field.p == 0 else st.integers(0, field.p - 1)
    return st.integers(1, max_dim).flatmap(
        lambda r: st.integers(1, max_dim).flatmap(
            lambda c: st.lists(st.lists(entries, min_size=c, max_size=c), min_size=r, max_size=r)
        )
    ).map(lambda rows: Matrix(field, rows))


def test_field_parse_and_coercion():
    assert FieldSpec.parse("Q") == QQ
    assert FieldSpec.parse("F7") == F7
    assert QQ("-3/2") == Fraction(-3, 2)
    assert F7("1/2") == 4
    with pytest.raises(TypeError):
        QQ(0.5)
    with pytest.raises(ValueError):
        FieldSpec.parse("F6")


@settings(max_examples=60, deadline=None)
@given(matrices(QQ))
def test_rank_nullity_q(m):
    assert reduce(m).rank + kernel(m).ncols == m.ncols
    assert (m @ kernel(m)).is_zero()


@settings(max_examples=60, deadline=None)
@given(matrices(F7))
def test_rank_nullity_fp(m):
    assert m.rank() + kernel(m).ncols == m.ncols
    assert (m @ kernel(m)).is_zero()


@settings(max_examples=40, deadline=None)
@given(matrices(QQ, 4))
def test_inverse_roundtrip(m):
    if m.nrows == m.ncols and m.is_invertible():
        assert m @ m.inverse() == Matrix.identity(QQ, m.nrows)


@settings(max_examples=40, deadline=None)
@given(matrices(F7, 4), st.integers(0, 6))
def test_solve_consistent_systems(a, k):
    x = Matrix(F7, [[(i + k * j) % 7 for j in range(2)] for i in range(a.ncols)])
    b = a @ x
    y = solve(a, b)
    assert y is not None and a @ y == b


def test_solve_inconsistent():
    a = Matrix(QQ, [[1, 0], [0, 0]])
    b = Matrix(QQ, [[0], [1]])
    assert solve(a, b) is None


def test_complement_and_coordinates():
    span = [[1, 1, 0], [0, 1, 1]]
    comp = complement_basis(QQ, span, 3)
    assert len(comp) == 1
    basis = span + [[1 if j == comp[0] else 0 for j in range(3)]]
    assert rank_of_columns(QQ, basis, 3) == 3
    c = Coordinates(QQ, span, 3)
    assert c([2, 5, 3]) == [2, 3]
    with pytest.raises(ValueError):
        c([1, 0, 0])
