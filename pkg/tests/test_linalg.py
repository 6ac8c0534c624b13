from fractions import Fraction

import pytest

from hyperelliptic_center import linalg
from hyperelliptic_center.field import CycloElem, root_of_unity

i4 = root_of_unity(4, 1)

rotation = linalg.from_rows([[0, -1], [1, 0]])
upper = linalg.from_rows([[1, 2, 0], [0, 1, 3], [0, 0, 1]])


def test_matmul_and_identity():
    assert linalg.equal(linalg.matmul(rotation, linalg.identity(2)), rotation)
    assert linalg.equal(linalg.matmul(rotation, rotation), linalg.from_rows([[-1, 0], [0, -1]]))


@pytest.mark.parametrize("exponent", [0, 1, 3, 4, -1, -5])
def test_matpow_rotation(exponent: int):
    expected = linalg.identity(2)
    step = rotation if exponent >= 0 else linalg.inverse(rotation)
    for _ in range(abs(exponent)):
        expected = linalg.matmul(expected, step)
    assert linalg.equal(linalg.matpow(rotation, exponent), expected)
    assert linalg.is_identity(linalg.matpow(rotation, 4 * exponent))


def test_trace():
    assert linalg.trace(upper) == 3
    assert linalg.trace(linalg.from_rows([[i4, 0], [0, -i4]])) == 0


@pytest.mark.parametrize(
    "matrix",
    [
        upper,
        rotation,
        linalg.from_rows([[i4, 1], [2, Fraction(1, 3)]]),
        linalg.from_rows([[0, 1, 0], [0, 0, 1], [1, 0, 0]]),
    ],
)
def test_inverse(matrix):
    assert linalg.is_identity(linalg.matmul(matrix, linalg.inverse(matrix)))
    assert linalg.is_identity(linalg.matmul(linalg.inverse(matrix), matrix))


def test_inverse_singular():
    with pytest.raises(linalg.SingularSystemError):
        linalg.inverse(linalg.from_rows([[1, 2], [2, 4]]))


def test_singular_system_is_internal_error():
    assert issubclass(linalg.SingularSystemError, linalg.InternalConsistencyError)
    assert issubclass(linalg.InternalConsistencyError, RuntimeError)


def test_solve():
    a = linalg.from_rows([[2, 1], [1, 3]])
    x = linalg.solve(a, [CycloElem.rational(5), CycloElem.rational(10)])
    assert x == (1, 3)


def test_solve_singular():
    with pytest.raises(linalg.SingularSystemError):
        linalg.solve(linalg.from_rows([[1, 1], [1, 1]]), [CycloElem.rational(1)] * 2)


def test_nullspace():
    a = linalg.from_rows([[1, 1, 0], [0, 0, 1]])
    basis = linalg.nullspace(a)
    assert len(basis) == 1
    assert basis[0] == (-1, 1, 0)


def test_nullspace_full_rank_is_empty():
    assert linalg.nullspace(upper) == []


def test_from_columns_transposes():
    columns = [[CycloElem.rational(1), CycloElem.rational(2)], [CycloElem.rational(3), i4]]
    assert linalg.equal(linalg.from_columns(columns), linalg.from_rows([[1, 3], [2, i4]]))


def test_submatrix():
    assert linalg.equal(linalg.submatrix(upper, [1, 2]), linalg.from_rows([[1, 3], [0, 1]]))


def test_eliminate_and_reduce_vector():
    one = CycloElem.rational(1)
    relations = [
        {"a": one, "b": CycloElem.rational(2)},
        {"b": one, "c": CycloElem.rational(-1)},
    ]
    reduced = linalg.eliminate(relations, ["a", "b", "c"])
    assert set(reduced) == {"a", "b"}
    # a = -2b = -2c and b = c
    assert reduced["a"] == {"a": one, "c": CycloElem.rational(2)}
    assert reduced["b"] == {"b": one, "c": CycloElem.rational(-1)}
    remainder = linalg.reduce_vector({"a": one, "b": one}, reduced)
    assert remainder == {"c": CycloElem.rational(-1)}
