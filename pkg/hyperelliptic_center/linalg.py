"""Exact matrices over cyclotomic fields and Gaussian elimination."""

from __future__ import annotations

from typing import Hashable, Sequence, TypeVar

from .field import CycloElem, FieldDivisionByZero, one, zero

Matrix = tuple[tuple[CycloElem, ...], ...]
Key = TypeVar("Key", bound=Hashable)


class InternalConsistencyError(RuntimeError):
    """A computed object violated an identity that holds for every valid input."""


class SingularSystemError(InternalConsistencyError):
    pass


def identity(size: int) -> Matrix:
    return tuple(tuple(one() if i == j else zero() for j in range(size)) for i in range(size))


def from_rows(rows: Sequence[Sequence[CycloElem | int]]) -> Matrix:
    return tuple(
        tuple(x if isinstance(x, CycloElem) else CycloElem.rational(x) for x in row)
        for row in rows
    )


def from_columns(columns: Sequence[Sequence[CycloElem]]) -> Matrix:
    size = len(columns[0]) if columns else 0
    return tuple(tuple(col[i] for col in columns) for i in range(size))


def matmul(a: Matrix, b: Matrix) -> Matrix:
    cols = len(b[0]) if b else 0
    out = []
    for row in a:
        acc = [zero()] * cols
        for k, x in enumerate(row):
            if not x:
                continue
            for j, y in enumerate(b[k]):
                if y:
                    acc[j] = acc[j] + x * y
        out.append(tuple(acc))
    return tuple(out)


def matpow(a: Matrix, exponent: int) -> Matrix:
    if exponent < 0:
        return matpow(inverse(a), -exponent)
    result = identity(len(a))
    base = a
    while exponent:
        if exponent & 1:
            result = matmul(result, base)
        exponent >>= 1
        if exponent:
            base = matmul(base, base)
    return result


def trace(a: Matrix) -> CycloElem:
    total = zero()
    for i, row in enumerate(a):
        total = total + row[i]
    return total


def equal(a: Matrix, b: Matrix) -> bool:
    return len(a) == len(b) and all(
        len(r) == len(s) and all(x == y for x, y in zip(r, s)) for r, s in zip(a, b)
    )


def is_identity(a: Matrix) -> bool:
    return equal(a, identity(len(a)))


def submatrix(a: Matrix, indices: Sequence[int]) -> Matrix:
    return tuple(tuple(a[i][j] for j in indices) for i in indices)


def inverse(a: Matrix) -> Matrix:
    """Gauss-Jordan inverse; raises SingularSystemError for singular input."""
    size = len(a)
    rows = [
        list(row) + [one() if i == j else zero() for j in range(size)] for i, row in enumerate(a)
    ]
    for col in range(size):
        pivot = next((r for r in range(col, size) if rows[r][col]), None)
        if pivot is None:
            raise SingularSystemError("Matrix is singular")
        rows[col], rows[pivot] = rows[pivot], rows[col]
        inv = rows[col][col].inverse()
        rows[col] = [x * inv for x in rows[col]]
        for r in range(size):
            factor = rows[r][col]
            if r != col and factor:
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[col])]
    return tuple(tuple(row[size:]) for row in rows)


def solve(a: Matrix, b: Sequence[CycloElem]) -> tuple[CycloElem, ...]:
    """Solve a x = b for square nonsingular a."""
    size = len(a)
    rows = [list(row) + [b[i]] for i, row in enumerate(a)]
    for col in range(size):
        pivot = next((r for r in range(col, size) if rows[r][col]), None)
        if pivot is None:
            raise SingularSystemError(f"Singular system at column {col}")
        rows[col], rows[pivot] = rows[pivot], rows[col]
        inv = rows[col][col].inverse()
        rows[col] = [x * inv for x in rows[col]]
        for r in range(size):
            factor = rows[r][col]
            if r != col and factor:
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[col])]
    return tuple(row[size] for row in rows)


def nullspace(a: Matrix) -> list[tuple[CycloElem, ...]]:
    """Basis of {x : a x = 0}."""
    if not a:
        return []
    cols = len(a[0])
    rows = [list(row) for row in a]
    pivots: list[int] = []
    r = 0
    for col in range(cols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = rows[r][col].inverse()
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            factor = rows[i][col]
            if i != r and factor:
                rows[i] = [x - factor * y for x, y in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    basis = []
    for free in (c for c in range(cols) if c not in pivots):
        vec = [zero()] * cols
        vec[free] = one()
        for i, pc in enumerate(pivots):
            vec[pc] = -rows[i][free]
        basis.append(tuple(vec))
    return basis


def eliminate(
    relations: Sequence[dict[Key, CycloElem]], pivot_order: Sequence[Key]
) -> dict[Key, dict[Key, CycloElem]]:
    """Reduced row echelon form of sparse relations.

    Pivots are chosen in ``pivot_order``; each returned row has coefficient 1 at
    its pivot and 0 at every other pivot. Keys never used as pivots are absent
    from the result.
    """
    pending = [{k: v for k, v in rel.items() if v} for rel in relations]
    reduced: dict[Key, dict[Key, CycloElem]] = {}
    for key in pivot_order:
        idx = next((i for i, rel in enumerate(pending) if key in rel), None)
        if idx is None:
            continue
        row = pending.pop(idx)
        inv = row[key].inverse()
        row = {k: v * inv for k, v in row.items()}
        for i, rel in enumerate(pending):
            if key in rel:
                pending[i] = _axpy(rel, row, -rel[key])
        for pk, prow in reduced.items():
            if key in prow:
                reduced[pk] = _axpy(prow, row, -prow[key])
        reduced[key] = row
    return reduced


def reduce_vector(
    vector: dict[Key, CycloElem], reduced: dict[Key, dict[Key, CycloElem]]
) -> dict[Key, CycloElem]:
    out = {k: v for k, v in vector.items() if v}
    for key, row in reduced.items():
        factor = out.get(key)
        if factor:
            out = _axpy(out, row, -factor)
    return out


def _axpy(
    y: dict[Key, CycloElem], x: dict[Key, CycloElem], factor: CycloElem
) -> dict[Key, CycloElem]:
    out = dict(y)
    for k, v in x.items():
        value = out.get(k, zero()) + factor * v
        if value:
            out[k] = value
        else:
            out.pop(k, None)
    return out


__all__ = [
    "FieldDivisionByZero",
    "InternalConsistencyError",
    "Matrix",
    "SingularSystemError",
    "eliminate",
    "equal",
    "from_columns",
    "from_rows",
    "identity",
    "inverse",
    "is_identity",
    "matmul",
    "matpow",
    "nullspace",
    "reduce_vector",
    "solve",
    "submatrix",
    "trace",
]
