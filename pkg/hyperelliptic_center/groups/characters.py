"""Explicit irreducible representations and exact character tables."""

from __future__ import annotations

import functools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from ..field import CycloElem, cosine_label, root_of_unity, zero
from ..linalg import (
    InternalConsistencyError,
    Matrix,
    from_rows,
    identity,
    is_identity,
    matmul,
    matpow,
    nullspace,
    trace,
)
from .elements import Family, FiniteGroup, GroupElement, Word, conjugacy_classes

logger = logging.getLogger(__name__)


class NotACharacterError(ValueError):
    """An inner product that should be a multiplicity is not a nonnegative integer."""

    def __init__(self, message: str, diagnostics: Optional[dict] = None):
        super().__init__(message)
        self.diagnostics = diagnostics or {}


@dataclass(frozen=True)
class Irrep:
    label: str
    dim: int
    x: Optional[Matrix]
    y: Matrix
    aliases: tuple[str, ...] = field(default=())


def _diag(*entries: CycloElem) -> Matrix:
    size = len(entries)
    return tuple(tuple(entries[i] if i == j else zero() for j in range(size)) for i in range(size))


def _one_dim(label: str, x: Optional[CycloElem | int], y: CycloElem | int, *aliases: str) -> Irrep:
    return Irrep(
        label,
        1,
        None if x is None else from_rows([[x]]),
        from_rows([[y]]),
        tuple(aliases),
    )


SWAP: Matrix = from_rows([[0, 1], [1, 0]])


def u_two_dim(n: int, h: int) -> Irrep:
    """R_h of U_n: x -> swap, y -> diag(z^h, (-1)^h z^-h) with z a primitive 2n-th root."""
    zeta = root_of_unity(2 * n, h)
    return Irrep(f"R_{h}", 2, SWAP, _diag(zeta, zeta.inverse() * (-1) ** h))


def _cyclic_irreps(m: int) -> list[Irrep]:
    return [_one_dim(f"chi_{r}", None, root_of_unity(m, r)) for r in range(m)]


def _dihedral_irreps(m: int) -> list[Irrep]:
    reps = [_one_dim("rho_1", 1, 1), _one_dim("rho_2", -1, 1)]
    if m % 2 == 0:
        reps += [_one_dim("rho_3", 1, -1), _one_dim("rho_4", -1, -1)]
    for h in range(1, (m - 1) // 2 + 1):
        zeta = root_of_unity(m, h)
        reps.append(Irrep(f"chi_{h}", 2, SWAP, _diag(zeta, zeta.inverse())))
    return reps


def _dicyclic_irreps(n: int) -> list[Irrep]:
    i = root_of_unity(4, 1)
    if n % 2 == 0:
        reps = [
            _one_dim("rho_1", 1, 1, "omega_0"),
            _one_dim("rho_2", -1, 1, "omega_1"),
            _one_dim("rho_3", 1, -1, "omega_2"),
            _one_dim("rho_4", -1, -1, "omega_3"),
        ]
    else:
        reps = [
            _one_dim("rho_1", 1, 1, "omega_0"),
            _one_dim("rho_2", -1, 1),
            _one_dim("rho_3", i, -1, "omega_2"),
            _one_dim("rho_4", -i, -1, "omega_3"),
        ]
    for h in range(1, n):
        zeta = root_of_unity(2 * n, h)
        if h % 2 == 0:
            alias = f"sigma_{h}"
        else:
            alias = f"tau_{h}" if n % 2 == 0 else f"gamma_{h}"
        x = from_rows([[0, (-1) ** h], [1, 0]])
        reps.append(Irrep(f"chi_{h}", 2, x, _diag(zeta, zeta.inverse()), (alias,)))
    return reps


def _u_irreps(n: int) -> list[Irrep]:
    i = root_of_unity(4, 1)
    reps = [
        _one_dim("rho_1", 1, 1),
        _one_dim("rho_2", 1, -1),
        _one_dim("rho_3", -1, -1),
        _one_dim("rho_4", -1, 1),
    ]
    if n % 4 == 2:
        reps += [
            _one_dim("rho_5", 1, i),
            _one_dim("rho_6", 1, -i),
            _one_dim("rho_7", -1, -i),
            _one_dim("rho_8", -1, i),
        ]
    hs = list(range(2, n - 1, 2))
    hs += [h for h in range(1, n, 2) if 2 * h < n]
    hs += [h for h in range(n + 1, 2 * n, 2) if 2 * h < 3 * n]
    return reps + [u_two_dim(n, h) for h in hs]


@functools.lru_cache(maxsize=None)
def irreps(group: FiniteGroup) -> tuple[Irrep, ...]:
    builders = {
        Family.CYCLIC: _cyclic_irreps,
        Family.DIHEDRAL: _dihedral_irreps,
        Family.DICYCLIC: _dicyclic_irreps,
        Family.U: _u_irreps,
    }
    reps = builders[group.family](group.param)
    logger.debug("%s: %d irreducible representations", group.name, len(reps))
    return tuple(reps)


def rep_matrix(group: FiniteGroup, rep: Irrep, g: GroupElement) -> Matrix:
    y_part = matpow(rep.y, g.power)
    if not g.flip:
        return y_part
    if rep.x is None:
        raise InternalConsistencyError(f"{rep.label} has no image for x")
    return matmul(rep.x, y_part)


def evaluate_word(x: Optional[Matrix], y: Matrix, word: Word) -> Matrix:
    result = identity(len(y))
    for gen, exponent in word:
        base = x if gen == "x" else y
        if base is None:
            raise InternalConsistencyError("Word uses x but no image for x was given")
        result = matmul(result, matpow(base, exponent))
    return result


def satisfies_presentation(group: FiniteGroup, x: Optional[Matrix], y: Matrix) -> bool:
    return all(is_identity(evaluate_word(x, y, w)) for w in group.relators())


@dataclass(frozen=True)
class CharacterTable:
    group: FiniteGroup
    classes: tuple
    irreps: tuple[Irrep, ...]
    # values[p][c] is the character of irreps[p] on classes[c].
    values: tuple[tuple[CycloElem, ...], ...]

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(c.size for c in self.classes)

    def index(self, label: str) -> int:
        for p, rep in enumerate(self.irreps):
            if rep.label == label or label in rep.aliases:
                return p
        raise KeyError(label)

    def labels(self) -> list[str]:
        return [rep.label for rep in self.irreps]

    def as_dict(self) -> dict:
        return {
            "group": self.group.name,
            "alias": self.group.alias,
            "order": self.group.order,
            "classes": [
                {
                    "representative": c.representative.label(),
                    "size": c.size,
                    "members": [m.label() for m in c.members],
                }
                for c in self.classes
            ],
            "irreps": [
                {"label": r.label, "dim": r.dim, "aliases": list(r.aliases)} for r in self.irreps
            ],
            "values": [[v.as_dict() for v in row] for row in self.values],
            "display": [[_display(v) for v in row] for row in self.values],
        }


def _display(value: CycloElem) -> str:
    return cosine_label(value) or value.label()


@functools.lru_cache(maxsize=None)
def character_table(group: FiniteGroup) -> CharacterTable:
    classes = conjugacy_classes(group)
    reps = irreps(group)
    if len(reps) != len(classes):
        raise InternalConsistencyError(
            f"{group.name}: {len(reps)} irreps for {len(classes)} classes"
        )
    if sum(r.dim**2 for r in reps) != group.order:
        raise InternalConsistencyError(f"{group.name}: dimensions do not add up to the order")
    for rep in reps:
        if not satisfies_presentation(group, rep.x, rep.y):
            raise InternalConsistencyError(f"{group.name}: {rep.label} breaks a relation")
    values = []
    for rep in reps:
        row = []
        for c in classes:
            value = trace(rep_matrix(group, rep, c.representative))
            row.append(value)
        values.append(tuple(row))
    return CharacterTable(group, classes, reps, tuple(values))


def is_class_function(group: FiniteGroup, rep: Irrep) -> bool:
    for c in conjugacy_classes(group):
        first = trace(rep_matrix(group, rep, c.representative))
        if any(trace(rep_matrix(group, rep, g)) != first for g in c.members):
            return False
    return True


def _inner(table: CharacterTable, a: Sequence[CycloElem], b: Sequence[CycloElem]) -> CycloElem:
    total = zero()
    for size, u, v in zip(table.sizes, a, b):
        total = total + u * v.conjugate() * size
    return total * Fraction(1, table.group.order)


def orthogonality_holds(table: CharacterTable) -> bool:
    """Row and column orthogonality, exactly."""
    k = len(table.irreps)
    for p in range(k):
        for q in range(k):
            if _inner(table, table.values[p], table.values[q]) != int(p == q):
                return False
    for c in range(k):
        for d in range(k):
            total = zero()
            for p in range(k):
                total = total + table.values[p][c] * table.values[p][d].conjugate()
            expected = Fraction(table.group.order, table.sizes[c]) if c == d else 0
            if total != expected:
                return False
    return True


def inverse_character_matrix(table: CharacterTable) -> Matrix:
    """Rows indexed by classes: |C| conj(chi(C)) / |G|, so values * result = I."""
    order = table.group.order
    return tuple(
        tuple(
            table.values[p][c].conjugate() * Fraction(table.sizes[c], order)
            for p in range(len(table.irreps))
        )
        for c in range(len(table.classes))
    )


def multiplicity_inner_product(
    table: CharacterTable, chi: Sequence[CycloElem | int], require_integral: bool = True
) -> tuple[Fraction, ...]:
    """<chi, chi_pi> for every irrep pi, in table order."""
    values = [c if isinstance(c, CycloElem) else CycloElem.rational(c) for c in chi]
    if len(values) != len(table.classes):
        raise ValueError(
            f"Class function has {len(values)} values for {len(table.classes)} classes"
        )
    result = []
    for rep, row in zip(table.irreps, table.values):
        m = _inner(table, values, row)
        diagnostics = {
            "group": table.group.name,
            "irrep": rep.label,
            "value": m.label(),
            "class_sizes": list(table.sizes),
            "chi": [v.label() for v in values],
        }
        if not m.is_rational():
            raise NotACharacterError(f"Multiplicity of {rep.label} is irrational: {m}", diagnostics)
        q = m.to_fraction()
        if require_integral and (q.denominator != 1 or q < 0):
            raise NotACharacterError(f"Multiplicity of {rep.label} is {q}", diagnostics)
        result.append(q)
    return tuple(result)


def regular_character(group: FiniteGroup) -> tuple[CycloElem, ...]:
    return tuple(
        CycloElem.rational(group.order if c.representative == group.identity else 0)
        for c in conjugacy_classes(group)
    )


def intertwiner(
    a: tuple[Optional[Matrix], Matrix], b: tuple[Optional[Matrix], Matrix]
) -> Optional[Matrix]:
    """A nonzero T with T A(g) = B(g) T on both generators, if one exists.

    The T found is invertible when both sides are irreducible of equal dimension.
    """
    dim_a, dim_b = len(a[1]), len(b[1])
    if dim_a != dim_b:
        return None
    d = dim_a
    rows = []
    for ga, gb in zip(a, b):
        if ga is None or gb is None:
            continue
        # (T A)_{ij} - (B T)_{ij} = sum_k T_ik A_kj - B_ik T_kj over unknowns T_pq.
        for i in range(d):
            for j in range(d):
                row = [zero()] * (d * d)
                for k in range(d):
                    row[i * d + k] = row[i * d + k] + ga[k][j]
                    row[k * d + j] = row[k * d + j] - gb[i][k]
                rows.append(tuple(row))
    basis = nullspace(tuple(rows))
    if not basis:
        return None
    vec = basis[0]
    return tuple(tuple(vec[i * d + j] for j in range(d)) for i in range(d))


def equivalent(a: Irrep, b: Irrep) -> bool:
    t = intertwiner((a.x, a.y), (b.x, b.y))
    return t is not None and _invertible(t)


def _invertible(t: Matrix) -> bool:
    if len(t) == 1:
        return bool(t[0][0])
    return bool(t[0][0] * t[1][1] - t[0][1] * t[1][0])


__all__ = [
    "CharacterTable",
    "Irrep",
    "NotACharacterError",
    "SWAP",
    "character_table",
    "equivalent",
    "evaluate_word",
    "intertwiner",
    "inverse_character_matrix",
    "irreps",
    "is_class_function",
    "multiplicity_inner_product",
    "orthogonality_holds",
    "regular_character",
    "rep_matrix",
    "satisfies_presentation",
    "u_two_dim",
]
