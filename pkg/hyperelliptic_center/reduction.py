"""Reduction of differentials f dt + g u dt to the basis w_0, ..., w_2n of Omega_R/dR.

w_0 is the class of t^-1 dt and w_i the class of t^-i u dt. Every relation used here
comes from the exact forms d(t^b u^3) = (b t^(b-1) p + 3/2 t^b p') u dt, whose
coefficient at t^(b+k-1) is a_k (2b + 3k) / 2.
"""

from __future__ import annotations

import functools
import logging
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping, Optional

from .curve import HyperellipticCurve
from .field import CycloElem, zero
from .linalg import InternalConsistencyError, eliminate, reduce_vector

logger = logging.getLogger(__name__)

# Window padding for the elimination oracle; windows are rounded to this step so
# nearby forms share one eliminated system.
WINDOW_STEP = 8


class WindowExhaustedError(InternalConsistencyError):
    pass


@dataclass(frozen=True)
class LaurentPoly:
    """Finitely supported map exponent -> coefficient, sorted, with no zero entries."""

    terms: tuple[tuple[int, CycloElem], ...] = ()

    @classmethod
    def from_mapping(cls, mapping: Mapping[int, CycloElem | int | Fraction]) -> LaurentPoly:
        items = []
        for e in sorted(mapping):
            c = mapping[e]
            if not isinstance(c, CycloElem):
                c = CycloElem.rational(c)
            if c:
                items.append((e, c))
        return cls(tuple(items))

    @classmethod
    def monomial(cls, exponent: int, coeff: CycloElem | int | Fraction = 1) -> LaurentPoly:
        return cls.from_mapping({exponent: coeff})

    def as_mapping(self) -> dict[int, CycloElem]:
        return dict(self.terms)

    def coefficient(self, exponent: int) -> CycloElem:
        return self.as_mapping().get(exponent, zero())

    def __iter__(self) -> Iterator[tuple[int, CycloElem]]:
        return iter(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    @property
    def min_exponent(self) -> Optional[int]:
        return self.terms[0][0] if self.terms else None

    @property
    def max_exponent(self) -> Optional[int]:
        return self.terms[-1][0] if self.terms else None

    def __add__(self, other: LaurentPoly) -> LaurentPoly:
        acc = self.as_mapping()
        for e, c in other:
            acc[e] = acc.get(e, zero()) + c
        return LaurentPoly.from_mapping(acc)

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly(tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other: LaurentPoly) -> LaurentPoly:
        return self + (-other)

    def __mul__(self, other: LaurentPoly) -> LaurentPoly:
        acc: dict[int, CycloElem] = {}
        for e1, c1 in self:
            for e2, c2 in other:
                acc[e1 + e2] = acc.get(e1 + e2, zero()) + c1 * c2
        return LaurentPoly.from_mapping(acc)

    def scale(self, factor: CycloElem | int | Fraction) -> LaurentPoly:
        return LaurentPoly.from_mapping({e: c * factor for e, c in self.terms})

    def shift(self, by: int) -> LaurentPoly:
        return LaurentPoly(tuple((e + by, c) for e, c in self.terms))

    def derivative(self) -> LaurentPoly:
        return LaurentPoly.from_mapping({e - 1: c * e for e, c in self.terms})

    def substitute_scaled(self, scale: CycloElem, exponent: int) -> LaurentPoly:
        """Image under t -> scale * t^exponent."""
        acc: dict[int, CycloElem] = {}
        for e, c in self.terms:
            key = e * exponent
            acc[key] = acc.get(key, zero()) + c * scale**e
        return LaurentPoly.from_mapping(acc)


def p_poly(curve: HyperellipticCurve) -> LaurentPoly:
    return LaurentPoly.from_mapping({k: curve.a(k) for k in range(1, 2 * curve.n + 2)})


@dataclass(frozen=True)
class DifferentialForm:
    """f(t) dt + g(t) u dt."""

    dt_part: LaurentPoly = LaurentPoly()
    udt_part: LaurentPoly = LaurentPoly()

    @classmethod
    def with_du(
        cls, dt: LaurentPoly, udt: LaurentPoly, du: LaurentPoly = LaurentPoly()
    ) -> DifferentialForm:
        """Fold a du-part into u dt using t^a du = -a t^(a-1) u dt modulo d(t^a u)."""
        folded = LaurentPoly.from_mapping({e - 1: -c * e for e, c in du})
        return cls(dt, udt + folded)

    @classmethod
    def exact(cls, f: LaurentPoly, g: LaurentPoly = LaurentPoly()) -> DifferentialForm:
        """d(f + g u) = f' dt + g' u dt + g du."""
        return cls.with_du(f.derivative(), g.derivative(), g)

    def __add__(self, other: DifferentialForm) -> DifferentialForm:
        return DifferentialForm(self.dt_part + other.dt_part, self.udt_part + other.udt_part)

    def scale(self, factor: CycloElem | int | Fraction) -> DifferentialForm:
        return DifferentialForm(self.dt_part.scale(factor), self.udt_part.scale(factor))


def basis_form(curve: HyperellipticCurve, i: int) -> DifferentialForm:
    """Representative of w_i."""
    if i == 0:
        return DifferentialForm(dt_part=LaurentPoly.monomial(-1))
    if not 1 <= i <= 2 * curve.n:
        raise ValueError(f"Basis index {i} out of range 0..{2 * curve.n}")
    return DifferentialForm(udt_part=LaurentPoly.monomial(-i))


@dataclass(frozen=True)
class DifferentialClass:
    """Coordinates over w_0, ..., w_2n."""

    coords: tuple[CycloElem, ...]

    @classmethod
    def zero(cls, n: int) -> DifferentialClass:
        return cls((zero(),) * (2 * n + 1))

    @classmethod
    def unit(cls, n: int, i: int) -> DifferentialClass:
        coords = [zero()] * (2 * n + 1)
        coords[i] = CycloElem.rational(1)
        return cls(tuple(coords))

    def __add__(self, other: DifferentialClass) -> DifferentialClass:
        return DifferentialClass(tuple(x + y for x, y in zip(self.coords, other.coords)))

    def scale(self, factor: CycloElem | int | Fraction) -> DifferentialClass:
        return DifferentialClass(tuple(x * factor for x in self.coords))

    def is_zero(self) -> bool:
        return not any(self.coords)


@dataclass(frozen=True)
class PQTable:
    """Rows of P (t^k u dt, k >= -2n) or Q (t^-m u dt, m >= 1) over w_1..w_2n."""

    kind: str
    first: int
    rows: tuple[tuple[CycloElem, ...], ...]

    def row(self, index: int) -> tuple[CycloElem, ...]:
        return self.rows[index - self.first]

    @property
    def last(self) -> int:
        return self.first + len(self.rows) - 1

    def entry(self, index: int, i: int) -> CycloElem:
        """P_{k,i} for -2n <= i <= -1, or Q_{m,i} with the same column convention."""
        return self.row(index)[-i - 1]

    def as_dict(self) -> dict:
        return {
            "kind": self.kind,
            "first": self.first,
            "rows": [[c.as_dict() for c in row] for row in self.rows],
        }


def relation(curve: HyperellipticCurve, b: int) -> LaurentPoly:
    """u dt coefficients of 2 d(t^b u^3): sum_k a_k (2b + 3k) t^(b+k-1)."""
    return LaurentPoly.from_mapping(
        {b + k - 1: curve.a(k) * (2 * b + 3 * k) for k in range(1, 2 * curve.n + 2)}
    )


def exact_cubic_form(curve: HyperellipticCurve, b: int) -> DifferentialForm:
    """d(t^b u^3) with u du = p'/2 dt substituted."""
    tb_p = p_poly(curve).shift(b)
    half_p_prime = p_poly(curve).derivative().shift(b).scale(Fraction(1, 2))
    return DifferentialForm(udt_part=tb_p.derivative() + half_p_prime)


class ReductionTables:
    """Lazily extended P and Q rows for one curve."""

    def __init__(self, curve: HyperellipticCurve):
        self.curve = curve
        r = curve.rank
        unit = [tuple(CycloElem.rational(int(i == j)) for j in range(r)) for i in range(r)]
        # P rows start at k = -2n, whose class is w_2n.
        self._p: list[tuple[CycloElem, ...]] = list(reversed(unit))
        # Q rows start at m = 1, whose class is w_1.
        self._q: list[tuple[CycloElem, ...]] = list(unit)
        self._lock = threading.Lock()

    def p_row(self, k: int) -> tuple[CycloElem, ...]:
        r = self.curve.rank
        if k < -r:
            raise ValueError(f"P rows start at {-r}, got {k}")
        with self._lock:
            while len(self._p) <= k + r:
                self._extend_p()
            return self._p[k + r]

    def q_row(self, m: int) -> tuple[CycloElem, ...]:
        if m < 1:
            raise ValueError(f"Q rows start at 1, got {m}")
        with self._lock:
            while len(self._q) < m:
                self._extend_q()
            return self._q[m - 1]

    def _extend_p(self) -> None:
        r = self.curve.rank
        k = len(self._p) - r
        acc = [zero()] * r
        for j in range(1, r + 1):
            a_j = self.curve.a(j)
            if not a_j:
                continue
            factor = a_j * (3 * j + 2 * k - 2 * r)
            if not factor:
                continue
            prev = self._p[k - r + j - 1 + r]
            acc = [x + factor * y for x, y in zip(acc, prev)]
        divisor = Fraction(-1, 2 * k + r + 3)
        self._p.append(tuple(x * divisor for x in acc))
        logger.debug("Extended P table to k=%d", k)

    def _extend_q(self) -> None:
        r = self.curve.rank
        m = len(self._q) + 1
        acc = [zero()] * r
        for j in range(2, r + 2):
            a_j = self.curve.a(j)
            if not a_j:
                continue
            factor = a_j * (3 * j - 2 * m)
            if not factor:
                continue
            prev = self._q[m - j]
            acc = [x + factor * y for x, y in zip(acc, prev)]
        divisor = (self.curve.a(1) * (2 * m - 3)).inverse()
        self._q.append(tuple(x * divisor for x in acc))
        logger.debug("Extended Q table to m=%d", m)

    def udt_class(self, exponent: int) -> tuple[CycloElem, ...]:
        """Coordinates of t^exponent u dt over w_1..w_2n."""
        if exponent >= -self.curve.rank:
            return self.p_row(exponent)
        return self.q_row(-exponent)


@functools.lru_cache(maxsize=64)
def tables_for(curve: HyperellipticCurve) -> ReductionTables:
    return ReductionTables(curve)


def p_table(curve: HyperellipticCurve, m_max: int) -> PQTable:
    if m_max < 0:
        raise ValueError(f"m_max must be nonnegative, got {m_max}")
    tables = tables_for(curve)
    first = -curve.rank
    return PQTable("P", first, tuple(tables.p_row(k) for k in range(first, m_max + 1)))


def q_table(curve: HyperellipticCurve, m_max: int) -> PQTable:
    if m_max < 1:
        raise ValueError(f"m_max must be positive, got {m_max}")
    tables = tables_for(curve)
    return PQTable("Q", 1, tuple(tables.q_row(m) for m in range(1, m_max + 1)))


def reduce_form(curve: HyperellipticCurve, form: DifferentialForm) -> DifferentialClass:
    """Coordinates of a form through the P and Q recursions."""
    tables = tables_for(curve)
    coords = [zero()] * (curve.rank + 1)
    coords[0] = form.dt_part.coefficient(-1)
    for e, c in form.udt_part:
        for i, x in enumerate(tables.udt_class(e)):
            if x:
                coords[i + 1] = coords[i + 1] + c * x
    return DifferentialClass(tuple(coords))


@functools.lru_cache(maxsize=32)
def _oracle_system(
    curve: HyperellipticCurve, low: int, high: int
) -> dict[tuple[str, int], dict[tuple[str, int], CycloElem]]:
    r = curve.rank
    relations: list[dict[tuple[str, int], CycloElem]] = []
    for a in range(low + 1, high + 2):
        if a:
            # d(t^a) = a t^(a-1) dt
            relations.append({("dt", a - 1): CycloElem.rational(a)})
    for b in range(low, high - r + 1):
        relations.append({("u", e): c for e, c in relation(curve, b)})
    pivots = [("dt", e) for e in range(low, high + 1) if e != -1]
    pivots += [("u", e) for e in range(high, -1, -1)]
    pivots += [("u", e) for e in range(low, -r)]
    reduced = eliminate(relations, pivots)
    missing = [key for key in pivots if key not in reduced]
    if missing:
        raise WindowExhaustedError(f"No relation pivots on {missing[:3]} in window [{low}, {high}]")
    logger.debug("Eliminated oracle window [%d, %d] with %d relations", low, high, len(relations))
    return reduced


def reduce_oracle(curve: HyperellipticCurve, form: DifferentialForm) -> DifferentialClass:
    """Coordinates of a form by Gaussian elimination over the exact relations."""
    r = curve.rank
    exponents = [e for e, _ in form.dt_part] + [e for e, _ in form.udt_part]
    low = min(exponents + [-r])
    high = max(exponents + [-1])
    low = -WINDOW_STEP * (-low // WINDOW_STEP + 1)
    high = WINDOW_STEP * (high // WINDOW_STEP + 1)
    reduced = _oracle_system(curve, low, high)

    vector: dict[tuple[str, int], CycloElem] = {("dt", e): c for e, c in form.dt_part}
    vector.update({("u", e): c for e, c in form.udt_part})
    remainder = reduce_vector(vector, reduced)

    coords = [zero()] * (r + 1)
    for (kind, e), c in remainder.items():
        if kind == "dt" and e == -1:
            coords[0] = c
        elif kind == "u" and -r <= e <= -1:
            coords[-e] = c
        else:
            raise WindowExhaustedError(f"Unreduced monomial {kind} t^{e}")
    return DifferentialClass(tuple(coords))
