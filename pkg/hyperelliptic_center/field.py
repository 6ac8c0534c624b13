"""Exact arithmetic in cyclotomic fields Q(zeta_M).

Elements are stored as coefficient vectors in the power basis 1, z, ..., z^(phi(M)-1),
reduced modulo the M-th cyclotomic polynomial, so equality is coefficient-wise.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from enum import Enum, auto
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

import mpmath
from sympy import cyclotomic_poly, factorint, totient

Scalar = Union[int, Fraction]


class FieldDivisionByZero(ZeroDivisionError):
    pass


class FieldOp(Enum):
    """Binary field operation.

    Examples:
        >>> FieldOp.from_str('MUL')
        FieldOp(mul)
    """

    ADD = auto()
    SUB = auto()
    MUL = auto()
    DIV = auto()

    @classmethod
    def from_str(cls, name: str):
        for member in cls:
            if member.name.lower() == name.lower():
                return member
        raise ValueError(f"Invalid field operation: {name}")

    def __str__(self):
        return self.name.lower()

    def __repr__(self):
        return f"FieldOp({self.name.lower()})"


@dataclass(frozen=True)
class FieldContext:
    order: int
    # Monic Phi_M, lowest degree first.
    modulus: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.modulus) - 1

    def reduce(self, raw: Sequence[Scalar]) -> tuple[Fraction, ...]:
        """Reduce a polynomial in zeta_M to canonical form.

        Exponents are first folded modulo M (zeta_M^M = 1), then the remainder modulo
        Phi_M is taken.
        """
        deg = self.degree
        folded = [Fraction(0)] * max(min(len(raw), self.order), deg)
        for j, c in enumerate(raw):
            if c:
                folded[j % self.order] += c
        for top in range(len(folded) - 1, deg - 1, -1):
            c = folded[top]
            if not c:
                continue
            shift = top - deg
            for i, m in enumerate(self.modulus):
                if m:
                    folded[shift + i] -= c * m
        folded += [Fraction(0)] * (deg - len(folded))
        return tuple(folded[:deg])


@functools.lru_cache(maxsize=None)
def field_context(order: int) -> FieldContext:
    if order < 1:
        raise ValueError(f"Field order must be positive, got {order}")
    coeffs = cyclotomic_poly(order, polys=True).all_coeffs()
    return FieldContext(order, tuple(int(c) for c in reversed(coeffs)))


@functools.lru_cache(maxsize=None)
def _trace_weight(m: int) -> Fraction:
    """Normalized trace of a primitive m-th root of unity: mu(m) / phi(m)."""
    factors = factorint(m)
    if any(e > 1 for e in factors.values()):
        return Fraction(0)
    return Fraction((-1) ** len(factors), int(totient(m)))


def _as_fraction(value: Scalar) -> Fraction:
    return value if isinstance(value, Fraction) else Fraction(value)


@dataclass(frozen=True, eq=False)
class CycloElem:
    """Element of Q(zeta_M) in canonical form.

    Binary operations accept ints and Fractions, and elements of other orders are
    promoted to the lcm of both orders.

    Examples:
        >>> root_of_unity(4, 1) * root_of_unity(4, 1) == -1
        True
        >>> root_of_unity(6, 1) + root_of_unity(6, 5) == 1
        True
    """

    order: int
    coeffs: tuple[Fraction, ...]

    @classmethod
    def rational(cls, value: Scalar, order: int = 1) -> CycloElem:
        ctx = field_context(order)
        return cls(order, (_as_fraction(value),) + (Fraction(0),) * (ctx.degree - 1))

    @property
    def context(self) -> FieldContext:
        return field_context(self.order)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def promote(self, order: int) -> CycloElem:
        if order == self.order:
            return self
        if order % self.order:
            raise ValueError(f"Cannot embed Q(zeta_{self.order}) in Q(zeta_{order})")
        if self.is_rational():
            return CycloElem.rational(self.coeffs[0], order)
        step = order // self.order
        raw = [Fraction(0)] * ((len(self.coeffs) - 1) * step + 1)
        for j, c in enumerate(self.coeffs):
            raw[j * step] = c
        return cyclo_new(field_context(order), raw)

    def conjugate(self) -> CycloElem:
        """Image under the field automorphism zeta_M -> zeta_M^-1."""
        if self.is_rational():
            return self
        raw = [Fraction(0)] * self.order
        for j, c in enumerate(self.coeffs):
            raw[(-j) % self.order] += c
        return cyclo_new(self.context, raw)

    def inverse(self) -> CycloElem:
        if not self:
            raise FieldDivisionByZero(f"Division by zero in Q(zeta_{self.order})")
        if self.is_rational():
            return CycloElem.rational(1 / self.coeffs[0], self.order)
        inv = _poly_inverse_mod(list(self.coeffs), list(map(Fraction, self.context.modulus)))
        return cyclo_new(self.context, inv)

    def normalized_trace(self) -> Fraction:
        """Tr(a) / [K:Q]; independent of the field the element is viewed in."""
        total = Fraction(0)
        for j, c in enumerate(self.coeffs):
            if c:
                total += c * _trace_weight(self.order // math.gcd(self.order, j))
        return total

    def label(self) -> str:
        if self.is_rational():
            return str(self.coeffs[0])
        terms = []
        for j, c in enumerate(self.coeffs):
            if not c:
                continue
            power = "" if j == 0 else (f"z{self.order}" if j == 1 else f"z{self.order}^{j}")
            if not power:
                terms.append(str(c))
            elif c == 1:
                terms.append(power)
            elif c == -1:
                terms.append(f"-{power}")
            else:
                terms.append(f"{c}*{power}")
        return " + ".join(terms).replace("+ -", "- ")

    def as_dict(self) -> dict:
        return {
            "order": self.order,
            "coeffs": [[str(c.numerator), str(c.denominator)] for c in self.coeffs],
        }

    @classmethod
    def from_dict(cls, obj: dict) -> CycloElem:
        raw = [Fraction(int(num), int(den)) for num, den in obj["coeffs"]]
        return cyclo_new(field_context(int(obj["order"])), raw)

    def _coerce(self, other: object) -> Optional[tuple[CycloElem, CycloElem]]:
        if isinstance(other, (int, Fraction)):
            return self, CycloElem.rational(other, self.order)
        if not isinstance(other, CycloElem):
            return None
        if other.order == self.order:
            return self, other
        order = math.lcm(self.order, other.order)
        return self.promote(order), other.promote(order)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        return pair[0].coeffs == pair[1].coeffs

    def __hash__(self) -> int:
        return hash(self.normalized_trace())

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __neg__(self) -> CycloElem:
        return CycloElem(self.order, tuple(-c for c in self.coeffs))

    def __add__(self, other: Scalar | CycloElem) -> CycloElem:
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return CycloElem(a.order, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    def __radd__(self, other: Scalar) -> CycloElem:
        return self + other

    def __sub__(self, other: Scalar | CycloElem) -> CycloElem:
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return CycloElem(a.order, tuple(x - y for x, y in zip(a.coeffs, b.coeffs)))

    def __rsub__(self, other: Scalar) -> CycloElem:
        return -self + other

    def __mul__(self, other: Scalar | CycloElem) -> CycloElem:
        if isinstance(other, (int, Fraction)):
            return CycloElem(self.order, tuple(c * other for c in self.coeffs))
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        if b.is_rational():
            return CycloElem(a.order, tuple(c * b.coeffs[0] for c in a.coeffs))
        if a.is_rational():
            return CycloElem(b.order, tuple(a.coeffs[0] * c for c in b.coeffs))
        raw = [Fraction(0)] * (2 * len(a.coeffs) - 1)
        for i, x in enumerate(a.coeffs):
            if not x:
                continue
            for j, y in enumerate(b.coeffs):
                if y:
                    raw[i + j] += x * y
        return cyclo_new(a.context, raw)

    def __rmul__(self, other: Scalar) -> CycloElem:
        return self * other

    def __truediv__(self, other: Scalar | CycloElem) -> CycloElem:
        if isinstance(other, (int, Fraction)):
            if not other:
                raise FieldDivisionByZero(f"Division of {self} by zero")
            return self * (1 / Fraction(other))
        if not isinstance(other, CycloElem):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other: Scalar) -> CycloElem:
        return self.inverse() * other

    def __pow__(self, exponent: int) -> CycloElem:
        base = self if exponent >= 0 else self.inverse()
        e = abs(exponent)
        result = CycloElem.rational(1, self.order)
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __repr__(self) -> str:
        return f"CycloElem({self.order}: {self.label()})"

    def __str__(self) -> str:
        return self.label()


def cyclo_new(ctx: FieldContext, raw: Iterable[Scalar]) -> CycloElem:
    return CycloElem(ctx.order, ctx.reduce([_as_fraction(c) for c in raw]))


def zero() -> CycloElem:
    return CycloElem.rational(0)


def one() -> CycloElem:
    return CycloElem.rational(1)


def root_of_unity(order: int, j: int) -> CycloElem:
    """Return zeta_M^j in canonical form.

    Examples:
        >>> root_of_unity(2, 1) == -1
        True
        >>> root_of_unity(12, 4) == root_of_unity(3, 1)
        True
    """
    ctx = field_context(order)
    raw = [0] * (j % order + 1)
    raw[j % order] = 1
    return cyclo_new(ctx, raw)


def field_arith(a: CycloElem, b: CycloElem, op: FieldOp) -> CycloElem:
    if op is FieldOp.ADD:
        return a + b
    if op is FieldOp.SUB:
        return a - b
    if op is FieldOp.MUL:
        return a * b
    return a / b


def multiplicative_order(order: int, j: int) -> int:
    return order // math.gcd(order, j)


def _rational_sqrt(q: Fraction) -> Optional[Fraction]:
    if q < 0:
        return None
    num = math.isqrt(q.numerator)
    den = math.isqrt(q.denominator)
    if num * num == q.numerator and den * den == q.denominator:
        return Fraction(num, den)
    return None


def try_sqrt(a: CycloElem) -> Optional[CycloElem]:
    """Square root of a rational square times a root of unity.

    The result lives in Q(zeta_M) or a field of twice that order. Anything else
    returns None.

    Examples:
        >>> try_sqrt(CycloElem.rational(4)) == 2
        True
        >>> try_sqrt(root_of_unity(3, 1)) == root_of_unity(6, 1)
        True
        >>> try_sqrt(1 + root_of_unity(5, 1)) is None
        True
    """
    if not a:
        return a
    if a.is_rational():
        q = a.to_fraction()
        root = _rational_sqrt(abs(q))
        if root is None:
            return None
        if q > 0:
            return CycloElem.rational(root, a.order)
        return root * root_of_unity(math.lcm(a.order, 4), 1)

    base = a.order if a.order % 2 == 0 else 2 * a.order
    step = root_of_unity(base, -1)
    current = a.promote(base)
    for j in range(base):
        if current.is_rational():
            root = _rational_sqrt(current.to_fraction())
            if root is not None:
                if j % 2 == 0:
                    return root * root_of_unity(base, j // 2)
                return root * root_of_unity(2 * base, j)
        current = current * step
    return None


def approx_complex(a: CycloElem, digits: int) -> tuple[mpmath.mpf, mpmath.mpf]:
    """Numerical value under zeta_M -> exp(2 pi i / M)."""
    with mpmath.workdps(digits + 5):
        total = mpmath.mpc(0)
        for j, c in enumerate(a.coeffs):
            if c:
                angle = mpmath.mpf(2 * j) / a.order
                total += mpmath.mpf(c.numerator) / c.denominator * mpmath.expjpi(angle)
        return +total.real, +total.imag


def cosine_label(a: CycloElem) -> Optional[str]:
    """Return '2cos(2pi*h/M)' when a equals zeta_M^h + zeta_M^-h for some h."""
    if a.is_rational():
        return None
    for h in range(1, a.order // 2 + 1):
        if root_of_unity(a.order, h) + root_of_unity(a.order, -h) == a:
            return f"2cos(2pi*{h}/{a.order})"
    return None


def _trim(poly: list[Fraction]) -> list[Fraction]:
    while len(poly) > 1 and not poly[-1]:
        poly.pop()
    return poly


def _poly_divmod(
    num: list[Fraction], den: list[Fraction]
) -> tuple[list[Fraction], list[Fraction]]:
    rem = list(num)
    quot = [Fraction(0)] * max(len(num) - len(den) + 1, 1)
    lead = den[-1]
    for shift in range(len(num) - len(den), -1, -1):
        c = rem[shift + len(den) - 1] / lead
        quot[shift] = c
        if c:
            for i, d in enumerate(den):
                rem[shift + i] -= c * d
    return _trim(quot), _trim(rem[: max(len(den) - 1, 1)])


def _poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    size = max(len(a), len(b))
    a = a + [Fraction(0)] * (size - len(a))
    b = b + [Fraction(0)] * (size - len(b))
    return _trim([x - y for x, y in zip(a, b)])


def _poly_inverse_mod(a: list[Fraction], modulus: list[Fraction]) -> list[Fraction]:
    """Extended Euclid: returns s with s*a = 1 mod modulus (modulus irreducible)."""
    r0, r1 = _trim(list(modulus)), _trim(list(a))
    s0, s1 = [Fraction(0)], [Fraction(1)]
    while len(r1) > 1 or r1[0]:
        quot, rem = _poly_divmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, _poly_sub(s0, _poly_mul(quot, s1))
    if len(r0) != 1:
        raise FieldDivisionByZero("Element is not invertible modulo the cyclotomic polynomial")
    return [c / r0[0] for c in s0]
