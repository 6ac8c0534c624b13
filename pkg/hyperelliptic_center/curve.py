"""Curves u^2 = p(t) with p(t) = t * prod(t - alpha_i)."""

from __future__ import annotations

import hashlib
import json
import logging
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .field import CycloElem, one, root_of_unity, zero
from .linalg import InternalConsistencyError

logger = logging.getLogger(__name__)


class InvalidCurveError(ValueError):
    pass


class DuplicateRootError(InvalidCurveError):
    pass


class ZeroRootError(InvalidCurveError):
    pass


class OddRootCountError(InvalidCurveError):
    pass


class RootCollisionError(DuplicateRootError):
    """Two normal-form parameters generate the same root."""


@dataclass(frozen=True)
class HyperellipticCurve:
    n: int
    field_order: int
    roots: tuple[CycloElem, ...]
    # a_1 .. a_{2n+1}; a_0 = 0 is implicit.
    coeffs: tuple[CycloElem, ...]

    def a(self, k: int) -> CycloElem:
        """Coefficient a_k of t^k in p(t); zero outside 1..2n+1."""
        if 1 <= k <= 2 * self.n + 1:
            return self.coeffs[k - 1]
        return zero()

    @property
    def rank(self) -> int:
        """Number of roots r = 2n, also the count of u-basis classes."""
        return 2 * self.n

    @cached_property
    def digest(self) -> str:
        payload = json.dumps([c.as_dict() for c in self.coeffs], sort_keys=True)
        return hashlib.sha256(payload.encode()).hexdigest()[:16]

    def label(self) -> str:
        terms = []
        for k in range(2 * self.n + 1, 0, -1):
            c = self.a(k)
            if not c:
                continue
            power = "t" if k == 1 else f"t^{k}"
            if c == 1:
                terms.append(power)
            elif c == -1:
                terms.append(f"-{power}")
            elif c.is_rational():
                terms.append(f"{c}*{power}")
            else:
                terms.append(f"({c})*{power}")
        return " + ".join(terms).replace("+ -", "- ")

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "field_order": self.field_order,
            "p": self.label(),
            "digest": self.digest,
            "roots": [r.as_dict() for r in self.roots],
            "coeffs": [c.as_dict() for c in self.coeffs],
        }


@dataclass(frozen=True)
class NormalFormSpec:
    """Roots c_i * xi^(2j) for i = 1..l, j = 1..k, with xi a primitive 2k-th root of unity."""

    k: int
    params: tuple[CycloElem, ...]

    @property
    def l(self) -> int:  # noqa: E743
        return len(self.params)

    @property
    def xi(self) -> CycloElem:
        return root_of_unity(2 * self.k, 1)

    def roots(self) -> list[CycloElem]:
        return [c * root_of_unity(self.k, j) for c in self.params for j in range(1, self.k + 1)]


def _expand(roots: Sequence[CycloElem]) -> list[CycloElem]:
    """Coefficients of t * prod(t - alpha), lowest degree first."""
    poly = [zero(), one()]
    for alpha in roots:
        shifted = [zero()] + poly
        scaled = [-alpha * c for c in poly] + [zero()]
        poly = [x + y for x, y in zip(shifted, scaled)]
    return poly


def _check_roots(roots: Sequence[CycloElem]) -> None:
    if len(roots) % 2 or not roots:
        raise OddRootCountError(f"Expected a positive even number of roots, got {len(roots)}")
    for i, alpha in enumerate(roots):
        if not alpha:
            raise ZeroRootError(f"Root {i + 1} is zero")
    for i in range(len(roots)):
        for j in range(i + 1, len(roots)):
            if roots[i] == roots[j]:
                raise DuplicateRootError(f"Roots {i + 1} and {j + 1} coincide: {roots[i]}")


def curve_from_roots(field_order: int, roots: Sequence[CycloElem]) -> HyperellipticCurve:
    """Build p(t) = t * prod(t - alpha_i) by exact expansion.

    The working field order is the lcm of the requested order, the orders the roots
    live in and 4n, so every candidate twist parameter is representable.
    """
    _check_roots(roots)
    n = len(roots) // 2
    order = math.lcm(field_order, 4 * n, *(r.order for r in roots))
    promoted = tuple(r.promote(order) for r in roots)
    coeffs = tuple(c.promote(order) for c in _expand(promoted)[1:])
    logger.debug("Built curve n=%d over Q(zeta_%d)", n, order)
    return HyperellipticCurve(n, order, promoted, coeffs)


def curve_normal_form(spec: NormalFormSpec) -> HyperellipticCurve:
    if spec.k < 1:
        raise InvalidCurveError(f"k must be positive, got {spec.k}")
    if (spec.k * spec.l) % 2 or not spec.params:
        raise OddRootCountError(f"l * k = {spec.l * spec.k} must be positive and even")
    for i, c in enumerate(spec.params):
        if not c:
            raise ZeroRootError(f"Parameter c_{i + 1} is zero")
    roots = spec.roots()
    try:
        _check_roots(roots)
    except DuplicateRootError as e:
        raise RootCollisionError(f"Normal-form roots collide: {e}") from e
    n = len(roots) // 2
    curve = curve_from_roots(math.lcm(4 * n, *(c.order for c in spec.params)), roots)

    # t * prod_i (t^k - c_i^k)
    closed = [zero(), one()]
    for c in spec.params:
        ck = c**spec.k
        nxt = [zero()] * (len(closed) + spec.k)
        for d, x in enumerate(closed):
            if x:
                nxt[d + spec.k] = nxt[d + spec.k] + x
                nxt[d] = nxt[d] - ck * x
        closed = nxt
    if any(curve.a(k) != closed[k] for k in range(1, len(closed))):
        raise InternalConsistencyError("Normal-form expansion disagrees with the product of roots")
    return curve


def eval_p(curve: HyperellipticCurve, x: CycloElem | int) -> CycloElem:
    acc = zero()
    for k in range(2 * curve.n + 1, 0, -1):
        acc = (acc + curve.a(k)) * x
    return acc
