"""The action of Aut(R) on Omega_R/dR."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Optional

from .automorphisms import AlgebraMap, AutProfile, compose, element_map
from .curve import HyperellipticCurve
from .field import CycloElem, zero
from .groups import FiniteGroup, GroupElement, conjugacy_classes, evaluate_word
from .linalg import (
    InternalConsistencyError,
    Matrix,
    equal,
    from_columns,
    inverse,
    is_identity,
    matmul,
    matpow,
    trace,
)
from .reduction import DifferentialForm, LaurentPoly, reduce_form, tables_for

logger = logging.getLogger(__name__)


class RelationFailure(InternalConsistencyError):
    pass


def image_form(curve: HyperellipticCurve, phi: AlgebraMap, i: int) -> DifferentialForm:
    """phi(r) d phi(s) for the representative of w_i."""
    a, e, b, f = phi.t_coeff, phi.t_exp, phi.u_coeff, phi.u_exp
    if i == 0:
        # (A t^e)^-1 d(A t^e) = e t^-1 dt
        return DifferentialForm(dt_part=LaurentPoly.monomial(-1, e))
    # (A t^e)^-i (B t^f u) d(A t^e)
    coeff = a ** (1 - i) * b * e
    return DifferentialForm(udt_part=LaurentPoly.monomial(-i * e + f + e - 1, coeff))


def action_matrix(curve: HyperellipticCurve, phi: AlgebraMap) -> Matrix:
    """Column j holds the coordinates of phi(w_j)."""
    columns = [reduce_form(curve, image_form(curve, phi, i)).coords for i in range(curve.rank + 1)]
    return from_columns(columns)


def u_trace(matrix: Matrix) -> CycloElem:
    """Trace on w_1..w_2n."""
    return trace(matrix) - matrix[0][0]


@dataclass(frozen=True)
class CentralRep:
    group: FiniteGroup
    generators: dict = field(hash=False)
    # One value per conjugacy class, in class order.
    character: tuple[CycloElem, ...]
    u_character: tuple[CycloElem, ...]
    omega0_character: tuple[CycloElem, ...]

    def matrix(self, g: GroupElement) -> Matrix:
        y_part = matpow(self.generators["y"], g.power)
        if not g.flip:
            return y_part
        return matmul(self.generators["x"], y_part)

    def as_dict(self) -> dict:
        return {
            "group": self.group.name,
            "generators": {
                name: [[c.as_dict() for c in row] for row in m]
                for name, m in self.generators.items()
            },
            "character": [c.as_dict() for c in self.character],
            "u_character": [c.as_dict() for c in self.u_character],
            "omega0_character": [c.as_dict() for c in self.omega0_character],
        }


def rep_from_profile(curve: HyperellipticCurve, profile: AutProfile) -> CentralRep:
    generators = {name: action_matrix(curve, phi) for name, phi in profile.generators.items()}
    group = profile.group
    for word in group.relators():
        value = evaluate_word(generators.get("x"), generators["y"], word)
        if not is_identity(value):
            raise RelationFailure(f"Relator {word} of {group.name} fails on the action matrices")
    rep = CentralRep(group, generators, (), (), ())
    full, upart, line = [], [], []
    for c in conjugacy_classes(group):
        m = rep.matrix(c.representative)
        full.append(trace(m))
        upart.append(u_trace(m))
        line.append(m[0][0])
    logger.debug("Character of Omega/dR on %s: %s", group.name, [v.label() for v in full])
    return CentralRep(group, generators, tuple(full), tuple(upart), tuple(line))


def check_homomorphism(curve: HyperellipticCurve, profile: AutProfile) -> bool:
    """action_matrix(a o b) == action_matrix(a) action_matrix(b) over the whole group."""
    maps = [element_map(curve, profile, g) for g in profile.group.elements]
    cache: dict[AlgebraMap, Matrix] = {}

    def matrix_of(phi: AlgebraMap) -> Matrix:
        if phi not in cache:
            cache[phi] = action_matrix(curve, phi)
        return cache[phi]

    for a in maps:
        for b in maps:
            if not equal(matrix_of(compose(curve, a, b)), matmul(matrix_of(a), matrix_of(b))):
                return False
    return True


def check_inverses(curve: HyperellipticCurve, profile: AutProfile) -> bool:
    group = profile.group
    for g in group.elements:
        m = action_matrix(curve, element_map(curve, profile, g))
        m_inv = action_matrix(curve, element_map(curve, profile, group.inverse(g)))
        if not equal(inverse(m), m_inv):
            return False
    return True


def general_flip_trace(curve: HyperellipticCurve, phi: AlgebraMap) -> CycloElem:
    """Closed-form trace of a flip on w_1..w_2n.

    phi(w_i) = -w s^(1-i) t^(i-n-3) u dt, so the diagonal entry is -w s^(1-i) times the
    coefficient of w_i in the class of t^(i-n-3) u dt.
    """
    if phi.kind != "flip":
        raise ValueError("general_flip_trace expects a flip")
    tables = tables_for(curve)
    s, w, n = phi.t_coeff, phi.u_coeff, curve.n
    total = zero()
    for i in range(1, 2 * n + 1):
        k = tables.udt_class(i - n - 3)[i - 1]
        if k:
            total = total - w * s ** (1 - i) * k
    return total


def flip_sum(
    curve: HyperellipticCurve, phi: AlgebraMap, halved: bool = False
) -> Optional[CycloElem]:
    """sum_{i=n+3}^{2n} c^E P_{i-n-3,-i} with E = n+3-2i, or E/2 when ``halved``.

    c is taken with eps = 1 where the sign of c decides eps. Returns None when a
    needed power of c is not representable.
    """
    n = curve.n
    s, c = phi.t_coeff, phi.c
    if c is not None and n % 2 == 0 and phi.epsilon == -1:
        c = -c
    tables = tables_for(curve)
    total = zero()
    for i in range(n + 3, 2 * n + 1):
        exponent = n + 3 - 2 * i
        if halved:
            if exponent % 2:
                return None
            exponent //= 2
        power = _c_power(s, c, exponent)
        if power is None:
            return None
        total = total + power * tables.p_row(i - n - 3)[i - 1]
    return total


def printed_flip_trace(curve: HyperellipticCurve, phi: AlgebraMap) -> Optional[CycloElem]:
    """-1 - sum_{i=n+3}^{2n} c^(n+3-2i) P_{i-n-3,-i}."""
    total = flip_sum(curve, phi)
    return None if total is None else -1 - total


def _c_power(s: CycloElem, c: Optional[CycloElem], exponent: int) -> Optional[CycloElem]:
    """c^exponent from s = c^2 where possible, else from c itself."""
    if exponent % 2 == 0:
        return s ** (exponent // 2)
    if c is None:
        return None
    return c**exponent


@dataclass(frozen=True)
class TraceCheck:
    generator: str
    computed: CycloElem
    closed_form: CycloElem
    printed: Optional[CycloElem] = None

    @property
    def closed_form_matches(self) -> bool:
        return self.computed == self.closed_form

    @property
    def printed_matches(self) -> Optional[bool]:
        return None if self.printed is None else self.printed == self.computed

    def as_dict(self) -> dict:
        return {
            "generator": self.generator,
            "computed": self.computed.as_dict(),
            "closed_form": self.closed_form.as_dict(),
            "closed_form_matches": self.closed_form_matches,
            "printed": self.printed.as_dict() if self.printed is not None else None,
            "printed_matches": self.printed_matches,
        }


def twist_u_trace(curve: HyperellipticCurve, xi: CycloElem, power: int = 1) -> CycloElem:
    """sum_{i=1}^{2n} xi^(power (3 - 2i)), the u-block trace of phi_xi^power."""
    total = zero()
    for i in range(1, 2 * curve.n + 1):
        total = total + xi ** (power * (3 - 2 * i))
    return total


def trace_closed_form(curve: HyperellipticCurve, profile: AutProfile) -> list[TraceCheck]:
    """u-block traces of the generators: computed, closed form and printed formula."""
    checks = []
    for name, phi in profile.generators.items():
        computed = u_trace(action_matrix(curve, phi))
        if phi.kind == "twist":
            checks.append(TraceCheck(name, computed, twist_u_trace(curve, phi.xi)))
        else:
            printed = printed_flip_trace(curve, phi)
            checks.append(TraceCheck(name, computed, general_flip_trace(curve, phi), printed))
    return checks


@dataclass(frozen=True)
class VanishingCheck:
    power: int
    u_trace: CycloElem
    claimed_zero: bool

    @property
    def holds(self) -> bool:
        return not self.claimed_zero or not self.u_trace

    def as_dict(self) -> dict:
        return {
            "power": self.power,
            "u_trace": self.u_trace.as_dict(),
            "claimed_zero": self.claimed_zero,
            "holds": self.holds,
        }


def twist_trace_vanishing(curve: HyperellipticCurve, profile: AutProfile) -> list[VanishingCheck]:
    """u-block traces of every nontrivial twist power, from the action matrix."""
    y = profile.generators["y"]
    xi = y.xi
    checks = []
    for power in range(1, 2 * profile.k):
        phi = element_map(curve, profile, profile.group.element(0, power))
        value = u_trace(action_matrix(curve, phi))
        claimed = xi ** (2 * power) != 1
        checks.append(VanishingCheck(power, value, claimed))
    return checks
