"""Automorphisms of R = C[t, t^-1, u]/(u^2 - p(t)).

Every automorphism has one of two shapes:
    twist  t -> xi^2 t,       u -> xi u
    flip   t -> c^2 t^-1,     u -> eps c^(n+1) t^-(n+1) u
Both are stored as t -> A t^e, u -> B t^f u, so flips are usable even when c itself
is not representable.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Optional

from .curve import HyperellipticCurve
from .field import CycloElem, one, root_of_unity, try_sqrt
from .groups import Family, FiniteGroup, GroupElement, build_group
from .linalg import InternalConsistencyError
from .reduction import p_poly

logger = logging.getLogger(__name__)


class UndeterminedAutomorphismGroup(Exception):
    def __init__(self, message: str, candidates: Optional[list] = None):
        super().__init__(message)
        self.candidates = candidates or []


class CompositionError(InternalConsistencyError):
    pass


@dataclass(frozen=True)
class AlgebraMap:
    t_coeff: CycloElem
    t_exp: int
    u_coeff: CycloElem
    u_exp: int
    c: Optional[CycloElem] = field(default=None, compare=False)
    epsilon: Optional[CycloElem] = field(default=None, compare=False)

    @property
    def kind(self) -> str:
        return "twist" if self.t_exp == 1 else "flip"

    @property
    def xi(self) -> CycloElem:
        if self.kind != "twist":
            raise ValueError("Only twists have a parameter xi")
        return self.u_coeff

    def label(self) -> str:
        t_power = "t" if self.t_exp == 1 else "t^-1"
        u_power = "u" if not self.u_exp else f"t^{self.u_exp} u"
        return f"t -> ({self.t_coeff}) {t_power}, u -> ({self.u_coeff}) {u_power}"

    def as_dict(self) -> dict:
        out = {
            "kind": self.kind,
            "t": {"coeff": self.t_coeff.as_dict(), "exp": self.t_exp},
            "u": {"coeff": self.u_coeff.as_dict(), "exp": self.u_exp},
            "label": self.label(),
        }
        if self.c is not None:
            out["c"] = self.c.as_dict()
        if self.epsilon is not None:
            out["epsilon"] = self.epsilon.as_dict()
        return out


def twist(xi: CycloElem) -> AlgebraMap:
    return AlgebraMap(xi * xi, 1, xi, 0)


def identity_map() -> AlgebraMap:
    return twist(one())


def flip(
    curve: HyperellipticCurve,
    c_squared: CycloElem,
    u_coeff: CycloElem,
    c: Optional[CycloElem] = None,
    epsilon: Optional[CycloElem] = None,
) -> AlgebraMap:
    return AlgebraMap(c_squared, -1, u_coeff, -(curve.n + 1), c, epsilon)


@dataclass(frozen=True)
class RootPermutation:
    """gamma as a 1-based tuple: gamma[i-1] = gamma(i)."""

    gamma: tuple[int, ...]


def _root_index(roots: tuple[CycloElem, ...], value: CycloElem) -> Optional[int]:
    return next((i for i, alpha in enumerate(roots) if alpha == value), None)


def verify_automorphism(curve: HyperellipticCurve, phi: AlgebraMap) -> bool:
    """phi(u)^2 == p(phi(t)) as Laurent polynomials."""
    if not phi.t_coeff or not phi.u_coeff:
        return False
    p = p_poly(curve)
    lhs = p.shift(2 * phi.u_exp).scale(phi.u_coeff * phi.u_coeff)
    rhs = p.substitute_scaled(phi.t_coeff, phi.t_exp)
    return lhs == rhs


def compose(curve: HyperellipticCurve, a: AlgebraMap, b: AlgebraMap) -> AlgebraMap:
    """a o b, applying b first."""
    t_coeff = b.t_coeff * a.t_coeff**b.t_exp
    t_exp = a.t_exp * b.t_exp
    u_coeff = b.u_coeff * a.t_coeff**b.u_exp * a.u_coeff
    u_exp = a.t_exp * b.u_exp + a.u_exp
    expected = 0 if t_exp == 1 else -(curve.n + 1)
    if t_exp not in (1, -1) or u_exp != expected:
        raise CompositionError(f"Composite t^{t_exp}, t^{u_exp} u is neither a twist nor a flip")
    return AlgebraMap(t_coeff, t_exp, u_coeff, u_exp)


def map_power(curve: HyperellipticCurve, phi: AlgebraMap, exponent: int) -> AlgebraMap:
    result = identity_map()
    for _ in range(exponent):
        result = compose(curve, result, phi)
    return result


def map_order(curve: HyperellipticCurve, phi: AlgebraMap) -> int:
    limit = 4 * curve.n
    current, k = phi, 1
    while current != identity_map():
        if k > limit:
            raise InternalConsistencyError(f"Map {phi.label()} has order above {limit}")
        current = compose(curve, current, phi)
        k += 1
    return k


def twist_candidates(curve: HyperellipticCurve) -> list[tuple[AlgebraMap, RootPermutation]]:
    """Twists phi_xi with xi^2 permuting the roots, as powers of a generator of maximal order.

    The generator comes first; the identity comes last.
    """
    order = 4 * curve.n
    step = None
    for j in range(1, order + 1):
        xi_sq = root_of_unity(order, 2 * j)
        if all(_root_index(curve.roots, xi_sq * alpha) is not None for alpha in curve.roots):
            step = j
            break
    assert step is not None  # j = 2n gives xi = -1
    result = []
    for power in range(1, order // step + 1):
        xi = root_of_unity(order, step * power)
        xi_sq = xi * xi
        gamma = tuple(_root_index(curve.roots, xi_sq * alpha) + 1 for alpha in curve.roots)
        result.append((twist(xi), RootPermutation(gamma)))
    logger.debug("Found %d twists, generator xi = zeta_%d^%d", len(result), order, step)
    return result


@dataclass(frozen=True)
class FlipCandidate:
    """A root matching alpha_i alpha_gamma(i) = c^2 and the flips it supports.

    ``sign`` is prod(alpha_i) / c^(2n). ``map`` is None when the u-coefficient needs a
    square root that is not representable.
    """

    c_squared: CycloElem
    sign: int
    permutation: RootPermutation
    map: Optional[AlgebraMap]
    reason: Optional[str] = None

    @property
    def determined(self) -> bool:
        return self.map is not None

    def as_dict(self) -> dict:
        return {
            "c_squared": self.c_squared.as_dict(),
            "sign": self.sign,
            "gamma": list(self.permutation.gamma),
            "map": self.map.as_dict() if self.map else None,
            "reason": self.reason,
        }


def _u_coefficients(
    curve: HyperellipticCurve, s: CycloElem, sign: int
) -> list[CycloElem] | None:
    """Both solutions w of w^2 = sign * s^(n+1)."""
    n = curve.n
    if n % 2:
        eps = one() if sign == 1 else root_of_unity(4, 1)
        w = eps * s ** ((n + 1) // 2)
    else:
        root = try_sqrt(s * sign)
        if root is None:
            return None
        w = root * s ** (n // 2)
    return [w, -w]


def flip_candidates(curve: HyperellipticCurve) -> list[FlipCandidate]:
    roots = curve.roots
    a1 = curve.a(1)
    found: list[tuple[tuple, FlipCandidate]] = []
    for j, partner in enumerate(roots):
        s = roots[0] * partner
        images = [_root_index(roots, s / alpha) for alpha in roots]
        if any(i is None for i in images):
            continue
        gamma = RootPermutation(tuple(i + 1 for i in images))
        ratio = a1 / s**curve.n
        if ratio not in (1, -1):
            raise InternalConsistencyError(f"prod(alpha) / c^2n = {ratio} is not a sign")
        sign = 1 if ratio == 1 else -1
        c = try_sqrt(s)
        ws = _u_coefficients(curve, s, sign)
        key = (sign != 1, not s.is_rational(), j)
        if ws is None:
            reason = f"sqrt({sign} * c^2) is not representable for c^2 = {s}"
            found.append((key + (0,), FlipCandidate(s, sign, gamma, None, reason)))
            continue
        for variant, w in enumerate(ws):
            epsilon = w / c ** (curve.n + 1) if c is not None else None
            phi = flip(curve, s, w, c, epsilon)
            if not verify_automorphism(curve, phi):
                raise InternalConsistencyError(f"Flip {phi.label()} does not preserve u^2 = p")
            found.append((key + (variant,), FlipCandidate(s, sign, gamma, phi)))
    found.sort(key=lambda item: item[0])
    logger.debug("Found %d flip candidates", len(found))
    return [candidate for _, candidate in found]


@dataclass(frozen=True)
class AutProfile:
    k: int
    l: int  # noqa: E741
    twists: tuple[AlgebraMap, ...]
    flips: tuple[FlipCandidate, ...]
    flip: Optional[FlipCandidate]
    group: FiniteGroup
    # Abstract generator name -> concrete map.
    generators: dict = field(compare=False, hash=False, default_factory=dict)

    @property
    def flip_exists(self) -> bool:
        return bool(self.flips)

    @property
    def sign(self) -> Optional[int]:
        return self.flip.sign if self.flip else None

    def as_dict(self) -> dict:
        return {
            "k": self.k,
            "l": self.l,
            "flip_exists": self.flip_exists,
            "sign": self.sign,
            "group": self.group.name,
            "group_alias": self.group.alias,
            "order": self.group.order,
            "generators": {name: phi.as_dict() for name, phi in self.generators.items()},
            "twists": [phi.as_dict() for phi in self.twists],
            "flips": [c.as_dict() for c in self.flips],
        }


def classify_group(curve: HyperellipticCurve) -> AutProfile:
    twists = tuple(phi for phi, _ in twist_candidates(curve))
    k = len(twists) // 2
    l = 2 * curve.n // k  # noqa: E741
    y = twists[0]
    flips = tuple(flip_candidates(curve))

    if not flips:
        group = build_group(Family.CYCLIC, 2 * k)
        profile = AutProfile(k, l, twists, flips, None, group, {"y": y})
        _check_relations(curve, profile)
        return profile

    determined = [c for c in flips if c.determined]
    if not determined:
        raise UndeterminedAutomorphismGroup(
            "A flip exists but its u-coefficient is not representable",
            [c.as_dict() for c in flips],
        )
    chosen = determined[0]
    x = chosen.map
    if l % 2 == 0:
        family, param = (Family.DIHEDRAL, 2 * k) if chosen.sign == 1 else (Family.DICYCLIC, k)
    else:
        family, param = Family.U, k
        if chosen.sign != 1:
            x = compose(curve, x, y)
    group = build_group(family, param)
    profile = AutProfile(k, l, twists, flips, chosen, group, {"x": x, "y": y})
    _check_relations(curve, profile)
    logger.debug("Automorphism group %s (k=%d, l=%d)", group.name, k, l)
    return profile


def _evaluate_word(curve: HyperellipticCurve, profile: AutProfile, word) -> AlgebraMap:
    result = identity_map()
    for gen, exponent in word:
        result = compose(curve, result, map_power(curve, profile.generators[gen], exponent))
    return result


def _check_relations(curve: HyperellipticCurve, profile: AutProfile) -> None:
    for word in profile.group.relators():
        if _evaluate_word(curve, profile, word) != identity_map():
            raise InternalConsistencyError(
                f"Relator {word} of {profile.group.name} fails on the concrete generators"
            )


def element_map(curve: HyperellipticCurve, profile: AutProfile, g: GroupElement) -> AlgebraMap:
    return _evaluate_word(curve, profile, profile.group.word_of(g))


def group_elements(
    curve: HyperellipticCurve, profile: AutProfile
) -> list[tuple[GroupElement, AlgebraMap]]:
    return [(g, element_map(curve, profile, g)) for g in profile.group.elements]


def coefficient_symmetry(curve: HyperellipticCurve, candidate: FlipCandidate) -> bool:
    """a_k == sign * (c^2)^(n-k+1) * a_(2n+2-k) for every k."""
    n = curve.n
    s = candidate.c_squared
    return all(
        curve.a(k) == s ** (n - k + 1) * curve.a(2 * n + 2 - k) * candidate.sign
        for k in range(1, 2 * n + 2)
    )


__all__ = [
    "AlgebraMap",
    "AutProfile",
    "CompositionError",
    "FlipCandidate",
    "RootPermutation",
    "UndeterminedAutomorphismGroup",
    "classify_group",
    "coefficient_symmetry",
    "compose",
    "element_map",
    "flip",
    "flip_candidates",
    "group_elements",
    "identity_map",
    "map_order",
    "map_power",
    "twist",
    "twist_candidates",
    "verify_automorphism",
]
