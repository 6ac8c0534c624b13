"""Small-parameter invariant checks run by the ``selftest`` command."""

import logging
import random
from dataclasses import dataclass, field
from functools import partial
from typing import Callable

from .automorphisms import classify_group, map_order
from .central_rep import check_homomorphism, rep_from_profile, u_trace
from .curve import (
    HyperellipticCurve,
    NormalFormSpec,
    curve_from_roots,
    curve_normal_form,
    eval_p,
)
from .decomposition import decompose
from .field import CycloElem, root_of_unity, try_sqrt
from .groups import (
    Family,
    FiniteGroup,
    build_group,
    character_table,
    conjugacy_classes,
    multiplicity_inner_product,
    orthogonality_holds,
    regular_character,
)
from .reduction import (
    DifferentialForm,
    LaurentPoly,
    exact_cubic_form,
    reduce_form,
    reduce_oracle,
)

logger = logging.getLogger(__name__)

Check = tuple[str, Callable[[], bool]]


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    failed: int = 0
    failures: list[str] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "failed": self.failed,
            "failures": self.failures,
        }


def _random_element(rng: random.Random, order: int) -> CycloElem:
    value = CycloElem.rational(rng.randint(-2, 2), order)
    for j in range(order):
        value = value + root_of_unity(order, j) * rng.randint(-3, 3)
    return value


def _field_axioms(a: CycloElem, b: CycloElem, c: CycloElem) -> bool:
    if (a * b) * c != a * (b * c) or a * (b + c) != a * b + a * c:
        return False
    return not a or a * a.inverse() == 1


def _square_root(order: int) -> bool:
    target = root_of_unity(order, 2) * 9
    root = try_sqrt(target)
    return root is not None and root * root == target


def _field_checks() -> list[Check]:
    rng = random.Random(7)
    checks: list[Check] = []
    for order in (3, 5, 8, 12):
        for trial in range(3):
            a, b, c = (_random_element(rng, order) for _ in range(3))
            checks.append((f"axioms Q(zeta_{order}) #{trial}", partial(_field_axioms, a, b, c)))
        checks.append((f"sqrt Q(zeta_{order})", partial(_square_root, order)))
    return checks


def _small_curves() -> list[HyperellipticCurve]:
    return [
        curve_from_roots(1, [CycloElem.rational(1), CycloElem.rational(-1)]),
        curve_from_roots(1, [CycloElem.rational(v) for v in (1, 2, 3, -5)]),
        curve_normal_form(NormalFormSpec(2, (CycloElem.rational(1), CycloElem.rational(3)))),
    ]


def _roots_vanish(curve: HyperellipticCurve) -> bool:
    return all(not eval_p(curve, alpha) for alpha in curve.roots)


def _oracle_agrees(curve: HyperellipticCurve, form: DifferentialForm) -> bool:
    return reduce_form(curve, form) == reduce_oracle(curve, form)


def _cubic_is_exact(curve: HyperellipticCurve, b: int) -> bool:
    return reduce_form(curve, exact_cubic_form(curve, b)).is_zero()


def _reduction_checks() -> list[Check]:
    rng = random.Random(11)
    checks: list[Check] = []
    for index, curve in enumerate(_small_curves()):
        checks.append((f"roots vanish #{index}", partial(_roots_vanish, curve)))
        for _ in range(10):
            e = rng.randint(-4 * curve.n - 3, 3 * curve.n + 3)
            form = DifferentialForm(udt_part=LaurentPoly.monomial(e, rng.randint(1, 5)))
            checks.append((f"oracle t^{e} u dt #{index}", partial(_oracle_agrees, curve, form)))
        for b in (-2 * curve.n - 3, -1, 0, 2):
            checks.append((f"exact d(t^{b} u^3) #{index}", partial(_cubic_is_exact, curve, b)))
    return checks


def _class_count(family: Family, param: int, expected: int) -> bool:
    return len(conjugacy_classes(build_group(family, param))) == expected


def _regular_decomposes(group: FiniteGroup) -> bool:
    table = character_table(group)
    counts = multiplicity_inner_product(table, regular_character(group))
    return list(counts) == [r.dim for r in table.irreps]


def _orthogonal(group: FiniteGroup) -> bool:
    return orthogonality_holds(character_table(group))


def _group_checks() -> list[Check]:
    checks: list[Check] = []
    for n in range(2, 11, 2):
        expected = n + 6 if n % 4 == 2 else n + 3
        checks.append((f"U({n}) classes", partial(_class_count, Family.U, n, expected)))
    for n in range(1, 8):
        checks.append((f"Dic({n}) classes", partial(_class_count, Family.DICYCLIC, n, n + 3)))
    for family, param in (
        (Family.CYCLIC, 6),
        (Family.DIHEDRAL, 5),
        (Family.DICYCLIC, 4),
        (Family.U, 6),
    ):
        group = build_group(family, param)
        checks.append((f"{group.name} orthogonality", partial(_orthogonal, group)))
        checks.append((f"{group.name} regular", partial(_regular_decomposes, group)))
    return checks


def _golden_curve() -> HyperellipticCurve:
    return curve_normal_form(NormalFormSpec(3, (CycloElem.rational(1), CycloElem.rational(4))))


def _generator_order(curve: HyperellipticCurve) -> bool:
    profile = classify_group(curve)
    return map_order(curve, profile.generators["y"]) == 2 * profile.k


def _golden_traces() -> bool:
    curve = _golden_curve()
    rep = rep_from_profile(curve, classify_group(curve))
    return rep.u_character[0] == 6 and u_trace(rep.generators["x"]) == -2


def _homomorphism(curve: HyperellipticCurve) -> bool:
    return check_homomorphism(curve, classify_group(curve))


def _representation_checks() -> list[Check]:
    checks: list[Check] = []
    for label, curve in (("t^3 - t", _small_curves()[0]), ("n=3 k=3", _golden_curve())):
        checks.append((f"homomorphism {label}", partial(_homomorphism, curve)))
        checks.append((f"generator order {label}", partial(_generator_order, curve)))
    checks.append(("traces n=3 k=3", _golden_traces))
    return checks


def _golden_multiplicities() -> bool:
    report = decompose(_golden_curve())
    return (
        report.u_part["rho_4"] == 2
        and report.u_part["chi_1"] == 2
        and report.u_part.dimension == 6
        and report.paths_agree
    )


def _decomposition_checks() -> list[Check]:
    return [("n=3 k=3 multiplicities", _golden_multiplicities)]


SUITES: dict[str, Callable[[], list[Check]]] = {
    "exact-field": _field_checks,
    "reduction": _reduction_checks,
    "groups": _group_checks,
    "central-rep": _representation_checks,
    "decomposition": _decomposition_checks,
}


def run_suite(name: str, checks: list[Check]) -> SuiteResult:
    result = SuiteResult(name)
    for label, check in checks:
        try:
            ok = check()
        except Exception as e:  # noqa: BLE001
            logger.debug("Check %s raised", label, exc_info=True)
            ok = False
            label = f"{label}: {type(e).__name__}: {e}"
        if ok:
            result.passed += 1
        else:
            result.failed += 1
            result.failures.append(label)
    logger.info("Suite %s: %d passed, %d failed", name, result.passed, result.failed)
    return result


def run_selftest() -> dict:
    suites = [run_suite(name, builder()) for name, builder in SUITES.items()]
    return {
        "command": "selftest",
        "suites": [s.as_dict() for s in suites],
        "passed": sum(s.passed for s in suites),
        "failed": sum(s.failed for s in suites),
    }
