from fractions import Fraction

import pytest

from hyperelliptic_center.curve import (
    DuplicateRootError,
    HyperellipticCurve,
    InvalidCurveError,
    NormalFormSpec,
    OddRootCountError,
    RootCollisionError,
    ZeroRootError,
    curve_from_roots,
    curve_normal_form,
    eval_p,
)
from hyperelliptic_center.field import CycloElem, root_of_unity


def rationals(*values) -> list[CycloElem]:
    return [CycloElem.rational(v) for v in values]


def test_t_cubed_minus_t():
    curve = curve_from_roots(1, rationals(1, -1))
    assert curve.n == 1
    assert curve.rank == 2
    assert [curve.a(k) for k in range(0, 5)] == [0, -1, 0, 1, 0]
    assert curve.label() == "t^3 - t"
    # Working field holds the primitive 4n-th roots of unity.
    assert curve.field_order == 4


def test_field_order_is_lcm():
    curve = curve_from_roots(3, [root_of_unity(5, 1), CycloElem.rational(2)])
    assert curve.field_order == 60
    assert all(r.order == 60 for r in curve.roots)


@pytest.mark.parametrize(
    "roots",
    [rationals(1, 2), rationals(1, 2, 4, 5), rationals(1, -1, Fraction(1, 2), 7)],
)
def test_roots_are_zeros(roots: list[CycloElem]):
    curve = curve_from_roots(1, roots)
    assert eval_p(curve, 0) == 0
    for alpha in roots:
        assert eval_p(curve, alpha) == 0
    assert eval_p(curve, 100) != 0


def test_fourth_roots_of_unity():
    curve = curve_from_roots(4, [root_of_unity(4, j) for j in range(4)])
    # t (t^4 - 1)
    assert curve.a(5) == 1
    assert curve.a(1) == -1
    assert all(not curve.a(k) for k in (2, 3, 4))


@pytest.mark.parametrize(
    "roots,error",
    [
        (rationals(1), OddRootCountError),
        (rationals(1, 2, 3), OddRootCountError),
        ([], OddRootCountError),
        (rationals(1, 0), ZeroRootError),
        (rationals(2, 2), DuplicateRootError),
        ([root_of_unity(12, 4), root_of_unity(3, 1)], DuplicateRootError),
    ],
)
def test_invalid_roots(roots: list[CycloElem], error: type):
    with pytest.raises(error):
        curve_from_roots(1, roots)
    assert issubclass(error, InvalidCurveError)


def test_normal_form_golden():
    spec = NormalFormSpec(3, tuple(rationals(1, 4)))
    curve = curve_normal_form(spec)
    assert spec.l == 2
    assert curve.n == 3
    # t (t^3 - 1)(t^3 - 64)
    assert curve.a(7) == 1
    assert curve.a(4) == -65
    assert curve.a(1) == 64
    assert all(not curve.a(k) for k in (2, 3, 5, 6))


def test_normal_form_roots():
    spec = NormalFormSpec(2, tuple(rationals(1, 2, 3)))
    assert spec.roots() == rationals(-1, 1, -2, 2, -3, 3)
    assert spec.xi == root_of_unity(4, 1)


@pytest.mark.parametrize(
    "spec,error",
    [
        (NormalFormSpec(3, tuple(rationals(1))), OddRootCountError),
        (NormalFormSpec(0, tuple(rationals(1, 2))), InvalidCurveError),
        (NormalFormSpec(2, tuple(rationals(1, 0))), ZeroRootError),
        (NormalFormSpec(2, tuple(rationals(1, -1))), RootCollisionError),
    ],
)
def test_invalid_normal_form(spec: NormalFormSpec, error: type):
    with pytest.raises(error):
        curve_normal_form(spec)


def test_digest_is_stable_and_distinguishes():
    a = curve_from_roots(1, rationals(1, 2))
    b = curve_from_roots(1, rationals(2, 1))
    c = curve_from_roots(1, rationals(1, 3))
    assert a.digest == b.digest
    assert a.digest != c.digest
    assert len(a.digest) == 16


def test_as_dict():
    curve = curve_from_roots(1, rationals(1, -1))
    doc = curve.as_dict()
    assert doc["n"] == 1
    assert doc["p"] == "t^3 - t"
    assert len(doc["roots"]) == 2
    assert len(doc["coeffs"]) == 3


def test_coefficient_outside_range_is_zero():
    curve: HyperellipticCurve = curve_from_roots(1, rationals(1, 2))
    assert curve.a(-1) == 0
    assert curve.a(10) == 0
