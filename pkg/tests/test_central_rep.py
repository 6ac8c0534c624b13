from fractions import Fraction

import pytest

from hyperelliptic_center.automorphisms import classify_group, identity_map, twist
from hyperelliptic_center.central_rep import (
    action_matrix,
    check_homomorphism,
    check_inverses,
    general_flip_trace,
    image_form,
    printed_flip_trace,
    rep_from_profile,
    trace_closed_form,
    twist_trace_vanishing,
    twist_u_trace,
    u_trace,
)
from hyperelliptic_center.curve import NormalFormSpec, curve_from_roots, curve_normal_form
from hyperelliptic_center.field import CycloElem, root_of_unity
from hyperelliptic_center.groups import conjugacy_classes
from hyperelliptic_center.linalg import is_identity, trace


def rationals(*values) -> list[CycloElem]:
    return [CycloElem.rational(v) for v in values]


def normal_form(k: int, *params) -> NormalFormSpec:
    return NormalFormSpec(k, tuple(CycloElem.rational(c) for c in params))


t3 = curve_from_roots(1, rationals(1, -1))
golden = curve_normal_form(normal_form(3, 1, 4))
criterion = curve_normal_form(normal_form(2, 1, 36, 2, 18))
dicyclic = curve_normal_form(normal_form(3, 1, -1, 2, Fraction(1, 2)))
fourth_roots = curve_from_roots(4, [root_of_unity(4, j) for j in range(4)])

flip_curves = [t3, golden, criterion, dicyclic, fourth_roots]
no_flip = curve_from_roots(1, rationals(1, 2, 4, 5))
larger_golden = curve_normal_form(normal_form(3, 1, 36, 2, 18, 3, 12))

# Columns are the images of w_1..w_6 under t -> 4/t, u -> 16 t^-4 u.
golden_flip_block = [
    [0, 0, 0, 0, Fraction(-1, 16), 0],
    [0, 0, 0, Fraction(-1, 4), 0, 0],
    [0, 0, -1, 0, 0, 0],
    [0, -4, 0, 0, 0, 0],
    [-16, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, -1],
]


def test_identity_acts_trivially():
    assert is_identity(action_matrix(golden, identity_map()))


def test_image_form_of_w0():
    phi = classify_group(golden).generators["x"]
    form = image_form(golden, phi, 0)
    assert form.dt_part.as_mapping() == {-1: -1}
    assert not form.udt_part


@pytest.mark.parametrize("curve", flip_curves + [no_flip, larger_golden])
def test_action_is_a_homomorphism(curve):
    profile = classify_group(curve)
    assert check_homomorphism(curve, profile)
    assert check_inverses(curve, profile)


@pytest.mark.parametrize("curve", flip_curves)
def test_flip_trace_closed_form(curve):
    profile = classify_group(curve)
    x = profile.generators["x"]
    assert x.kind == "flip"
    assert u_trace(action_matrix(curve, x)) == general_flip_trace(curve, x)


@pytest.mark.parametrize("curve", flip_curves)
def test_generator_traces(curve):
    checks = trace_closed_form(curve, classify_group(curve))
    assert {c.generator for c in checks} == {"x", "y"}
    assert all(c.closed_form_matches for c in checks)


def test_flip_u_traces():
    assert u_trace(action_matrix(t3, classify_group(t3).flip.map)) == -2
    assert u_trace(action_matrix(golden, classify_group(golden).flip.map)) == -2


def test_golden_flip_matrix():
    phi = classify_group(golden).flip.map
    assert (phi.c, phi.epsilon) == (2, 1)
    matrix = action_matrix(golden, phi)
    assert matrix[0][0] == -1
    assert [list(row[1:]) for row in matrix[1:]] == golden_flip_block


def test_printed_flip_trace_holds_for_odd_n_at_least_three():
    phi = classify_group(golden).flip.map
    assert printed_flip_trace(golden, phi) == u_trace(action_matrix(golden, phi))


def test_printed_flip_trace_fails_for_t3():
    phi = classify_group(t3).flip.map
    assert printed_flip_trace(t3, phi) == -1
    check = next(c for c in trace_closed_form(t3, classify_group(t3)) if c.generator == "x")
    assert check.printed_matches is False
    assert check.closed_form_matches


def test_general_flip_trace_needs_a_flip():
    with pytest.raises(ValueError):
        general_flip_trace(golden, twist(root_of_unity(6, 1)))


def test_twist_u_trace():
    xi = root_of_unity(6, 1)
    phi = twist(xi)
    assert twist_u_trace(golden, xi) == u_trace(action_matrix(golden, phi))
    assert twist_u_trace(golden, xi, 3) == u_trace(action_matrix(golden, twist(xi**3)))


@pytest.mark.parametrize("curve", flip_curves)
def test_twist_trace_vanishing(curve):
    checks = twist_trace_vanishing(curve, classify_group(curve))
    assert checks
    assert all(c.holds for c in checks)


@pytest.mark.parametrize("curve", flip_curves)
def test_characters(curve):
    profile = classify_group(curve)
    rep = rep_from_profile(curve, profile)
    assert rep.character[0] == curve.rank + 1
    assert rep.u_character[0] == curve.rank
    for c, full, upart, line in zip(
        conjugacy_classes(profile.group), rep.character, rep.u_character, rep.omega0_character
    ):
        assert full == upart + line
        # w_0 is fixed by twists and negated by flips.
        assert line == (-1 if c.representative.flip else 1)


def test_rep_matrix_matches_trace():
    profile = classify_group(golden)
    rep = rep_from_profile(golden, profile)
    for c, value in zip(conjugacy_classes(profile.group), rep.character):
        assert trace(rep.matrix(c.representative)) == value


def test_rep_as_dict():
    doc = rep_from_profile(golden, classify_group(golden)).as_dict()
    assert doc["group"] == "Dihedral(6)"
    assert set(doc["generators"]) == {"x", "y"}
    assert len(doc["generators"]["x"]) == 7
