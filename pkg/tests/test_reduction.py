import random
from fractions import Fraction

import pytest

from hyperelliptic_center.curve import NormalFormSpec, curve_from_roots, curve_normal_form
from hyperelliptic_center.field import CycloElem, root_of_unity
from hyperelliptic_center.reduction import (
    DifferentialClass,
    DifferentialForm,
    LaurentPoly,
    basis_form,
    exact_cubic_form,
    p_poly,
    p_table,
    q_table,
    reduce_form,
    reduce_oracle,
    relation,
    tables_for,
)


def rationals(*values) -> list[CycloElem]:
    return [CycloElem.rational(v) for v in values]


t3 = curve_from_roots(1, rationals(1, -1))
quartic = curve_from_roots(1, rationals(1, 2, 3, -5))
gaussian = curve_from_roots(4, [root_of_unity(4, 1), root_of_unity(4, 3), *rationals(2, 3)])
golden = curve_normal_form(NormalFormSpec(3, tuple(rationals(1, 4))))

curves = [t3, quartic, gaussian, golden]


def test_p_zero_row_for_t3():
    table = p_table(t3, 0)
    assert table.entry(0, -2) == Fraction(-1, 5)
    assert table.entry(0, -1) == 0


def test_q3_is_minus_q1_for_t3():
    table = q_table(t3, 3)
    assert table.row(3) == (-1, 0)
    assert table.row(1) == (1, 0)


@pytest.mark.parametrize("curve", curves)
def test_table_shapes(curve):
    p = p_table(curve, 12)
    q = q_table(curve, 12)
    assert p.first == -curve.rank
    assert p.last == 12
    assert q.first == 1
    assert q.last == 12
    assert all(len(row) == curve.rank for row in p.rows + q.rows)


@pytest.mark.parametrize("curve", curves)
def test_table_starts_are_basis(curve):
    p = p_table(curve, 0)
    q = q_table(curve, curve.rank)
    for i in range(1, curve.rank + 1):
        # t^-i u dt is w_i whichever table it is read from.
        unit = tuple(int(j == i - 1) for j in range(curve.rank))
        assert p.row(-i) == unit
        assert q.row(i) == unit


def test_table_arguments():
    with pytest.raises(ValueError):
        p_table(t3, -1)
    with pytest.raises(ValueError):
        q_table(t3, 0)
    with pytest.raises(ValueError):
        tables_for(t3).p_row(-3)


def test_pq_table_as_dict():
    doc = q_table(t3, 3).as_dict()
    assert doc["kind"] == "Q"
    assert doc["first"] == 1
    assert len(doc["rows"]) == 3


@pytest.mark.parametrize("curve", curves)
@pytest.mark.parametrize("b", [-7, -3, 0, 4])
def test_relation_top_coefficient(curve, b: int):
    rel = relation(curve, b)
    n = curve.n
    assert rel.max_exponent == b + 2 * n
    assert rel.coefficient(b + 2 * n) == 2 * b + 6 * n + 3


@pytest.mark.parametrize("curve", curves)
@pytest.mark.parametrize("b", [-12, -5, -2, -1, 0, 1, 5])
def test_exact_cubic_forms_vanish(curve, b: int):
    assert reduce_form(curve, exact_cubic_form(curve, b)).is_zero()


@pytest.mark.parametrize("curve", curves)
def test_basis_forms_reduce_to_units(curve):
    for i in range(curve.rank + 1):
        assert reduce_form(curve, basis_form(curve, i)) == DifferentialClass.unit(curve.n, i)


def test_basis_form_range():
    with pytest.raises(ValueError):
        basis_form(t3, 3)


def test_exact_dt_forms_vanish():
    form = DifferentialForm(dt_part=LaurentPoly.from_mapping({-5: 2, 0: 1, 3: 7}))
    assert reduce_form(t3, form).is_zero()
    assert reduce_oracle(t3, form).is_zero()


def test_exact_forms_from_functions():
    f = LaurentPoly.from_mapping({-3: 1, 2: 5})
    g = LaurentPoly.from_mapping({-4: 1, 1: -2, 6: 3})
    assert reduce_form(quartic, DifferentialForm.exact(f, g)).is_zero()


@pytest.mark.parametrize("curve", curves)
def test_recursion_matches_oracle(curve):
    rng = random.Random(curve.digest)
    for _ in range(8):
        mapping = {
            rng.randint(-4 * curve.n - 4, 3 * curve.n + 4): rng.randint(-3, 3) for _ in range(3)
        }
        form = DifferentialForm(
            dt_part=LaurentPoly.monomial(-1, rng.randint(-2, 2)),
            udt_part=LaurentPoly.from_mapping(mapping),
        )
        assert reduce_form(curve, form) == reduce_oracle(curve, form)


def test_reduction_is_linear():
    a = DifferentialForm(udt_part=LaurentPoly.monomial(4))
    b = DifferentialForm(udt_part=LaurentPoly.monomial(-9, 3))
    lhs = reduce_form(quartic, a.scale(2) + b)
    rhs = reduce_form(quartic, a).scale(2) + reduce_form(quartic, b)
    assert lhs == rhs


def test_laurent_poly_arithmetic():
    x = LaurentPoly.from_mapping({-1: 1, 2: 3})
    y = LaurentPoly.from_mapping({1: 2})
    assert (x * y).as_mapping() == {0: 2, 3: 6}
    assert (x - x) == LaurentPoly()
    assert x.derivative().as_mapping() == {-2: -1, 1: 6}
    assert x.shift(2).min_exponent == 1
    # t -> 2 t^-1
    assert x.substitute_scaled(CycloElem.rational(2), -1).as_mapping() == {
        1: Fraction(1, 2),
        -2: 12,
    }


def test_p_poly():
    assert p_poly(t3).as_mapping() == {1: -1, 3: 1}


def random_curve(seed: int):
    rng = random.Random(seed)
    pool = rationals(*[v for v in range(-5, 6) if v]) + [
        root_of_unity(3, 1),
        root_of_unity(4, 1),
        root_of_unity(8, 1) * 2,
    ]
    n = rng.randint(1, 4)
    return curve_from_roots(rng.choice([1, 3, 4]), rng.sample(pool, 2 * n))


def random_monomial_form(curve, rng: random.Random) -> DifferentialForm:
    e = rng.randint(-4 * curve.n - 3, 3 * curve.n + 3)
    monomial = LaurentPoly.monomial(e, rng.randint(1, 4))
    if rng.random() < 0.25:
        return DifferentialForm(dt_part=monomial)
    return DifferentialForm(udt_part=monomial)


def check_against_oracle(seed: int, forms: int):
    curve = random_curve(seed)
    rng = random.Random(1000 + seed)
    for _ in range(forms):
        form = random_monomial_form(curve, rng)
        assert reduce_form(curve, form) == reduce_oracle(curve, form)
    a = rng.choice([i for i in range(-6, 7) if i])
    f = LaurentPoly.monomial(a)
    for exact in (DifferentialForm.exact(f), DifferentialForm.exact(LaurentPoly(), f)):
        assert reduce_form(curve, exact).is_zero()
        assert reduce_oracle(curve, exact).is_zero()


@pytest.mark.parametrize("seed", range(20))
def test_random_curves_match_oracle(seed: int):
    check_against_oracle(seed, 10)


@pytest.mark.slow
@pytest.mark.parametrize("seed", range(20))
def test_random_curves_match_oracle_many_forms(seed: int):
    check_against_oracle(seed, 200)
