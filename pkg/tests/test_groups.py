from fractions import Fraction

import pytest

from hyperelliptic_center.groups import (
    Family,
    GroupElement,
    InvalidGroupParameter,
    NotACharacterError,
    build_group,
    character_table,
    class_index,
    conjugacy_classes,
    element_order,
    equivalent,
    intertwiner,
    inverse_character_matrix,
    irreps,
    is_abelian,
    is_class_function,
    multiplication_table,
    multiplicity_inner_product,
    orthogonality_holds,
    regular_character,
    u_two_dim,
    verify_presentation,
)
from hyperelliptic_center.linalg import is_identity, matmul

group_orders = [
    (Family.CYCLIC, 6, 6),
    (Family.DIHEDRAL, 5, 10),
    (Family.DIHEDRAL, 6, 12),
    (Family.DICYCLIC, 3, 12),
    (Family.DICYCLIC, 4, 16),
    (Family.U, 2, 8),
    (Family.U, 4, 16),
    (Family.U, 6, 24),
    (Family.U, 8, 32),
]

class_counts = [
    (Family.CYCLIC, 5, 5),
    (Family.DIHEDRAL, 3, 3),
    (Family.DIHEDRAL, 4, 5),
    (Family.DIHEDRAL, 6, 6),
    (Family.DICYCLIC, 2, 5),
    (Family.DICYCLIC, 3, 6),
    (Family.U, 2, 8),
    (Family.U, 4, 7),
    (Family.U, 6, 12),
    (Family.U, 8, 11),
    (Family.U, 10, 16),
]
class_counts += [(Family.U, n, n + 6 if n % 4 == 2 else n + 3) for n in range(2, 21, 2)]
class_counts += [(Family.DICYCLIC, n, n + 3) for n in range(1, 21)]

# R_h ~ R_(n-h) for odd h, R_h ~ R_(2n-h) for even h.
u_partners = [(n, h, n - h) for n in (4, 6, 8) for h in range(1, n, 2)]
u_partners += [(n, h, 2 * n - h) for n in (4, 6, 8) for h in range(2, 2 * n - 1, 2)]

# Every family up to group order 80.
small_groups = (
    [(Family.CYCLIC, m) for m in range(1, 41)]
    + [pytest.param(Family.CYCLIC, m, marks=pytest.mark.slow) for m in range(41, 81)]
    + [(Family.DIHEDRAL, m) for m in range(1, 41)]
    + [(Family.DICYCLIC, n) for n in range(1, 21)]
    + [(Family.U, n) for n in range(2, 21, 2)]
)


@pytest.mark.parametrize("family,param,order", group_orders)
def test_group_order(family: Family, param: int, order: int):
    group = build_group(family, param)
    assert group.order == order
    assert len(group.elements) == order
    assert verify_presentation(group)


@pytest.mark.parametrize("family,param,count", class_counts)
def test_class_counts(family: Family, param: int, count: int):
    classes = conjugacy_classes(build_group(family, param))
    assert len(classes) == count
    assert classes[0].representative == GroupElement(0, 0)
    assert sum(c.size for c in classes) == build_group(family, param).order


def test_odd_u_is_dihedral():
    group = build_group("u", 3)
    assert group.family is Family.DIHEDRAL
    assert group.alias == "U(3)"
    assert group.name == "Dihedral(3)"


@pytest.mark.parametrize("param", [0, -2])
def test_invalid_parameter(param: int):
    with pytest.raises(InvalidGroupParameter):
        build_group(Family.DIHEDRAL, param)


def test_invalid_family():
    with pytest.raises(ValueError):
        build_group("quaternion", 2)


def test_cyclic_has_no_flip():
    group = build_group(Family.CYCLIC, 4)
    with pytest.raises(InvalidGroupParameter):
        group.x


@pytest.mark.parametrize(
    "family,param", [(Family.DIHEDRAL, 5), (Family.DICYCLIC, 3), (Family.U, 6)]
)
def test_group_axioms(family: Family, param: int):
    group = build_group(family, param)
    table = multiplication_table(group)
    elements = group.elements
    for row in table:
        assert sorted(row) == sorted(elements)
    for g in elements:
        assert group.multiply(g, group.inverse(g)) == group.identity
        assert group.multiply(group.inverse(g), g) == group.identity
        assert group.evaluate(group.word_of(g)) == g
    for a in elements[::3]:
        for b in elements[::2]:
            for c in elements[::5]:
                assert group.multiply(group.multiply(a, b), c) == group.multiply(
                    a, group.multiply(b, c)
                )


def test_dicyclic_flip_square():
    group = build_group(Family.DICYCLIC, 3)
    assert group.power(group.x, 2) == group.power(group.y, 3)
    assert element_order(group, group.x) == 4


def test_u_conjugation():
    group = build_group(Family.U, 4)
    # x y x^-1 = y^(n-1)
    conj = group.multiply(group.multiply(group.x, group.y), group.inverse(group.x))
    assert conj == group.power(group.y, 3)
    assert element_order(group, group.y) == 8


def test_abelian():
    assert is_abelian(build_group(Family.U, 2))
    assert is_abelian(build_group(Family.CYCLIC, 7))
    assert not is_abelian(build_group(Family.DIHEDRAL, 3))


def test_labels():
    assert GroupElement(0, 0).label() == "1"
    assert GroupElement(0, 1).label() == "y"
    assert GroupElement(1, 0).label() == "x"
    assert GroupElement(1, 3).label() == "x y^3"


def test_class_index():
    group = build_group(Family.DIHEDRAL, 3)
    assert class_index(group, group.identity) == 0
    assert class_index(group, GroupElement(0, 2)) == 1
    assert class_index(group, GroupElement(1, 2)) == 2


def test_dihedral_three_table():
    table = character_table(build_group(Family.DIHEDRAL, 3))
    assert table.labels() == ["rho_1", "rho_2", "chi_1"]
    assert [c.representative.label() for c in table.classes] == ["1", "y", "x"]
    assert list(table.values[0]) == [1, 1, 1]
    assert list(table.values[1]) == [1, 1, -1]
    assert list(table.values[2]) == [2, -1, 0]


def test_cyclic_two_table():
    table = character_table(build_group(Family.CYCLIC, 2))
    assert [list(row) for row in table.values] == [[1, 1], [1, -1]]


@pytest.mark.parametrize("family,param", small_groups)
def test_character_tables_are_valid(family: Family, param: int):
    group = build_group(family, param)
    table = character_table(group)
    assert len(table.irreps) == len(table.classes)
    assert sum(r.dim**2 for r in table.irreps) == group.order
    assert orthogonality_holds(table)


@pytest.mark.parametrize("family,param", [(Family.DICYCLIC, 5), (Family.U, 6), (Family.U, 8)])
def test_irreps_are_class_functions_and_distinct(family: Family, param: int):
    group = build_group(family, param)
    reps = irreps(group)
    assert all(is_class_function(group, rep) for rep in reps)
    two_dim = [rep for rep in reps if rep.dim == 2]
    for i, a in enumerate(two_dim):
        for b in two_dim[i + 1 :]:
            assert not equivalent(a, b)


def test_dicyclic_aliases():
    table = character_table(build_group(Family.DICYCLIC, 3))
    assert table.index("omega_0") == table.index("rho_1")
    assert table.index("gamma_1") == table.index("chi_1")
    assert table.index("sigma_2") == table.index("chi_2")
    with pytest.raises(KeyError):
        table.index("tau_1")


def test_intertwiner():
    a = u_two_dim(6, 2)
    b = u_two_dim(6, 4)
    assert equivalent(a, a)
    assert intertwiner((a.x, a.y), (b.x, b.y)) is None


@pytest.mark.parametrize("n,h,partner", u_partners)
def test_u_two_dim_partners(n: int, h: int, partner: int):
    assert equivalent(u_two_dim(n, h), u_two_dim(n, partner))


@pytest.mark.parametrize(
    "family,param", [(Family.DIHEDRAL, 7), (Family.DICYCLIC, 4), (Family.U, 10)]
)
def test_regular_character(family: Family, param: int):
    group = build_group(family, param)
    table = character_table(group)
    counts = multiplicity_inner_product(table, regular_character(group))
    assert list(counts) == [r.dim for r in table.irreps]


def test_inverse_character_matrix():
    table = character_table(build_group(Family.U, 6))
    product = matmul(table.values, inverse_character_matrix(table))
    assert is_identity(product)


def test_not_a_character():
    table = character_table(build_group(Family.DIHEDRAL, 3))
    with pytest.raises(NotACharacterError) as info:
        multiplicity_inner_product(table, [1, 0, 0])
    assert info.value.diagnostics["group"] == "Dihedral(3)"
    fractional = multiplicity_inner_product(table, [1, 0, 0], require_integral=False)
    assert fractional == (Fraction(1, 6), Fraction(1, 6), Fraction(1, 3))


def test_wrong_length_class_function():
    table = character_table(build_group(Family.DIHEDRAL, 3))
    with pytest.raises(ValueError):
        multiplicity_inner_product(table, [1, 2])


def test_table_as_dict_display():
    doc = character_table(build_group(Family.DIHEDRAL, 5)).as_dict()
    assert doc["group"] == "Dihedral(5)"
    assert doc["order"] == 10
    assert "2cos(2pi*1/5)" in doc["display"][2]
