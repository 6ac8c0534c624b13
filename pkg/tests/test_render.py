import pandas as pd
import pytest
from pandas.testing import assert_frame_equal

from hyperelliptic_center import render
from hyperelliptic_center.cli import decompose_document
from hyperelliptic_center.field import CycloElem, root_of_unity
from hyperelliptic_center.specfile import read_spec


def test_fmt():
    assert render.fmt(None) == "-"
    assert render.fmt(CycloElem.rational(-3).as_dict()) == "-3"
    value = root_of_unity(5, 1) + root_of_unity(5, 4)
    assert render.fmt(value.as_dict()) == "2cos(2pi*1/5)"


def test_approx():
    half = {"order": 1, "coeffs": [["1", "2"]]}
    assert render.approx(half, 10) == "0.5"
    assert render.approx(root_of_unity(4, 1).as_dict(), 5).endswith(" + 1.0i")


def test_selftest_frame():
    document = {
        "command": "selftest",
        "suites": [
            {"name": "exact-field", "passed": 4, "failed": 0, "failures": []},
            {"name": "groups", "passed": 9, "failed": 1, "failures": ["x"]},
        ],
        "passed": 13,
        "failed": 1,
    }
    expected = pd.DataFrame(
        {"suite": ["exact-field", "groups"], "passed": [4, 9], "failed": [0, 1]}
    )
    assert_frame_equal(render.table_frame(document), expected)
    assert render.render_text(document).startswith("passed 13, failed 1")


def test_classes_frame():
    document = {
        "command": "classes",
        "group": "Dihedral(3)",
        "order": 6,
        "alias": None,
        "classes": [
            {"representative": "1", "size": 1, "members": ["1"]},
            {"representative": "y", "size": 2, "members": ["y", "y^2"]},
        ],
    }
    expected = pd.DataFrame(
        {"representative": ["1", "y"], "size": [1, 2], "members": ["1", "y, y^2"]}
    )
    assert_frame_equal(render.table_frame(document), expected)


def test_decomposition_frame():
    document = decompose_document(read_spec("tests/data/curves/n3k3.json"))
    frame = render.table_frame(document)
    expected = pd.DataFrame(
        {
            "irrep": ["rho_1", "rho_2", "rho_3", "rho_4", "chi_1", "chi_2"],
            "dim": [1, 1, 1, 1, 2, 2],
            "multiplicity": [0, 0, 0, 2, 2, 0],
            "with_w0": [0, 1, 0, 2, 2, 0],
        }
    )
    assert_frame_equal(frame[expected.columns], expected)
    assert frame.set_index("irrep").loc["chi_1", "closed_form"] == "V_1=2"
    assert frame.set_index("irrep").loc["rho_1", "status"] == "-"


def test_decomposition_text():
    text = render.render_text(decompose_document(read_spec("tests/data/curves/n3k3.json")))
    lines = text.splitlines()
    assert lines[0] == "p(t) = t^7 - 65*t^4 + 64*t  (n = 3, Q(zeta_12))"
    assert "Aut: Dihedral(6), order 12" in lines
    assert "w_0 transforms by rho_2" in lines
    assert "paths agree: yes, witnesses complete: yes, w_0 trivial: no" in lines


def test_unknown_report():
    with pytest.raises(ValueError):
        render.table_frame({"command": "nope"})
