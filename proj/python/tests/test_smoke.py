import os

import pytest

import khova

FIGURE_EIGHT = "X(H,E,F,G)+ X(A,B,D,E)- X(D,C,G,F)+ X(B,A,H,C)-"
TABLE = os.path.join(os.path.dirname(__file__), "..", "..", "data", "knot_table.jsonl")


def superpolynomial(report, reduced):
    (flavor,) = [f for f in report["flavors"] if f["reduced"] == reduced]
    return flavor["superpolynomial"]["text"]


def test_trefoil_braid():
    d = khova.braid("1,1,1")
    assert d.crossing_count == 3
    assert d.n_black == 3 and d.n_white == 0
    assert khova.jones(d) == "q + q^3 + q^5 - q^9"
    report = khova.compute(d)
    assert report["ok"]
    assert superpolynomial(report, False) == "q + q^3 + q^5*T^2 + q^9*T^3"
    assert superpolynomial(report, True) == "q^2 + q^6*T^2 + q^8*T^3"


def test_braid_from_list():
    assert khova.braid([1, -2, 1, -2]).pd_text() == khova.braid("1 -2 1 -2").pd_text()


def test_figure_eight_pd():
    d = khova.pd(FIGURE_EIGHT)
    assert d.edges == list("ABCDEFGH")
    report = khova.compute(d, flavor="reduced", marked="C")
    assert superpolynomial(report, True) == "q^-4*T^-2 + q^-2*T^-1 + 1 + q^2*T + q^4*T^2"
    assert report["flavors"][0]["marked"] == "C"


def test_extended_jones():
    assert khova.extended_jones(khova.braid("1,1,1")) == [
        (0, [3, 3], 1),
        (1, [6], 3),
        (2, [2, 4], 3),
        (3, [2, 2, 2], 1),
    ]


def test_field_two():
    report = khova.compute(khova.braid("1,1,1"), flavor="unreduced", field="2")
    assert report["flavors"][0]["field"] == "F2"
    assert "q^7*T^2" in superpolynomial(report, False)


def test_errors():
    with pytest.raises(khova.KhovaError) as info:
        khova.pd("X(1,2,3)+")
    assert info.value.kind == "parse"
    with pytest.raises(khova.KhovaError) as info:
        khova.pd("X(1,4,2,5)+")
    assert info.value.kind == "validation"
    with pytest.raises(ValueError):
        khova.compute(khova.braid("1,1,1"), flavor="sideways")
    with pytest.raises(khova.KhovaError) as info:
        khova.compute(khova.braid("1,1,1"), max_crossings=2)
    assert info.value.kind == "resource"


def test_verify_small_table(tmp_path):
    path = tmp_path / "t.jsonl"
    with open(TABLE) as src:
        path.write_text("".join(src.readlines()[:3]))
    report = khova.verify_table(str(path), jobs=2)
    assert report["summary"]["total"] == 3
    assert report["summary"]["failed"] == 0
