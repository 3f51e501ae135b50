import pytest

from ddc.objects import (Arc, CategoryParams, MarkedPoint, ar_translate, arc_of, boundary_pair,
                         canonical, height, make_object, mouth_decompose, mouth_less, object_of,
                         parse_object, shift, window)

PARAMS = [CategoryParams(1, 2, 0), CategoryParams(2, 3, 0), CategoryParams(2, 3, 1),
          CategoryParams(3, 4, 1)]


def test_make_object_validates(p230):
    assert make_object(p230, "X", 0, 1, 1).label() == "X^0(1,1)"
    assert make_object(p230, "Z", 1, -4, 7).label() == "Z^1(-4,7)"
    with pytest.raises(ValueError):
        make_object(p230, "X", 0, 3, 1)
    with pytest.raises(ValueError):
        make_object(p230, "Y", 0, 1, 3)
    with pytest.raises(ValueError):
        make_object(p230, "X", 2, 0, 0)


def test_params_reject_infinite_global_dimension():
    with pytest.raises(ValueError):
        CategoryParams(2, 2, 0)
    assert (CategoryParams.parse("2,4,1").p, CategoryParams.parse("2,4,1").q) == (3, 2)


def test_shift_conventions(obj, p230):
    assert shift(obj("X,0,1,1"), 2) == obj("X,0,3,3")
    assert shift(obj("Y,0,1,1"), -2) == obj("Y,0,2,2")
    A = obj("Z,1,-2,5")
    assert shift(A, 0) == A
    assert shift(shift(A, 7), -7) == A


def test_ar_translate_and_height(obj, p230):
    assert ar_translate(obj("Z,0,3,5"), 1) == obj("Z,0,2,4")
    A = obj("X,1,0,4")
    assert ar_translate(ar_translate(A, 2), -2) == A
    assert height(obj("X,0,1,4")) == 3
    assert height(make_object(p230, "Y", 1, 4, 1)) == 3
    with pytest.raises(ValueError):
        height(obj("Z,0,0,0"))


def test_boundary_pairs(obj):
    assert boundary_pair(obj("X,0,1,4")) == (obj("X,0,1,1"), shift(obj("X,0,5,5"), -1))
    assert boundary_pair(obj("Z,0,1,1")) == (obj("X,0,1,1"), obj("Y,0,1,1"))
    assert boundary_pair(obj("Y,0,1,1")) == (obj("Y,0,1,1"), shift(obj("Y,0,2,2"), -1))


def test_mouth_decompose(obj):
    assert mouth_decompose(obj("X,0,0,0")) == (MarkedPoint("X", 2), -2)
    assert mouth_decompose(obj("X,0,1,1")) == (MarkedPoint("X", 1), 0)
    assert mouth_decompose(obj("Y,0,2,2")) == (MarkedPoint("Y", 1), -2)


def test_example_arcs(obj, p230):
    assert arc_of(obj("X,0,1,1")) == Arc.parse("x1:x2:0")
    assert arc_of(obj("X,0,2,2")) == Arc.parse("x2:x1:1")
    assert arc_of(obj("Z,0,1,2")) == Arc.parse("x1:y1:-1")
    assert object_of(Arc.parse("x1:y1:0"), p230) == obj("Z,0,1,1")
    assert object_of(Arc.parse("x1:x2:0"), p230) == obj("X,0,1,1")
    assert object_of(Arc.parse("x1:y1:-1"), p230) == obj("Z,0,1,2")


def test_mouth_order(obj):
    assert mouth_less(obj("X,0,1,1"), obj("X,0,3,3")) == "less"
    assert mouth_less(obj("X,0,3,3"), obj("X,0,1,1")) == "greater"
    assert mouth_less(obj("X,0,2,2"), obj("X,0,2,2")) == "equal"
    assert mouth_less(obj("X,0,1,1"), obj("Y,0,1,1")) == "incomparable"
    assert mouth_less(obj("X,0,2,2"), obj("X,1,3,3")) == "incomparable"


@pytest.mark.parametrize("params", PARAMS, ids=str)
def test_arc_round_trip_and_orbits(params):
    objects = list(window(params, 4))
    by_arc = {}
    for A in objects:
        arc = arc_of(A)
        assert arc_of(shift(A, 3)) == arc
        assert canonical(object_of(arc, params)) == canonical(A)
        by_arc.setdefault(arc, set()).add(canonical(A))
    assert all(len(reps) == 1 for reps in by_arc.values())


@pytest.mark.parametrize("params", PARAMS, ids=str)
def test_shift_by_r_on_mouths(params):
    for i in range(-3, 4):
        X = make_object(params, "X", 0, i, i)
        Y = make_object(params, "Y", 0, i, i)
        assert shift(X, params.r) == ar_translate(X, -params.p)
        assert shift(Y, params.r) == ar_translate(Y, params.q)


def test_json_and_text_forms(p230):
    A = parse_object(p230, "X,0,1,4")
    assert str(A) == "X,0,1,4"
    assert A.to_json() == {"family": "X", "c": 0, "i": 1, "j": 4}
    arc = Arc.parse("x1:y1:-1")
    assert arc.to_json() == {"from": "x1", "to": "y1", "w": -1}
    nested = {"from": {"side": "X", "idx": 1}, "to": {"side": "Y", "idx": 1}, "w": -1}
    assert Arc.from_json(nested) == arc == Arc.from_json(arc.to_json()) == Arc.from_json(str(arc))
