import json

import numpy as np
import pytest

from corpus import cat1_corpus, small_algebras, upper_triangular, xmod_corpus
from xalg import AlgHom, XModAlg, all_homs, augmentation_ideal, catalog, field_make, group_algebra, xmod_by_ideal
from xalg.algebra import multiplication_action
from xalg.groups import UnknownGroupError
from xalg.homs import HomError, zero_hom
from xalg.io import JSONFormatError, dumps, loads, to_json
from xalg.xmodalg import XModError


@pytest.mark.parametrize("A", small_algebras(2) + small_algebras(3), ids=lambda a: f"{a.field.name}:{a.name}")
def test_algebra_roundtrip(A):
    B = loads(dumps(A))
    assert B.same_structure(A) and B.name == A.name
    assert B.labels == A.labels
    assert np.array_equal(B.unit, A.unit) if A.unit is not None else B.unit is None


def test_group_algebra_serializes_by_id():
    A = group_algebra(field_make(2, 2), catalog((6, 1)))
    assert to_json(A) == {"type": "algebra", "field": "GF(4)", "group": "6,1"}
    assert loads(dumps(A)).group.small_group_id == (6, 1)


def test_subalgebra_keeps_parent():
    A = group_algebra(field_make(3), catalog((3, 1)))
    I = augmentation_ideal(A).as_algebra()
    J = loads(dumps(I))
    assert J.same_structure(I)
    assert J.parent.same_structure(A) and np.array_equal(J.inclusion, I.inclusion)


def test_hom_roundtrip():
    A = group_algebra(field_make(2), catalog((2, 1)))
    for h in all_homs(A, A):
        assert loads(dumps(h)) == h
    T = upper_triangular(field_make(3))
    for h in all_homs(T, T):
        assert loads(dumps(h)) == h


@pytest.mark.parametrize("x", xmod_corpus(), ids=lambda x: f"{x.field.name}:{x.name}")
def test_xmod_roundtrip(x):
    y = loads(dumps(x))
    assert isinstance(y, XModAlg) and y == x and y.is_xmod
    assert y.size == x.size


@pytest.mark.parametrize("c", cat1_corpus()[::7], ids=lambda c: f"{c.field.name}:{c.source.name}:{c.range.dim}")
def test_cat1_roundtrip(c):
    d = loads(dumps(c))
    assert d == c and d.is_cat1 and d.size == c.size


def test_invalid_objects_need_check_false():
    A = group_algebra(field_make(2), catalog((2, 1)))
    bad = XModAlg(zero_hom(A, A), multiplication_action(A), check=False)
    text = dumps(bad)
    with pytest.raises(XModError) as exc:
        loads(text)
    assert "XModAlg2" in str(exc.value)
    y = loads(text, check=False)
    assert not y.is_xmod and y.xmod_witness()[0].startswith("XModAlg2")


@pytest.mark.parametrize(
    "text",
    [
        "{not json",
        "[1, 2]",
        '{"type": "widget"}',
        '{"type": "xmod", "source": {"field": "GF(2)", "group": "2,1"}}',
        '{"type": "hom", "source": {"field": "GF(2)", "group": "2,1"}, '
        '"target": {"field": "GF(2)", "group": "2,1"}, "matrix": [[1, 0, 0]]}',
        '{"type": "algebra", "field": "GF(6)", "group": "2,1"}',
        '{"type": "algebra", "field": "GF(2)", "dim": 2, "structure": [["a"]]}',
    ],
)
def test_format_errors(text):
    with pytest.raises(JSONFormatError):
        loads(text)


def test_unknown_group():
    with pytest.raises(UnknownGroupError):
        loads(json.dumps({"type": "algebra", "field": "GF(2)", "group": "64,1"}))


def test_non_homomorphism_matrix_is_rejected():
    A = group_algebra(field_make(3), catalog((2, 1)))
    doc = to_json(AlgHom(A, A, np.eye(2, dtype=np.int64)))
    doc["matrix"] = [[1, 1], [0, 1]]
    with pytest.raises(HomError):
        loads(json.dumps(doc))


def test_zero_source_xmod_roundtrip():
    A = group_algebra(field_make(2), catalog((4, 2)))
    Z = xmod_by_ideal(A, A.zero_subspace)
    text = dumps(Z)
    W = loads(text)
    assert W == Z and W.size == (1, 16)
    assert json.loads(text)["boundary"] == [[], [], [], []]
