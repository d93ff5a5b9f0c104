import math

import pytest

import qwb


def test_dimension_and_sum_of_squares():
    for r, s in [(1, 1), (2, 1), (2, 2), (3, 1)]:
        eng = qwb.Engine(r, s)
        assert eng.dim == math.factorial(r + s)
        cb = qwb.CellularBasis(eng)
        assert sum(cb.cell_dim(l) ** 2 for l in cb.labels()) == eng.dim
        assert sorted(cb.labels()) == sorted(qwb.cell_labels(r, s))


def test_relations_and_cell_datum_hold():
    eng = qwb.Engine(2, 2, "gfp:101,7,5")
    rep = eng.verify_relations()
    assert rep["pass"]
    assert qwb.CellularBasis(eng).validate()["pass"]
    assert eng.left_ideal_dim() == math.factorial(3)


def test_gram_determinant_vanishes_on_the_one_arc_locus():
    label = (1, ((1,), ()))
    assert qwb.CellularBasis(qwb.Engine(2, 1, "q-power:1")).gram_determinant(label) == "0"
    assert qwb.CellularBasis(qwb.Engine(2, 1)).gram_determinant(label) != "0"
    assert qwb.onearc_zero_locus(2, "row")["matches"]


def test_semisimplicity_examples():
    v = qwb.semisimplicity(2, 1, "q-power:1", mode="both")
    assert not v["semisimple"]
    assert qwb.semisimplicity(3, 1, "delta-zero")["semisimple"]
    assert not qwb.semisimplicity(2, 2, "delta-zero", mode="gram")["semisimple"]


def test_classification_matches_gram():
    f = qwb.Field.parse("gfp:7,3,2")
    assert f.quantum_characteristic == 3
    cb = qwb.CellularBasis(qwb.Engine(2, 2, f))
    assert sorted(qwb.classify_simples(2, 2, f)) == sorted(cb.simples_by_gram())
    assert qwb.Field.generic().quantum_characteristic is None


def test_central_scalar_and_delta():
    assert qwb.central_scalar((0, ((1,), (1,)))) == "0"
    chars = qwb.CellularBasis(qwb.Engine(2, 1)).central_characters()
    assert all(c["matches_action"] for c in chars)


def test_engine_json_round_trip():
    eng = qwb.Engine(2, 1, "gfp:101,7,5")
    again = qwb.Engine.from_json(eng.to_json())
    assert again.dim == eng.dim and again.field.spec == eng.field.spec


def test_bad_input_raises_value_error():
    with pytest.raises(ValueError):
        qwb.Field.parse("nonsense")
    with pytest.raises(ValueError):
        qwb.cell_dim(2, 1, (1, ((2,), ())))
    with pytest.raises(ValueError):
        qwb.semisimplicity(2, 1, mode="maybe")
