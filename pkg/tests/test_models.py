import json
from fractions import Fraction as F

import pytest

from affinestrata.models import (
    CATALOG,
    CatalogError,
    ModelParseError,
    canonical_model,
    model_to_json,
    negate_model,
    parse_model,
    serialize_model,
    type_a,
    type_b,
)
from affinestrata.curvature import rank_signature, ricci, ricci_type_a, split_ricci


def test_canonical_model_examples():
    assert canonical_model("M1_0") == type_a(1, 0, 0, 1, 0, 0)
    assert canonical_model("N1_alt", [3]) == type_b(0, 3, 1, 0, 0, 1)
    assert canonical_model("N2_alt+", [1]) == type_b(0, 1, 0, -1, 1, 2)
    assert canonical_model("M2_1", [F(1, 2)]) == type_a(-1, 0, F(1, 2), 0, 0, 2)


def test_canonical_model_errors():
    with pytest.raises(CatalogError):
        canonical_model("M9_9")
    with pytest.raises(CatalogError):
        canonical_model("M2_1", [0])
    with pytest.raises(CatalogError):
        canonical_model("M2_1", [-1])
    with pytest.raises(CatalogError):
        canonical_model("N6_0", [-1])
    with pytest.raises(CatalogError):
        canonical_model("N2_alt+", [F(-2)])
    with pytest.raises(CatalogError):
        canonical_model("M1_0", [1])


def test_parse_model_examples():
    assert parse_model('{"type":"A","coeffs":["1","0","0","1","0","0"]}') == canonical_model("M1_0")
    assert parse_model('{"type":"B","coeffs":["0","0","0","0","0","0"]}') == canonical_model("N0_0")
    m = parse_model('{"type":"A","coeffs":["1/2","0","0","0","0","0"]}')
    assert m == type_a(F(1, 2), 0, 0, 0, 0, 0)


def test_parse_model_errors():
    with pytest.raises(ModelParseError):
        parse_model("{not json")
    with pytest.raises(ModelParseError):
        parse_model('{"type":"A","coeffs":["1","0"]}')
    with pytest.raises(ModelParseError):
        parse_model('{"type":"C","coeffs":["0","0","0","0","0","0"]}')
    with pytest.raises(ModelParseError):
        parse_model('{"type":"A","coeffs":["1","0","0","x","0","0"]}')
    with pytest.raises(ModelParseError):
        parse_model('{"type":"A","coeffs":[1.5,"0","0","0","0","0"]}')


def test_serialize_round_trip():
    models = [
        canonical_model("M5_1", [F(-3, 7)]),
        canonical_model("N2_0", [F(5, 3)]),
        type_b(F(1, 2), F(-2, 3), 0, 4, F(7, 5), -1),
    ]
    for m in models:
        assert parse_model(model_to_json(m)) == m
        assert parse_model(json.dumps(serialize_model(m))) == m


def test_negate_model():
    assert negate_model(canonical_model("M0_0")) == canonical_model("M0_0")
    assert negate_model(type_a(1, 0, 0, 1, 0, 0)) == type_a(-1, 0, 0, -1, 0, 0)
    m51 = canonical_model("M5_1", [1])
    assert m51 == type_a(1, 0, 0, 0, 2, 2)
    assert negate_model(m51) == type_a(-1, 0, 0, 0, -2, -2)


def test_flat_catalog_models_are_flat():
    for entry_id in ["M0_0", "M1_0", "M2_0", "M3_0", "M4_0", "M5_0"]:
        assert ricci_type_a(canonical_model(entry_id)).is_zero()
    for entry_id in ["N0_0", "N1_0+", "N1_0-", "N3_0", "N4_0", "N5_0"]:
        assert ricci(canonical_model(entry_id)).is_zero()
    for c in [F(1), F(-3), F(2, 7)]:
        assert ricci(canonical_model("N2_0", [c])).is_zero()
    for c in [F(1), F(5), F(1, 3)]:
        assert ricci(canonical_model("N6_0", [c])).is_zero()


def test_rank1_catalog_models_have_rank_one_ricci():
    cases = [
        ("M1_1", ()),
        ("M2_1", (F(3),)),
        ("M2_1", (F(-1, 2),)),
        ("M3_1", (F(-1, 3),)),
        ("M4_1", (F(0),)),
        ("M5_1", (F(-5),)),
    ]
    for entry_id, params in cases:
        r = ricci_type_a(canonical_model(entry_id, params))
        sig = rank_signature(r)
        assert sig.rank == 1
        assert r.rows[0] == (0, 0)


def test_alternating_catalog_models():
    for entry_id, params in [("N1_alt", (F(7),)), ("N2_alt+", (F(2),)), ("N2_alt-", (F(1, 2),))]:
        m = canonical_model(entry_id, params)
        split = split_ricci(ricci(m))
        assert split.sym_is_zero()
        assert split.alt != 0


def test_m2_1_ricci_scale():
    for c1 in [F(1, 3), F(-1, 2), F(4)]:
        r = ricci_type_a(canonical_model("M2_1", [c1]))
        assert r.rows[1][1] == c1 * (1 + c1)


def test_catalog_listing_is_complete():
    ids = set(CATALOG)
    assert {"M0_0", "M5_0", "M1_1", "M5_1", "N0_0", "N6_0", "N1_alt", "N2_alt+", "N2_alt-"} <= ids
    for entry in CATALOG.values():
        desc = entry.describe()
        assert desc["arity"] == len(desc["params"])
