import pytest

from lagfib.errors import ParseError
from lagfib.examples import catalog_all, extended_catalog
from lagfib.germfile import datum_document, dumps, load_germ, parse_germ


@pytest.mark.parametrize("fx", catalog_all() + extended_catalog(), ids=lambda f: f.name)
def test_roundtrip(fx, tmp_path):
    path = tmp_path / "germ.toml"
    path.write_text(dumps(datum_document(fx.datum, fx.name)))
    germ = load_germ(path)
    assert germ.datum == fx.datum
    assert germ.name == fx.name


def test_monodromy_payload():
    germ = parse_germ({"base_dim": 1, "monodromy": [[1, 1], [0, 1]]})
    assert germ.monodromy == ((1, 1), (0, 1)) and germ.datum is None


def test_images_form_of_action():
    germ = parse_germ({
        "base_dim": 2,
        "first_order": {"m": 4, "action": {"images": [1, 0, 3, 2]}},
    })
    assert germ.first_order.action.axis == "edge-edge"
    assert germ.first_order.model.translation_flag


def test_discriminant_entries():
    germ = parse_germ({
        "base_dim": 2,
        "discriminant": [{"type": "II"}, {"id": "Q", "type": "I_2", "branch": "rotation", "group_order": 3}],
    })
    assert [c.id for c in germ.discriminant] == ["P_1", "Q"]
    assert germ.discriminant[1].provenance() == ("rotation", 3)


@pytest.mark.parametrize(
    "doc, field",
    [
        ({}, "base_dim"),
        ({"base_dim": 2}, "no germ payload"),
        ({"base_dim": 0, "monodromy": [[1]]}, "base_dim"),
        ({"base_dim": 1, "schema": 2, "monodromy": [[1, 0], [0, 1]]}, "schema"),
        ({"base_dim": 2, "monodromy": [[1, 0], [0, 1]]}, "4x4"),
        ({"base_dim": 1, "monodromy": [[1, 0], [0]]}, "square"),
        ({"base_dim": 1, "monodromy": [[1, 0.5], [0, 1]]}, "monodromy[0]"),
        ({"base_dim": 1, "monodromy": [[1, 0], [0, 1]], "smooth_case": {}}, "exactly one"),
        ({"base_dim": 2, "smooth_case": {"order_Hbar": 2}}, "order_Hbar_prime"),
        ({"base_dim": 2, "smooth_case": {"order_Hbar": True, "order_Hbar_prime": 1}}, "boolean"),
        (
            {"base_dim": 2, "smooth_case": {"order_Hbar": 2, "order_Hbar_prime": 2,
                                            "fixed_locus": [{"degree": 4, "singularity": "(1/4)(1,2)"}]}},
            "fixed_locus[0]",
        ),
        ({"base_dim": 2, "first_order": {"m": 4, "action": {"kind": "spin"}}}, "action.kind"),
        ({"base_dim": 2, "first_order": {"m": 4, "action": {"kind": "reflection", "axis": "vertex-edge"}}}, "action"),
        ({"base_dim": 2, "first_order": {"m": 4, "action": {"images": [0, 2, 1, 3]}}}, "action"),
        ({"base_dim": 2, "first_order": {"m": 4, "action": {"kind": "rotation", "shift": 1},
                                         "model": {"gluing": [[1, 1], [1, 1]]}}}, "model"),
        ({"base_dim": 2, "discriminant": []}, "discriminant"),
        ({"base_dim": 2, "discriminant": [{"type": "V"}]}, "discriminant[0].type"),
        ({"base_dim": 2, "discriminant": [{"type": "II", "branch": "up"}]}, "branch"),
    ],
)
def test_parse_errors_name_the_field(doc, field):
    with pytest.raises(ParseError, match=None) as info:
        parse_germ(doc)
    assert field in str(info.value)


def test_unreadable_and_malformed_files(tmp_path):
    with pytest.raises(ParseError):
        load_germ(tmp_path / "missing.toml")
    bad = tmp_path / "bad.toml"
    bad.write_text("base_dim = \n")
    with pytest.raises(ParseError, match="line 1"):
        load_germ(bad)
