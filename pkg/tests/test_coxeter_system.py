"""
Tests for Coxeter matrices, the named catalog, the bilinear form and the
group-spec format.
"""
import json
import math

import numpy as np
import pytest

from services.coxeter_system import (
    INFINITY, CoxeterMatrixError, GroupSpec, GroupSpecError, ParabolicMask,
    bilinear_form, catalog_names, from_named_type, identify_catalog_type, is_known_finite,
    load_group_spec, parse_group_spec, serialize_group_spec, validate
)


class TestValidate:
    """Tests for validate"""

    def test_b4_matrix(self):
        """The B4 bond pattern is a valid Coxeter matrix"""
        rows = [[1, 4, 2, 2], [4, 1, 3, 2], [2, 3, 1, 3], [2, 2, 3, 1]]
        matrix = validate(rows)
        assert matrix.rank == 4
        assert matrix.bond(0, 1) == 4
        assert matrix == from_named_type("B4")

    def test_infinite_bond(self):
        """∞ is accepted off the diagonal"""
        matrix = validate([[1, INFINITY], [INFINITY, 1]])
        assert matrix.has_infinite_bond()

    def test_asymmetry(self):
        """Asymmetric bonds are rejected with the offending pair"""
        with pytest.raises(CoxeterMatrixError) as excinfo:
            validate([[1, 3], [4, 1]])
        assert excinfo.value.pair == (0, 1)
        assert "asymmetry" in str(excinfo.value)

    def test_off_diagonal_one(self):
        """Ones are allowed on the diagonal only"""
        with pytest.raises(CoxeterMatrixError) as excinfo:
            validate([[1, 1], [1, 1]])
        assert "diagonal-only ones" in str(excinfo.value)

    def test_bad_diagonal(self):
        """Diagonal entries must be 1"""
        with pytest.raises(CoxeterMatrixError) as excinfo:
            validate([[2, 3], [3, 1]])
        assert excinfo.value.pair == (0, 0)

    def test_bond_below_two(self):
        """Off-diagonal bonds below 2 are rejected"""
        with pytest.raises(CoxeterMatrixError):
            validate([[1, 0], [0, 1]])

    def test_non_square(self):
        """Ragged input is rejected"""
        with pytest.raises(CoxeterMatrixError):
            validate([[1, 3], [3]])


class TestCatalog:
    """Tests for from_named_type and identification"""

    @pytest.mark.parametrize("name,rank", [
        ("A1", 1), ("A_3", 3), ("B4", 4), ("D4", 4), ("H3", 3), ("H4", 4), ("F4", 4), ("E6", 6), ("I2(5)", 2),
    ])
    def test_ranks(self, name, rank):
        """Catalog names resolve to matrices of the right rank"""
        assert from_named_type(name).rank == rank

    def test_b_type_labeling(self):
        """B_n carries its 4-bond at (s0, s1)"""
        matrix = from_named_type("B3")
        assert matrix.bond(0, 1) == 4
        assert matrix.bond(1, 2) == 3
        assert matrix.bond(0, 2) == 2

    def test_dihedral_infinite(self):
        """I2(inf) has an infinite bond and is not known finite"""
        matrix = from_named_type("I2(inf)")
        assert matrix.bond(0, 1) == INFINITY
        assert not is_known_finite(matrix)

    @pytest.mark.parametrize("name", ["Z3", "B1", "I2(2)", "D3", "H5"])
    def test_unknown_names(self, name):
        """Unknown names and out-of-range parameters raise GroupSpecError"""
        with pytest.raises(GroupSpecError):
            from_named_type(name)

    def test_identify(self):
        """identify_catalog_type recovers names from bare bond matrices"""
        assert identify_catalog_type(validate(from_named_type("H3").bonds)) == "H3"
        assert identify_catalog_type(from_named_type("I2(3)")) == "A2"
        assert identify_catalog_type(from_named_type("I2(4)")) == "B2"
        assert identify_catalog_type(validate([[1, 3, 3], [3, 1, 3], [3, 3, 1]])) is None

    def test_catalog_names(self):
        """Rank-4 catalog entries"""
        assert catalog_names(4) == ["A4", "B4", "D4", "H4", "F4"]

    @pytest.mark.parametrize("name", ["E7", "E8", "E_7"])
    def test_only_e6_exceptional(self, name):
        """E6 is the only E-type in the catalog"""
        assert from_named_type("E6").rank == 6
        with pytest.raises(GroupSpecError):
            from_named_type(name)

    def test_catalog_names_high_rank(self):
        assert not any(name.startswith("E") for name in catalog_names(7) + catalog_names(8))


class TestBilinearForm:
    """Tests for bilinear_form"""

    def test_b4_entries(self):
        """(α_s|α_t) = -cos(π/m)"""
        form = bilinear_form(from_named_type("B4"))
        assert form[0, 1] == pytest.approx(-math.sqrt(2) / 2)
        assert form[1, 2] == pytest.approx(-0.5)
        assert form[0, 2] == pytest.approx(0.0, abs=1e-15)
        assert np.allclose(np.diag(form), 1.0)

    def test_infinite_bond_is_minus_one(self):
        """∞ gives exactly -1"""
        form = bilinear_form(from_named_type("I2(inf)"))
        assert form[0, 1] == -1.0

    def test_read_only(self):
        """The form cannot be modified in place"""
        form = bilinear_form(from_named_type("A2"))
        with pytest.raises(ValueError):
            form[0, 0] = 2.0


class TestParabolicMask:
    """Tests for ParabolicMask"""

    def test_set_operations(self):
        mask = ParabolicMask.of([2, 0])
        assert list(mask) == [0, 2]
        assert mask.complement(4) == ParabolicMask.of([1, 3])
        assert mask.without(0) == ParabolicMask.of([2])
        assert mask.label() == "{s0,s2}"


class TestGroupSpec:
    """Tests for the group-spec JSON format"""

    def test_type_document(self):
        """A type document resolves through the catalog"""
        spec = parse_group_spec('{"type": "B4", "cap": 10}')
        assert spec.matrix == from_named_type("B4")
        assert spec.cap == 10

    def test_bond_document(self):
        """Rank plus bonds, with "inf" for ∞"""
        spec = parse_group_spec('{"rank": 2, "bonds": [[0, 1, "inf"]]}')
        assert spec.matrix.bond(0, 1) == INFINITY
        assert spec.matrix.name == "I2(inf)"

    def test_canonical_serialization(self):
        """Only non-2 bonds are written, in row-major order"""
        text = serialize_group_spec(GroupSpec(from_named_type("B3")))
        assert json.loads(text) == {"rank": 3, "bonds": [[0, 1, 4], [1, 2, 3]]}

    @pytest.mark.parametrize("name", ["A3", "B4", "H4", "E6", "I2(inf)"])
    def test_parse_inverts_serialize(self, name):
        """parse ∘ serialize is the identity on matrices"""
        spec = GroupSpec(from_named_type(name), cap=7)
        again = parse_group_spec(serialize_group_spec(spec))
        assert again == spec

    @pytest.mark.parametrize("text", [
        "not json",
        "[1, 2]",
        '{"bonds": []}',
        '{"rank": 2, "bonds": [[0, 0, 3]]}',
        '{"rank": 2, "bonds": [[0, 5, 3]]}',
        '{"rank": 2, "bonds": [[0, 1, "many"]]}',
        '{"rank": 2, "bonds": [[0, 1, 1]]}',
        '{"type": "B4", "cap": -1}',
    ])
    def test_malformed_documents(self, text):
        """Malformed documents raise GroupSpecError"""
        with pytest.raises(GroupSpecError):
            parse_group_spec(text)

    def test_load_from_file(self, tmp_path):
        """load_group_spec reads a file"""
        path = tmp_path / "h3.json"
        path.write_text('{"rank": 3, "bonds": [[0, 1, 5], [1, 2, 3]]}', encoding="utf-8")
        spec = load_group_spec(str(path))
        assert identify_catalog_type(spec.matrix) == "H3"

    def test_missing_file(self, tmp_path):
        with pytest.raises(GroupSpecError):
            load_group_spec(str(tmp_path / "missing.json"))
