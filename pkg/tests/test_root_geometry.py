"""
Tests for the geometric representation and the sign test.
"""
import numpy as np
import pytest
from hypothesis import given
import hypothesis.strategies as st

from services.coxeter_system import bilinear_form, from_named_type
from services.root_geometry import (
    DegenerateSignError, SignClass, act, form_product, negative_columns, reflect, reflection_matrix,
    sign_of, simple_root, word_matrix
)

B4_FORM = bilinear_form(from_named_type("B4"))
V_WORD = (2, 3, 2, 1, 0, 2, 3)


class TestReflect:
    """Tests for reflect and act"""

    def test_reflect_simple_root(self):
        """σ_s(α_s) = -α_s"""
        for s in range(4):
            assert np.allclose(reflect(s, simple_root(s, 4), B4_FORM), -simple_root(s, 4))

    def test_reflection_is_involution(self):
        v = np.array([0.3, -1.2, 2.0, 0.5])
        assert np.allclose(reflect(1, reflect(1, v, B4_FORM), B4_FORM), v)

    @given(st.lists(st.integers(min_value=0, max_value=3), max_size=12))
    def test_form_is_invariant(self, word):
        """The action preserves the bilinear form"""
        u, v = simple_root(0, 4), simple_root(1, 4)
        before = form_product(u, v, B4_FORM)
        after = form_product(act(word, u, B4_FORM), act(word, v, B4_FORM), B4_FORM)
        assert after == pytest.approx(before, abs=1e-9)

    def test_act_last_letter_first(self):
        """act(st, v) = σ_s(σ_t(v))"""
        v = simple_root(2, 4)
        expected = reflect(1, reflect(2, v, B4_FORM), B4_FORM)
        assert np.allclose(act((1, 2), v, B4_FORM), expected)

    def test_descent_example(self):
        """v(α_s3) is negative for the B4 element v = s2s3s2s1s0s2s3"""
        image = act(V_WORD, simple_root(3, 4), B4_FORM)
        assert sign_of(image) is SignClass.NEGATIVE
        image = act(V_WORD, simple_root(1, 4), B4_FORM)
        assert sign_of(image) is SignClass.POSITIVE


class TestMatrices:
    """Tests for reflection_matrix, word_matrix and negative_columns"""

    def test_matrix_matches_reflect(self):
        v = np.array([1.0, 2.0, -0.5, 0.25])
        for s in range(4):
            assert np.allclose(reflection_matrix(s, B4_FORM) @ v, reflect(s, v, B4_FORM))

    def test_word_matrix_columns(self):
        """Column s of the word matrix is the image of α_s"""
        reflections = [reflection_matrix(s, B4_FORM) for s in range(4)]
        matrix = word_matrix(V_WORD, reflections)
        for s in range(4):
            assert np.allclose(matrix[:, s], act(V_WORD, simple_root(s, 4), B4_FORM))

    def test_negative_columns_are_right_descents(self):
        reflections = [reflection_matrix(s, B4_FORM) for s in range(4)]
        assert negative_columns(word_matrix(V_WORD, reflections)) == frozenset({0, 2, 3})

    def test_identity_has_no_negative_columns(self):
        assert negative_columns(np.eye(3)) == frozenset()

    def test_degenerate_column(self):
        """Mixed-sign columns cannot be classified"""
        with pytest.raises(DegenerateSignError):
            negative_columns(np.array([[1.0, 0.0], [-1.0, 1.0]]))


class TestSignOf:
    """Tests for sign_of"""

    def test_positive_and_negative(self):
        assert sign_of(np.array([0.0, 1.5, 0.2])) is SignClass.POSITIVE
        assert sign_of(np.array([-0.3, -2.0, 0.0])) is SignClass.NEGATIVE

    def test_rounding_noise_is_tolerated(self):
        """Coordinates within ε of zero do not count as a second sign"""
        assert sign_of(np.array([1.0, -1e-12])) is SignClass.POSITIVE

    def test_zero_vector(self):
        with pytest.raises(DegenerateSignError):
            sign_of(np.zeros(3))

    def test_mixed_signs(self):
        with pytest.raises(DegenerateSignError):
            sign_of(np.array([1.0, -1.0]))

    def test_custom_epsilon(self):
        """A coarser ε absorbs larger noise"""
        assert sign_of(np.array([1.0, -1e-4]), epsilon=1e-3) is SignClass.POSITIVE


CATALOG = ["A1", "A6", "B6", "D6", "H3", "H4", "F4", "E6", "I2(3)", "I2(8)", "I2(inf)"]


class TestCatalogGeometry:
    """Reflection identities and sign stability across the catalog"""

    @pytest.mark.parametrize("name", CATALOG)
    def test_involution_and_form(self, name):
        """σ_s∘σ_s = id and (σ_s(u)|σ_s(v)) = (u|v) on random vectors"""
        form = bilinear_form(from_named_type(name))
        rank = form.shape[0]
        rng = np.random.default_rng(7)
        for _ in range(25):
            u, v = rng.normal(size=rank), rng.normal(size=rank)
            for s in range(rank):
                assert np.allclose(reflect(s, reflect(s, v, form), form), v, atol=1e-6)
                after = form_product(reflect(s, u, form), reflect(s, v, form), form)
                assert after == pytest.approx(form_product(u, v, form), abs=1e-6)

    @pytest.mark.parametrize("name", CATALOG)
    def test_no_degenerate_signs_up_to_length_40(self, name):
        """Every prefix of 300 random 40-letter words classifies all columns"""
        form = bilinear_form(from_named_type(name))
        rank = form.shape[0]
        reflections = [reflection_matrix(s, form) for s in range(rank)]
        rng = np.random.default_rng(40)
        for _ in range(300):
            matrix = np.eye(rank)
            for s in rng.integers(0, rank, size=40):
                matrix = matrix @ reflections[s]
                negative_columns(matrix, epsilon=1e-7)
