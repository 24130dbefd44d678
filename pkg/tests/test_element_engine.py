"""
Tests for normal forms, products, descents and word syntax.
"""
import random

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from services.coxeter_system import from_named_type
from services.element_engine import (
    CapExceededError, CoxeterGroup, GroupElement, WordParseError
)

V_WORD = (2, 3, 2, 1, 0, 2, 3)
U_WORD = (2, 3, 2)


@pytest.fixture(scope="module")
def b4():
    return CoxeterGroup(from_named_type("B4"))


@pytest.fixture(scope="module")
def a2():
    return CoxeterGroup(from_named_type("A2"))


words_b4 = st.lists(st.integers(min_value=0, max_value=3), max_size=14).map(tuple)


class TestNormalize:
    """Tests for normalize"""

    def test_braid_relation(self, a2):
        """s1 s0 s1 and s0 s1 s0 share the ShortLex form s0 s1 s0"""
        assert a2.normalize((1, 0, 1)).word == (0, 1, 0)
        assert a2.normalize((0, 1, 0)).word == (0, 1, 0)

    def test_cancellation(self, b4):
        assert b4.normalize((1, 1)).is_identity
        assert b4.normalize(()).word == ()

    def test_b4_examples(self, b4):
        """Normal forms of the worked B4 elements"""
        v = b4.normalize(V_WORD)
        assert v.length == 7
        assert v.word == (1, 2, 1, 3, 2, 1, 0)
        assert b4.normalize(U_WORD).word == (2, 3, 2)
        assert b4.normalize((3, 2, 3)).word == (2, 3, 2)

    def test_b4_four_bond(self, b4):
        """(s0 s1)^4 = e"""
        assert b4.normalize((0, 1) * 4).is_identity
        assert b4.normalize((0, 1) * 2).length == 4

    @given(words_b4)
    def test_idempotent(self, word):
        group = CoxeterGroup(from_named_type("B4"))
        w = group.normalize(word)
        assert group.normalize(w.word) == w
        assert w.length <= len(word)
        assert w.length % 2 == len(word) % 2

    @given(words_b4)
    def test_shortlex_minimal_among_braid_moves(self, word):
        """Normal forms start with their smallest left descent"""
        group = CoxeterGroup(from_named_type("B4"))
        w = group.normalize(word)
        if w.word:
            assert w.word[0] == min(group.left_descents(w))

    def test_cap_exceeded(self):
        """Elements beyond the normal-form cap raise CapExceededError"""
        group = CoxeterGroup(from_named_type("I2(inf)"), length_cap=5)
        with pytest.raises(CapExceededError):
            group.normalize((0, 1) * 3)

    def test_bad_letter(self, b4):
        with pytest.raises(ValueError):
            b4.normalize((0, 4))


class TestArithmetic:
    """Tests for multiply, inverse and conjugate"""

    def test_worked_difference(self, b4):
        """u⁻¹v = s1 s0 s2 s3 with D_R = {s0, s3}"""
        u, v = b4.element(U_WORD), b4.element(V_WORD)
        difference = b4.multiply(b4.inverse(u), v)
        assert difference.word == (1, 0, 2, 3)
        assert b4.right_descents(difference) == frozenset({0, 3})
        assert b4.left_descents(b4.inverse(difference)) == frozenset({0, 3})

    @given(words_b4, words_b4, words_b4)
    @settings(max_examples=30, deadline=None)
    def test_associativity(self, a, b, c):
        group = CoxeterGroup(from_named_type("B4"))
        x, y, z = group.element(a), group.element(b), group.element(c)
        assert group.multiply(group.multiply(x, y), z) == group.multiply(x, group.multiply(y, z))

    @given(words_b4)
    def test_inverse(self, word):
        group = CoxeterGroup(from_named_type("B4"))
        w = group.element(word)
        assert group.multiply(w, group.inverse(w)).is_identity
        assert group.inverse(w).length == w.length

    def test_conjugate_gives_reflection(self, b4):
        """v s0 v⁻¹ for the worked example"""
        v = b4.element(V_WORD)
        t = b4.conjugate(v, b4.generator(0))
        assert t.word == (3, 2, 1, 0, 1, 2, 3)

    def test_is_reduced(self, b4):
        assert b4.is_reduced(V_WORD)
        assert not b4.is_reduced((2, 3, 3))


class TestDescents:
    """Tests for right and left descents"""

    def test_worked_descents(self, b4):
        v = b4.element(V_WORD)
        assert b4.right_descents(v) == frozenset({0, 2, 3})
        assert not b4.is_right_descent(v, 1)
        assert b4.is_right_descent(v, 0)

    def test_involution_descents(self, b4):
        """u = s2s3s2 is an involution, so D_L = D_R"""
        u = b4.element(U_WORD)
        assert b4.left_descents(u) == b4.right_descents(u) == frozenset({2, 3})

    def test_identity(self, b4):
        assert b4.right_descents(b4.identity) == frozenset()

    @given(words_b4)
    def test_descents_shorten(self, word):
        """s ∈ D_R(w) iff ℓ(ws) < ℓ(w)"""
        group = CoxeterGroup(from_named_type("B4"))
        w = group.element(word)
        descents = group.right_descents(w)
        for s in range(4):
            shorter = group.multiply(w, group.generator(s)).length < w.length
            assert (s in descents) == shorter
            assert group.is_right_descent(w, s) == shorter

    def test_longest_element(self):
        """The longest element of A3 has every generator as a descent"""
        group = CoxeterGroup(from_named_type("A3"))
        w0 = group.element((0, 1, 0, 2, 1, 0))
        assert w0.length == 6
        assert group.right_descents(w0) == frozenset({0, 1, 2})


class TestWordSyntax:
    """Tests for parse_word and format_element"""

    def test_parse_whitespace_and_dots(self, b4):
        assert b4.parse_word("s2 s3 s2") == (2, 3, 2)
        assert b4.parse_word("s2.s3.s2") == (2, 3, 2)

    def test_parse_mixed_separators(self, b4):
        assert b4.parse_word(" s2 .s3\ts2. ") == (2, 3, 2)

    def test_group_has_no_vector_action(self):
        """Vectors are acted on through root_geometry.act, not the group"""
        assert not hasattr(CoxeterGroup, "act")

    def test_identity_spellings(self, b4):
        assert b4.parse_word("") == ()
        assert b4.parse_word("e") == ()

    def test_unknown_label_position(self, b4):
        with pytest.raises(WordParseError) as excinfo:
            b4.parse_word("s1 s7 s2")
        assert excinfo.value.position == 3

    def test_format(self, b4):
        assert b4.format_element(b4.identity) == "e"
        assert b4.format_element(GroupElement((1, 0, 2, 3))) == "s1 s0 s2 s3"


class TestSampling:
    """Tests for random_reduced_word"""

    def test_words_are_reduced(self, b4):
        rng = random.Random(0)
        for _ in range(50):
            word = b4.random_reduced_word(rng, rng.randint(0, 20))
            assert b4.is_reduced(word)

    def test_stops_at_longest(self):
        """No word of A2 is longer than 3"""
        group = CoxeterGroup(from_named_type("A2"))
        word = group.random_reduced_word(random.Random(1), 10)
        assert len(word) == 3

    def test_seeded(self, b4):
        assert b4.random_reduced_word(random.Random(5), 9) == b4.random_reduced_word(random.Random(5), 9)
