"""
Tests for DOT export of Hasse diagrams.
"""
import re

import pytest

from services.coxeter_system import from_named_type
from services.descent_calculus import DescentCalculus
from services.element_engine import CoxeterGroup
from services.hasse import hasse_diagram

EDGE = re.compile(r"^\s+n\d+ -> n\d+;$", re.MULTILINE)
NODE = re.compile(r"^\s+n\d+ \[label=\"[^\"]*\"\];$", re.MULTILINE)


def count(dot):
    return len(NODE.findall(dot)), len(EDGE.findall(dot))


class TestHasseDiagram:
    """Tests for hasse_diagram"""

    def test_a1_weak(self, calculus_for):
        calculus = calculus_for("A1")
        assert count(hasse_diagram(calculus, calculus.enumerate(), "weak")) == (2, 1)

    def test_a2_weak_hexagon(self, calculus_for):
        calculus = calculus_for("A2")
        assert count(hasse_diagram(calculus, calculus.enumerate(), "weak")) == (6, 6)

    def test_a2_bruhat(self, calculus_for):
        calculus = calculus_for("A2")
        assert count(hasse_diagram(calculus, calculus.enumerate(), "bruhat")) == (6, 8)

    def test_labels_are_normal_forms(self, calculus_for):
        calculus = calculus_for("A2")
        dot = hasse_diagram(calculus, calculus.enumerate(), "weak")
        assert 'n0 [label="e"];' in dot
        assert 'n5 [label="s0 s1 s0"];' in dot
        assert "n0 -> n1;" in dot

    def test_deterministic(self, calculus_for):
        calculus = calculus_for("B3")
        universe = calculus.enumerate()
        assert hasse_diagram(calculus, universe, "bruhat") == hasse_diagram(calculus, universe, "bruhat")

    def test_truncated_ball_is_flagged(self):
        calculus = DescentCalculus(CoxeterGroup(from_named_type("I2(inf)")))
        dot = hasse_diagram(calculus, calculus.enumerate(3), "bruhat")
        assert "// truncated" in dot
        nodes, edges = count(dot)
        assert nodes == 7
        # each length-1 element covers e; longer ones cover both elements one shorter
        assert edges == 2 + 4 + 4

    def test_unknown_order(self, calculus_for):
        calculus = calculus_for("A1")
        with pytest.raises(ValueError):
            hasse_diagram(calculus, calculus.enumerate(), "strong")
