import os

import hypothesis
import numpy as np
import pytest

from services.coxeter_system import from_named_type
from services.descent_calculus import DescentCalculus
from services.element_engine import CoxeterGroup

np.seterr(all="warn")

hypothesis.settings.register_profile("default", max_examples=100, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=5, deadline=None)
hypothesis.settings.register_profile("debugger", report_multiple_bugs=False, deadline=None)
hypothesis.settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture(scope="session")
def calculus_for():
    """Shared calculus objects per catalog type, so caches survive across tests"""
    built = {}

    def make(name: str) -> DescentCalculus:
        if name not in built:
            built[name] = DescentCalculus(CoxeterGroup(from_named_type(name)))
        return built[name]

    return make


@pytest.fixture(scope="session")
def b4(calculus_for):
    return calculus_for("B4")


@pytest.fixture(scope="session")
def a3(calculus_for):
    return calculus_for("A3")
