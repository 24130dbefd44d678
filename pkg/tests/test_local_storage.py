"""
Tests for local storage utilities.
"""
from unittest.mock import patch

import pytest

from services.coxeter_system import GroupSpec, from_named_type
from utils.local_storage import clear_spec, get_spec, list_specs, save_spec


# Mock the streamlit object and its session_state
@pytest.fixture
def mock_streamlit():
    with patch('utils.local_storage.st') as mock_st:
        mock_st.session_state = {}  # Use a simple dict to simulate session_state
        yield mock_st


def test_save_and_get_spec(mock_streamlit):
    """A saved spec comes back with the same matrix and cap"""
    spec = GroupSpec(from_named_type("B4"), cap=12)
    save_spec("my b4", spec)

    assert "coxeter_spec_my b4" in mock_streamlit.session_state
    loaded = get_spec("my b4")
    assert loaded is not None
    assert loaded.matrix.bonds == spec.matrix.bonds
    assert loaded.cap == 12


def test_get_missing_spec(mock_streamlit):
    assert get_spec("nothing") is None


def test_get_corrupted_spec(mock_streamlit):
    """An unreadable stored document yields None and an error message"""
    mock_streamlit.session_state["coxeter_spec_broken"] = "{not json"
    assert get_spec("broken") is None
    mock_streamlit.error.assert_called_once()


def test_clear_spec(mock_streamlit):
    save_spec("a3", GroupSpec(from_named_type("A3")))
    clear_spec("a3")
    assert get_spec("a3") is None
    # Clearing twice is harmless
    clear_spec("a3")


def test_list_specs(mock_streamlit):
    save_spec("h3", GroupSpec(from_named_type("H3")))
    save_spec("a2", GroupSpec(from_named_type("A2")))
    mock_streamlit.session_state["history"] = []
    assert list_specs() == ["a2", "h3"]


def test_save_needs_name(mock_streamlit):
    with pytest.raises(ValueError):
        save_spec("  ", GroupSpec(from_named_type("A2")))
