"""
Tests for the query history panel.
"""
from types import SimpleNamespace
from unittest.mock import MagicMock, patch

import pytest

from components.home.history_ui import render_history, reuse_entry

ENTRY = {
    "timestamp": "2026-01-01 12:00:00",
    "group": "A3",
    "query": "nf",
    "input_text": "s1 s0 s1",
    "output_text": "s0 s1 s0, length 3",
}


@pytest.fixture
def mock_streamlit():
    with patch('components.home.history_ui.st') as mock_st:
        mock_st.session_state = SimpleNamespace(history=[dict(ENTRY)], word_text="", group_type="B4",
                                                saved_spec="mine")
        mock_st.columns.side_effect = lambda spec: [MagicMock() for _ in spec]
        mock_st.tabs.side_effect = lambda labels: [MagicMock() for _ in labels]
        mock_st.button.return_value = False
        yield mock_st


def test_reuse_entry(mock_streamlit):
    """The callback copies the word and the catalog group back"""
    reuse_entry(ENTRY)
    assert mock_streamlit.session_state.word_text == "s1 s0 s1"
    assert mock_streamlit.session_state.group_type == "A3"
    assert mock_streamlit.session_state.saved_spec == ""


def test_reuse_entry_custom_group(mock_streamlit):
    """Entries from saved groups only restore the word"""
    reuse_entry(dict(ENTRY, group="mine"))
    assert mock_streamlit.session_state.word_text == "s1 s0 s1"
    assert mock_streamlit.session_state.group_type == "B4"


def test_reuse_button_uses_callback(mock_streamlit):
    """Rendering never writes widget state; the button hands the entry to reuse_entry"""
    mock_streamlit.button.side_effect = lambda label, **kwargs: label != "Clear History"
    render_history()
    assert mock_streamlit.session_state.word_text == ""
    reuse_calls = [c for c in mock_streamlit.button.call_args_list if c.args[0] == "Reuse this word"]
    assert len(reuse_calls) == 1
    assert reuse_calls[0].kwargs["on_click"] is reuse_entry
    assert reuse_calls[0].kwargs["args"] == (ENTRY,)


def test_empty_history(mock_streamlit):
    mock_streamlit.session_state.history = []
    render_history()
    mock_streamlit.info.assert_called_once()
