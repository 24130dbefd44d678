import streamlit as st

from services.theorem_suite import STATEMENTS

# Catalog types offered in the group picker
GROUP_TYPES = {
    "A1": "A1 (order 2)",
    "A2": "A2 (order 6)",
    "A3": "A3 (order 24)",
    "A4": "A4 (order 120)",
    "B2": "B2 (order 8)",
    "B3": "B3 (order 48)",
    "B4": "B4 (order 384)",
    "D4": "D4 (order 192)",
    "H3": "H3 (order 120)",
    "F4": "F4 (order 1152)",
    "I2(5)": "I2(5) (order 10)",
    "I2(8)": "I2(8) (order 16)",
    "I2(inf)": "I2(∞) (infinite)",
}

QUERIES = {
    "nf": "Normal form",
    "descents": "Descent sets",
    "inversions": "Inversion set",
    "project": "Parabolic projection",
}

STATEMENT_CHOICES = list(STATEMENTS) + ["all"]

HISTORY_LIMIT = 50


def clear_word():
    st.session_state.word_text = ""


def init_session_state():
    if 'history' not in st.session_state:
        st.session_state.history = []
    if 'word_text' not in st.session_state:
        st.session_state.word_text = ""
    if 'group_type' not in st.session_state:
        st.session_state.group_type = "B4"
