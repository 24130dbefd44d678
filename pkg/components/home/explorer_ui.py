import datetime
import logging

import pandas as pd
import streamlit as st

from components.cli import commands
from services.coxeter_system import CoxeterError, GroupSpec, from_named_type
from utils.local_storage import get_spec
from .config import GROUP_TYPES, QUERIES, STATEMENT_CHOICES, HISTORY_LIMIT, clear_word

logger = logging.getLogger(__name__)


@st.cache_resource(show_spinner=False)
def _cached_context(serialized_type: str, cap: int):
    return commands.context_for_spec(GroupSpec(from_named_type(serialized_type)), cap)


def _context(cap: int):
    saved = st.session_state.get("saved_spec")
    if saved:
        spec = get_spec(saved)
        if spec is not None:
            return commands.context_for_spec(spec, cap)
    return _cached_context(st.session_state.group_type, cap)


def _remember(query: str, text: str, output: str) -> None:
    entry = {
        "timestamp": datetime.datetime.now().strftime("%Y-%m-%d %H:%M:%S"),
        "group": st.session_state.get("saved_spec") or st.session_state.group_type,
        "query": query,
        "input_text": text,
        "output_text": output,
    }
    st.session_state.history.insert(0, entry)
    del st.session_state.history[HISTORY_LIMIT:]


def render_explorer_interface():
    """Element queries on the selected group"""
    col1, col2 = st.columns(2)

    with col1:
        st.subheader("Element")
        st.selectbox(
            "Coxeter group",
            options=list(GROUP_TYPES.keys()),
            format_func=lambda x: GROUP_TYPES[x],
            key="group_type",
        )
        query = st.radio(
            "Query",
            options=list(QUERIES.keys()),
            horizontal=True,
            format_func=lambda x: QUERIES[x],
        )
        word = st.text_input("Word", key="word_text", placeholder="s2 s3 s2 s1 s0 s2 s3")
        mask = st.text_input("Mask J", value="~s3", disabled=query != "project")
        side = st.radio("Side", options=["left", "right"], horizontal=True,
                        disabled=query != "inversions")
        cap = st.number_input("Length cap", min_value=1, max_value=200, value=40)

    with col2:
        st.subheader("Result")
        run, clear = st.columns(2)
        with run:
            run_button = st.button("Run", type="primary", use_container_width=True)
        with clear:
            st.button("Clear", on_click=clear_word, use_container_width=True)

        if run_button:
            try:
                context = _context(int(cap))
                if query == "nf":
                    result = commands.cmd_nf(context, word)
                elif query == "descents":
                    result = commands.cmd_descents(context, word)
                elif query == "inversions":
                    result = commands.cmd_inversions(context, word, side)
                else:
                    result = commands.cmd_project(context, word, mask)
                st.code(result.text or "(empty)", language=None)
                _remember(query, word, result.text)
            except CoxeterError as e:
                logger.error(f"Query {query} failed: {e}")
                st.error(f"{type(e).__name__}: {e}")


def render_verify_interface():
    """Verification sweeps, with counts shown as a table"""
    with st.expander("Verification sweeps"):
        statement = st.selectbox("Statement", options=STATEMENT_CHOICES, index=len(STATEMENT_CHOICES) - 1)
        scope = st.radio("Scope", options=["auto", "exhaustive", "sample"], horizontal=True)
        seed = st.number_input("Seed", min_value=0, value=0)
        cap = st.number_input("Enumeration cap", min_value=1, max_value=200, value=40, key="verify_cap")

        if st.button("Run sweep"):
            try:
                context = _context(int(cap))
                with st.spinner("Sweeping..."):
                    result = commands.cmd_verify(
                        context, statement, None if scope == "auto" else scope, int(seed))
                summary = result.payload["summary"]
                frame = pd.DataFrame.from_dict(summary, orient="index", columns=["pass", "skip", "fail"])
                st.dataframe(frame, use_container_width=True)
                if result.exit_code == commands.EXIT_OK:
                    st.success(f"No failures over {result.payload['universe_size']} elements")
                else:
                    st.error("Failures found")
                    st.code(result.text, language=None)
            except CoxeterError as e:
                logger.error(f"Sweep {statement} failed: {e}")
                st.error(f"{type(e).__name__}: {e}")


def render_hasse_interface():
    """DOT source of the Hasse diagram; rendering is left to DOT consumers"""
    with st.expander("Hasse diagram"):
        order = st.radio("Order", options=["weak", "bruhat"], horizontal=True)
        cap = st.number_input("Diagram cap", min_value=1, max_value=30, value=6, key="hasse_cap")
        if st.button("Build DOT"):
            try:
                result = commands.cmd_hasse(_context(int(cap)), order)
                st.code(result.text, language="dot")
            except CoxeterError as e:
                st.error(f"{type(e).__name__}: {e}")
