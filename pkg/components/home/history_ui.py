import streamlit as st
from .config import GROUP_TYPES, QUERIES


def reuse_entry(entry):
    """Load a history entry back into the word and group widgets"""
    st.session_state.word_text = entry['input_text']
    if entry['group'] in GROUP_TYPES:
        st.session_state.group_type = entry['group']
        st.session_state.saved_spec = ""


def render_history():
    """Render the query history"""
    with st.expander("Query History"):
        if not st.session_state.history:
            st.info("Your queries will appear here")
        else:
            col1, col2 = st.columns([3, 1])
            with col1:
                st.subheader(f"History ({len(st.session_state.history)} entries)")
            with col2:
                if st.button("Clear History"):
                    st.session_state.history = []
                    st.rerun()

            for i, entry in enumerate(st.session_state.history[:10]):
                with st.container():
                    col1, col2 = st.columns([3, 1])
                    with col1:
                        st.subheader(f"{QUERIES.get(entry['query'], entry['query'])} in "
                                     f"{GROUP_TYPES.get(entry['group'], entry['group'])}")
                    with col2:
                        st.caption(entry['timestamp'])

                    tabs = st.tabs(["Input", "Output"])
                    with tabs[0]:
                        st.code(entry['input_text'] or "e", language=None)
                    with tabs[1]:
                        st.code(entry['output_text'] or "(empty)", language=None)

                    st.button("Reuse this word", key=f"reuse_{i}", on_click=reuse_entry, args=(entry,))

                    st.divider()

            if len(st.session_state.history) > 10:
                st.caption(f"Showing 10 of {len(st.session_state.history)} entries.")
