import logging

import streamlit as st

from components.home.config import init_session_state
from components.home.explorer_ui import (
    render_explorer_interface, render_hasse_interface, render_verify_interface
)
from components.home.history_ui import render_history
from services.coxeter_system import GroupSpecError, parse_group_spec
from utils.config import settings
from utils.local_storage import clear_spec, list_specs, save_spec

# Configure logging
logging.basicConfig(level=settings.log_level)
logger = logging.getLogger(__name__)

st.set_page_config(
    page_title="Coxeter Explorer",
    page_icon="🔷",
    layout="wide",
    initial_sidebar_state="expanded"
)

init_session_state()

# Saved custom groups in the sidebar
with st.sidebar:
    with st.expander("Custom groups", expanded=False):
        with st.form("group_spec_form"):
            st.caption('Group spec JSON, e.g. {"rank": 3, "bonds": [[0, 1, 5], [1, 2, 3]]}')
            name = st.text_input("Name")
            document = st.text_area("Spec", height=120)
            submitted = st.form_submit_button("Save group")

            if submitted:
                try:
                    save_spec(name, parse_group_spec(document))
                    st.success(f"Saved '{name}'")
                except (GroupSpecError, ValueError) as e:
                    st.error(str(e))

        saved = list_specs()
        st.selectbox("Use saved group", options=[""] + saved, key="saved_spec",
                     format_func=lambda x: x or "(catalog group)")
        if saved and st.button("Delete selected"):
            clear_spec(st.session_state.saved_spec)
            st.rerun()

    st.divider()
    st.caption(f"ε = {settings.epsilon:g} • default cap {settings.length_cap}")

st.title("Coxeter Explorer")
st.markdown("Normal forms, inversion sets, descents and parabolic quotients.")
st.caption("Words use generator labels s0, s1, …; 'e' is the identity. "
           "Masks: 's0,s1', '~s3' for a complement, '' or 'S'.")

render_explorer_interface()
render_verify_interface()
render_hasse_interface()
render_history()

st.divider()
st.caption("Coxeter Explorer • results are exact set comparisons over normal forms")
