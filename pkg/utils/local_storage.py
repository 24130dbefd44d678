"""
Saved group specs for the explorer.
Specs live in Streamlit session state, serialized in the group-spec JSON format.
"""
import logging
from typing import List, Optional

import streamlit as st

from services.coxeter_system import GroupSpec, GroupSpecError, parse_group_spec, serialize_group_spec

logger = logging.getLogger(__name__)

_PREFIX = "coxeter_spec_"


def save_spec(name: str, spec: GroupSpec) -> None:
    """Store a group spec under a name"""
    if not isinstance(name, str) or not name.strip():
        raise ValueError("spec name must be a non-empty string")
    st.session_state[f"{_PREFIX}{name.strip()}"] = serialize_group_spec(spec)


def get_spec(name: str) -> Optional[GroupSpec]:
    """Load a stored group spec, or None if it is missing or unreadable"""
    stored = st.session_state.get(f"{_PREFIX}{name}")
    if not stored:
        return None
    try:
        return parse_group_spec(stored)
    except GroupSpecError as e:
        logger.error(f"Stored spec '{name}' is unreadable: {e}")
        st.error(f"Error loading saved group '{name}': {e}")
        return None


def clear_spec(name: str) -> None:
    storage_key = f"{_PREFIX}{name}"
    if storage_key in st.session_state:
        del st.session_state[storage_key]


def list_specs() -> List[str]:
    return sorted(key[len(_PREFIX):] for key in st.session_state.keys() if key.startswith(_PREFIX))
