"""
DOT export of the weak and Bruhat covering relations.

Nodes are numbered by their position in the universe (ShortLex order) and
labelled by normal forms; nodes of equal length share a rank.
"""
import logging
from typing import Dict, List, Tuple

from services.descent_calculus import DescentCalculus, Universe
from services.element_engine import GroupElement

logger = logging.getLogger(__name__)

ORDERS = ("weak", "bruhat")


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def covering_edges(calculus: DescentCalculus, universe: Universe,
                   order: str) -> List[Tuple[GroupElement, GroupElement]]:
    if order == "weak":
        return calculus.weak_covers(universe)
    if order == "bruhat":
        return calculus.bruhat_covers(universe)
    raise ValueError(f"order must be one of {ORDERS}, got {order!r}")


def hasse_diagram(calculus: DescentCalculus, universe: Universe, order: str = "weak") -> str:
    """
    Hasse diagram of the chosen order on the universe, as a DOT digraph
    with edges pointing upwards.

    A truncated ball is flagged by a comment and a graph label.
    """
    group = calculus.group
    edges = covering_edges(calculus, universe, order)
    name = f"{order}_{group.name}".replace(" ", "_")
    result = [f"digraph {_quote(name)} {{", "    rankdir=BT;"]
    if universe.truncated:
        logger.warning(f"Hasse diagram of {group.name} covers only lengths up to {universe.cap}")
        result.append(f"    // truncated: ball of length <= {universe.cap}")
        result.append(f"    label={_quote(f'{group.name}, truncated at length {universe.cap}')};")

    layers: Dict[int, List[GroupElement]] = {}
    for w in universe:
        layers.setdefault(w.length, []).append(w)
    for length in sorted(layers):
        result.append("    { rank=same;")
        for w in layers[length]:
            label = group.format_element(w)
            result.append(f"        n{universe.index(w)} [label={_quote(label)}];")
        result.append("    }")

    for u, v in edges:
        result.append(f"    n{universe.index(u)} -> n{universe.index(v)};")
    result.append("}")
    logger.info(f"Hasse diagram ({order}) of {group.name}: {len(universe)} nodes, {len(edges)} edges")
    return "\n".join(result) + "\n"
