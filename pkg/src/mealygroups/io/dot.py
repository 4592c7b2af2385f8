"""Graphviz DOT output for automata and Schreier graphs."""
from __future__ import annotations

from ..analysis import SchreierGraph
from ..mealy import MealyAutomaton


def _q(s) -> str:
    return '"' + str(s).replace("\\", "\\\\").replace('"', '\\"') + '"'


def render_dot(obj: MealyAutomaton | SchreierGraph, name: str | None = None) -> str:
    """Deterministic DOT digraph; automaton edges are labelled ``x|y``."""
    lines = []
    if isinstance(obj, MealyAutomaton):
        lines.append(f"digraph {_q(name or 'automaton')} {{")
        for s in obj.states:
            lines.append(f"  {_q(s)};")
        for s, x, y, t in obj.edges():
            lines.append(f"  {_q(s)} -> {_q(t)} [label={_q(f'{x}|{y}')}];")
    elif isinstance(obj, SchreierGraph):
        lines.append(f"digraph {_q(name or f'schreier_level_{obj.level}')} {{")
        for v in obj.vertices:
            lines.append(f"  {_q(v)};")
        for s, g, t in obj.edges:
            lines.append(f"  {_q(s)} -> {_q(t)} [label={_q(g)}];")
    else:
        raise TypeError(f"cannot render {type(obj).__name__}")
    lines.append("}")
    return "\n".join(lines) + "\n"
