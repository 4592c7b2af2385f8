"""Hypothesis strategies shared by the property tests."""
from hypothesis import strategies as st

from mealygroups.action import GroupWord
from mealygroups.lamplighter.automaton import paper_automaton
from mealygroups.mealy import MealyAutomaton


@st.composite
def automata(draw, max_states=4, max_letters=4, invertible=False):
    m = draw(st.integers(1, max_states))
    d = draw(st.integers(1, max_letters))
    trans = tuple(tuple(draw(st.integers(0, m - 1)) for _ in range(d)) for _ in range(m))
    if invertible:
        out = tuple(tuple(draw(st.permutations(range(d)))) for _ in range(m))
    else:
        out = tuple(tuple(draw(st.integers(0, d - 1)) for _ in range(d)) for _ in range(m))
    return MealyAutomaton(tuple(f"s{i}" for i in range(m)), tuple(f"x{j}" for j in range(d)), trans, out)


def paper_words(max_len=8):
    return st.lists(st.integers(0, 5), max_size=max_len).map(
        lambda codes: GroupWord(paper_automaton(), tuple(codes)))


def vertices(max_len=8, min_len=0):
    return st.text(alphabet="123", min_size=min_len, max_size=max_len)
