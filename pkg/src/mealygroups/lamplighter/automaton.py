"""The 3-state automaton generating Z_3 wr Z and the words built from it."""
from __future__ import annotations

from functools import lru_cache

from ..action import GroupWord, word
from ..mealy import MealyAutomaton, build_automaton
from ..perm import Permutation

LETTERS = ("1", "2", "3")
STATES = ("a", "b", "c")

# wreath recursion: a=(a,b,c)(2,3), b=(c,a,b)(1,3), c=(b,c,a)(1,2)
_ROWS = {
    "a": (("a", "b", "c"), [("2", "3")]),
    "b": (("c", "a", "b"), [("1", "3")]),
    "c": (("b", "c", "a"), [("1", "2")]),
}


@lru_cache(maxsize=None)
def paper_automaton() -> MealyAutomaton:
    rows = [(_ROWS[s][0], Permutation.from_cycles(_ROWS[s][1], LETTERS)) for s in STATES]
    return build_automaton(STATES, LETTERS, rows)


def w(text: str, A: MealyAutomaton | None = None) -> GroupWord:
    """Shorthand: ``w("ab^-1")`` over the paper automaton."""
    return word(A or paper_automaton(), text)


def alpha(A: MealyAutomaton | None = None) -> GroupWord:
    return w("ab^-1", A)


def conjugate(n: int, exponent: int = 1, A: MealyAutomaton | None = None) -> GroupWord:
    """``a^-n alpha^exponent a^n``."""
    a = w("a", A)
    return a ** (-n) * alpha(A) ** exponent * a ** n


def ord_(g: GroupWord) -> int:
    """Sum of the exponents of the letters of ``g``."""
    return sum(sign for _, sign in g.letters)


ALT3 = (
    Permutation((0, 1, 2)),   # tau_1 = identity
    Permutation((1, 2, 0)),   # tau_2 = (1,2,3)
    Permutation((2, 0, 1)),   # tau_3 = (1,3,2)
)
