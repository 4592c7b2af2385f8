import pytest

from mealygroups.lamplighter.automaton import paper_automaton, w as _w
from mealygroups.mealy import build_automaton, identity_automaton
from mealygroups.perm import Permutation


@pytest.fixture(scope="session")
def A():
    return paper_automaton()


@pytest.fixture(scope="session")
def w():
    return _w


@pytest.fixture(scope="session")
def identity3():
    return identity_automaton(("1", "2", "3"))


@pytest.fixture
def reset_automaton():
    # every state moves to p, outputs are the transposition on {1, 2}
    X = ("1", "2")
    swap = Permutation.from_cycles([("1", "2")], X)
    return build_automaton(("p", "q"), X, [(("p", "p"), swap), (("p", "p"), Permutation.identity(2))])
