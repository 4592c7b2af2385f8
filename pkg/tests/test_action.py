import itertools

import pytest
from hypothesis import given, settings, strategies as st

from mealygroups.action import (
    GroupWord, act_on_eventually_periodic, apply, canonical_key, commutator, element_automaton,
    equal, fixes_boundary_point, inverse, is_identity, minimal_automaton, moved_vertex, multiply,
    normalize_point, order_bounded, root_perm, section, word, wreath_decompose,
)
from mealygroups.errors import EmptyPeriod, NonInvertible, UnknownLetter, UnknownState
from mealygroups.mealy import MealyAutomaton, dual
from mealygroups.perm import Permutation

from strategies import paper_words, vertices

X = ("1", "2", "3")


class TestWords:
    def test_parse_and_render(self, A):
        g = word(A, "ab^-1c^3")
        assert str(g) == "ab^-1c^3"
        assert str(word(A, "aa^-1")) == "e"
        assert word(A, "") == word(A, "e")

    def test_unknown_state(self, A):
        with pytest.raises(UnknownState):
            word(A, "az")

    def test_inverse_of_non_invertible(self):
        B = MealyAutomaton(("p",), ("1", "2"), ((0, 0),), ((0, 0),))
        with pytest.raises(NonInvertible):
            word(B, "p^-1")

    def test_unknown_letter(self, A):
        with pytest.raises(UnknownLetter):
            apply(word(A, "a"), "14")


class TestExamples:
    def test_apply(self, A, w):
        assert apply(w("a"), "123") == "131"

    def test_root_perm(self, A, w):
        assert root_perm(w("a^-1b")) == Permutation.from_cycles([("1", "3", "2")], X)

    @pytest.mark.parametrize("g,s", [
        ("ba", "bc"), ("bb", "ba"), ("bc", "bb"), ("ca", "cb"), ("cb", "cc"), ("cc", "ca"),
    ])
    def test_pair_sections(self, w, g, s):
        assert section(w(g), "11") == w(s)

    @pytest.mark.parametrize("g,expected", [
        ("ab^-1", "(ab^-1, bc^-1, ca^-1)(1,3,2)"),
        ("bc^-1", "(ca^-1, ab^-1, bc^-1)(1,3,2)"),
    ])
    def test_decompositions(self, w, g, expected):
        assert wreath_decompose(w(g)).render() == expected

    def test_orders(self, w):
        assert order_bounded(w("ab^-1"), 10) == 3
        assert order_bounded(w("a^-1b"), 10) == 3
        assert order_bounded(w("a"), 10) is None

    def test_boundary_actions(self, w):
        assert act_on_eventually_periodic(w("b"), "", "1") == ("", "32")
        assert act_on_eventually_periodic(w("a"), "2", "3") == ("3", "1")

    def test_first_letter_acts_first(self, w):
        # apply(ab, v) = apply(b, apply(a, v))
        for v in ("1", "2", "3", "23", "312"):
            assert apply(w("ab"), v) == apply(w("b"), apply(w("a"), v))


@settings(max_examples=150, deadline=None)
@given(paper_words(), vertices(5), vertices(5))
def test_splice_rule(g, v, u):
    assert apply(g, v + u) == apply(g, v) + apply(section(g, v), u)


@settings(max_examples=150, deadline=None)
@given(paper_words(), vertices(6), st.integers(0, 6))
def test_prefix_and_length(g, v, k):
    img = apply(g, v)
    assert len(img) == len(v)
    assert apply(g, v[:k]) == img[:k]


@settings(max_examples=150, deadline=None)
@given(paper_words(), paper_words(), vertices(6))
def test_composition_and_sections(g, h, v):
    gh = multiply(g, h)
    assert apply(gh, v) == apply(h, apply(g, v))
    assert equal(section(gh, v), multiply(section(g, v), section(h, apply(g, v))))


@settings(max_examples=150, deadline=None)
@given(paper_words(), vertices(6))
def test_inverse_laws(g, v):
    assert apply(inverse(g), apply(g, v)) == v
    assert is_identity(multiply(g, inverse(g)))
    assert equal(section(inverse(g), apply(g, v)), inverse(section(g, v)))


def spelled(g):
    return "".join(name for name, _ in g.letters)


def test_dual_correspondence(A):
    # for positive words the dual swaps the roles of image and section
    D = dual(A)
    for n, m in itertools.product(range(1, 5), repeat=2):
        for v in map("".join, itertools.product(A.alphabet, repeat=n)):
            dv = word(D, v)
            for s in map("".join, itertools.product(A.states, repeat=m)):
                g = word(A, s)
                assert apply(dv, s) == spelled(section(g, v))
                assert apply(g, v) == spelled(section(dv, s))


class TestWordProblem:
    def test_element_automaton_examples(self, w):
        E = element_automaton(w("a^-1b"))
        assert [str(g) for g in E.nodes] == ["a^-1b", "a^-1c", "c^-1b", "b^-1a", "c^-1a", "b^-1c"]
        assert E.classes == [[0, 4, 5], [1, 2, 3]]
        assert len(element_automaton(w("a")).nodes) == 3
        assert element_automaton(w("ab^-1ca^-1")).seed_is_identity is False

    def test_identity_detection(self, w):
        assert is_identity(w("ab^-1ca^-1") ** 0)
        assert is_identity(w("ab^-1") ** 3)
        assert not is_identity(w("ab^-1") ** 2)
        assert element_automaton(w("ab^-1") ** 3).seed_is_identity

    def test_literal_closure_agrees_with_fast_path(self, A):
        codes = range(6)
        for n in range(5):
            for c in itertools.product(codes, repeat=n):
                g = GroupWord(A, c)
                if len(g) != n:
                    continue
                lit = element_automaton(g).minimize()
                assert lit.key == minimal_automaton(g).key, str(g)

    @settings(max_examples=120, deadline=None)
    @given(paper_words(6), paper_words(6))
    def test_key_iff_equal(self, g, h):
        assert (canonical_key(g) == canonical_key(h)) == is_identity(multiply(g, inverse(h)))

    @settings(max_examples=150, deadline=None)
    @given(paper_words(8))
    def test_moved_vertex_sound(self, g):
        v = moved_vertex(g)
        if v is None:
            assert is_identity(g)
        else:
            assert apply(g, v) != v
            assert all(apply(g, v[:k]) == v[:k] for k in range(len(v)))

    def test_commutator(self, w):
        assert is_identity(commutator(w("a"), w("a^2")))
        assert not is_identity(commutator(w("a"), w("b")))


class TestBoundary:
    def test_normalize(self):
        assert normalize_point((1, 2, 2), (2, 2)) == ((1,), (2,))
        assert normalize_point((3, 1, 2), (1, 2)) == ((3,), (1, 2))
        assert normalize_point((2,), (1, 2)) == ((), (2, 1))
        with pytest.raises(EmptyPeriod):
            normalize_point((), ())

    def test_empty_period(self, w):
        with pytest.raises(EmptyPeriod):
            act_on_eventually_periodic(w("a"), "1", "")

    def test_a_fixes_ones(self, w):
        assert fixes_boundary_point(w("a"), "", "1")
        assert fixes_boundary_point(w("cac^-1"), "", "2")
        assert not fixes_boundary_point(w("a"), "", "2")

    @settings(max_examples=100, deadline=None)
    @given(paper_words(5), vertices(3), vertices(3, min_len=1))
    def test_matches_finite_prefixes(self, g, u, p):
        ru, rp = act_on_eventually_periodic(g, u, p)
        n = len(u) + 4 * len(p) * 3
        lhs = apply(g, (u + p * n)[:n])
        rhs = (ru + rp * n)[:n]
        assert lhs == rhs
