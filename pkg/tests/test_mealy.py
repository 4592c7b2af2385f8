import itertools

import pytest
from hypothesis import given

from mealygroups.errors import ArityMismatch, NonBijectivePermutation, NonInvertible, UnknownState
from mealygroups.mealy import (
    EIGHT_NAMES, MealyAutomaton, all_isomorphisms, build_automaton, canonical_rename, dual,
    eight_automata, find_isomorphism, identity_automaton, invert, inverse_name, is_bireversible,
    is_invertible,
)
from mealygroups.perm import Permutation

from strategies import automata

X = ("1", "2", "3")


def edges(A):
    return set(A.edges())


class TestBuild:
    def test_row_a_edges(self, A):
        e = edges(A)
        assert ("a", "1", "1", "a") in e
        assert ("a", "2", "3", "b") in e
        assert ("a", "3", "2", "c") in e

    def test_row_b_edge(self, A):
        assert ("b", "1", "3", "c") in edges(A)

    def test_all_figure_edges(self, A):
        figure = {
            ("a", "1", "1", "a"), ("b", "3", "1", "b"), ("c", "2", "1", "c"),
            ("a", "2", "3", "b"), ("b", "1", "3", "c"), ("c", "3", "3", "a"),
            ("a", "3", "2", "c"), ("c", "1", "2", "b"), ("b", "2", "2", "a"),
        }
        assert edges(A) == figure

    def test_identity(self):
        E = build_automaton(("s",), ("1",), [(("s",), Permutation.identity(1))])
        assert E == identity_automaton(("1",), "s")

    def test_errors(self):
        with pytest.raises(UnknownState):
            build_automaton(("a",), ("1",), [(("b",), Permutation.identity(1))])
        with pytest.raises(ArityMismatch):
            build_automaton(("a",), X, [(("a", "a"), Permutation.identity(3))])
        with pytest.raises(NonBijectivePermutation):
            build_automaton(("a",), ("1", "2"), [(("a", "a"), {"1": "1", "2": "1"})])

    def test_round_trip(self, A):
        rows = [(sec, perm) for _, sec, perm in A.rows()]
        assert build_automaton(A.states, A.alphabet, rows) == A


class TestDualInverse:
    def test_dual_rows(self, A):
        D = dual(A)
        rows = {s: (sec, p.render(D.alphabet)) for s, sec, p in D.rows()}
        assert rows["1"] == (("1", "3", "2"), "(b,c)")
        assert rows["2"] == (("3", "2", "1"), "(a,b)")
        assert rows["3"] == (("2", "1", "3"), "(a,c)")

    def test_invert_rows(self, A):
        I = invert(A)
        rows = {s: (sec, p.render(I.alphabet)) for s, sec, p in I.rows()}
        assert rows["a^-1"] == (("a^-1", "c^-1", "b^-1"), "(2,3)")
        assert rows["b^-1"] == (("b^-1", "a^-1", "c^-1"), "(1,3)")
        assert rows["c^-1"] == (("c^-1", "b^-1", "a^-1"), "(1,2)")

    def test_invert_identity(self):
        E = identity_automaton(X)
        assert find_isomorphism(invert(E), E) is not None

    def test_non_invertible(self):
        B = MealyAutomaton(("p", "q"), ("1", "2"), ((0, 1), (0, 1)), ((0, 1), (0, 0)))
        with pytest.raises(NonInvertible) as exc:
            invert(B)
        assert exc.value.state == "q"
        assert not is_invertible(B)

    def test_inverse_name(self):
        assert inverse_name("a") == "a^-1"
        assert inverse_name(inverse_name("a")) == "a"

    @given(automata())
    def test_dual_involution(self, B):
        assert dual(dual(B)) == B

    @given(automata(invertible=True))
    def test_invert_involution(self, B):
        assert invert(invert(B)) == B


class TestBireversible:
    def test_paper(self, A):
        assert is_invertible(A)
        assert is_invertible(dual(A))
        assert is_bireversible(A)

    def test_constant_output(self):
        B = MealyAutomaton(("p",), ("1", "2"), ((0, 0),), ((0, 0),))
        assert not is_invertible(B)
        assert not is_bireversible(B)

    def test_reset_automaton(self, reset_automaton):
        R = reset_automaton
        assert is_invertible(R)
        assert not is_bireversible(R)
        # brute force: some state of d(i(R)) sends two letters to one output
        D = dual(invert(R))
        assert any(len(set(row)) < len(row) for row in D.output)

    def test_one_state_identity(self):
        assert is_bireversible(identity_automaton(("1",)))


class TestIsomorphism:
    def test_self_duality_map(self, A):
        iso = find_isomorphism(A, dual(A))
        assert iso.state_map == {"a": "1", "b": "3", "c": "2"}
        assert iso.check(A, dual(A))

    def test_all_self_duality_maps(self, A):
        maps = [iso.state_map for iso in all_isomorphisms(A, dual(A))]
        assert maps == [{"a": "1", "b": "3", "c": "2"}, {"a": "1", "b": "2", "c": "3"}]

    def test_identity_self_map(self, A):
        iso = find_isomorphism(A, A)
        assert iso.state_map == {s: s for s in A.states}
        assert iso.letter_map == {x: x for x in A.alphabet}

    def test_paper_vs_inverse(self, A):
        # exhaustive over all 36 pairs of bijections
        I = invert(A)
        hits = 0
        for sp in itertools.permutations(I.states):
            for lp in itertools.permutations(I.alphabet):
                from mealygroups.mealy import AutomatonIsomorphism
                hits += AutomatonIsomorphism(dict(zip(A.states, sp)), dict(zip(A.alphabet, lp))).check(A, I)
        assert hits == 0
        assert find_isomorphism(A, I) is None

    @given(automata(max_states=3, max_letters=3))
    def test_found_maps_commute(self, B):
        C = canonical_rename(B)
        iso = find_isomorphism(B, C)
        assert iso is not None and iso.check(B, C)


class TestEight:
    def test_paper(self, A):
        eight = eight_automata(A)
        assert len(eight) == len(EIGHT_NAMES) == 8
        assert all(B.size == (3, 3) for B in eight)
        assert invert(dual(invert(dual(A)))) == dual(invert(dual(invert(A))))

    def test_isomorphism_classes(self, A):
        # computed by exhaustive search: the eight fall into four pairs
        eight = eight_automata(A)
        classes = []
        for i, B in enumerate(eight):
            for cls in classes:
                if find_isomorphism(eight[cls[0]], B):
                    cls.append(i)
                    break
            else:
                classes.append([i])
        names = [[EIGHT_NAMES[i] for i in cls] for cls in classes]
        assert names == [["A", "dA"], ["iA", "idA"], ["diA", "didA"], ["idiA", "ididA"]]

    def test_identity(self):
        E = identity_automaton(("1",))
        assert all(find_isomorphism(B, E) is not None for B in eight_automata(E))

    def test_requires_bireversible(self, reset_automaton):
        with pytest.raises(NonInvertible):
            eight_automata(reset_automaton)
