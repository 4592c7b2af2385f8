import itertools

import pytest

from mealygroups.action import apply, canonical_key, equal, word
from mealygroups.analysis import (
    all_words, ball_enumerate, dual_section_transitive, dual_section_transitive_bruteforce,
    level_orbits, schreier_graph, stabilizer_in_ball, state_generators, with_inverses,
)
from mealygroups.errors import EmptyPeriod
from mealygroups.lamplighter.automaton import alpha
from mealygroups.mealy import MealyAutomaton, canonical_rename


@pytest.fixture(scope="module")
def gens(A):
    return state_generators(A)


class TestOrbits:
    @pytest.mark.parametrize("n", range(1, 8))
    def test_paper_transitive(self, A, gens, n):
        assert level_orbits(A, gens, n).transitive

    def test_identity_not_transitive(self, identity3):
        rep = level_orbits(identity3, state_generators(identity3), 1)
        assert rep.orbit_count == 3 and rep.orbit_sizes == (1, 1, 1)

    def test_cyclic_subgroup(self, A):
        rep = level_orbits(A, [word(A, "ab^-1")], 2)
        assert sum(rep.orbit_sizes) == 9
        assert max(rep.orbit_sizes) <= 3

    def test_rejects_level_zero(self, A, gens):
        with pytest.raises(ValueError):
            level_orbits(A, gens, 0)


class TestSchreier:
    def test_level_one(self, A, gens):
        G = schreier_graph(A, gens, 1)
        assert len(G.vertices) == 3 and len(G.edges) == 9 and G.connected

    def test_level_three(self, A, gens):
        G = schreier_graph(A, gens, 3)
        assert len(G.vertices) == 27 and G.connected

    def test_identity_disconnected(self, identity3):
        assert not schreier_graph(identity3, state_generators(identity3), 2).connected

    def test_level_zero(self, A, gens):
        G = schreier_graph(A, gens, 0)
        assert G.vertices == ("",) and G.connected

    def test_projection(self, A, gens):
        # dropping the last letter maps level-3 edges onto level-2 edges
        lower = set(schreier_graph(A, gens, 2).edges)
        for s, g, t in schreier_graph(A, gens, 3).edges:
            assert (s[:-1], g, t[:-1]) in lower


class TestBall:
    def test_paper_counts(self, gens):
        assert ball_enumerate(gens, 5).counts == [1, 7, 29, 107, 357, 1155]

    def test_pairwise_agrees(self, gens):
        fast = ball_enumerate(gens, 3)
        slow = ball_enumerate(gens, 3, dedup="pairwise")
        assert fast.counts == slow.counts
        assert [k for k, _ in fast.representatives] == [k for k, _ in slow.representatives]

    def test_representatives_distinct(self, gens):
        reps = [g for _, g in ball_enumerate(gens, 2).representatives]
        for g, h in itertools.combinations(reps, 2):
            assert not equal(g, h)

    def test_alpha_and_a(self, A):
        # alpha has order three, so alpha^-1 is a new element
        assert ball_enumerate([word(A, "a"), alpha(A)], 1).counts == [1, 5]

    def test_renaming_invariance(self, A, gens):
        B = canonical_rename(A)
        assert ball_enumerate(state_generators(B), 4).counts == ball_enumerate(gens, 4).counts

    def test_radius_zero(self, gens):
        assert ball_enumerate(gens, 0).counts == [1]

    def test_with_inverses_order(self, A, gens):
        assert [str(g) for g in with_inverses(gens)] == ["a", "a^-1", "b", "b^-1", "c", "c^-1"]


class TestDualTransitivity:
    @pytest.mark.parametrize("n", range(0, 5))
    def test_paper(self, A, n):
        assert dual_section_transitive(A, n)
        assert dual_section_transitive_bruteforce(A, n)

    def test_fixed_states_fail(self):
        B = MealyAutomaton(("p", "q"), ("1", "2"), ((0, 0), (1, 1)), ((0, 1), (0, 1)))
        assert not dual_section_transitive(B, 1)
        assert not dual_section_transitive_bruteforce(B, 1)

    def test_not_bireversible(self, reset_automaton):
        with pytest.raises(ValueError):
            dual_section_transitive(reset_automaton, 1)

    def test_agrees_with_bruteforce_on_permutation_automata(self):
        # every state fixed, permutation outputs: bireversible, decoupled
        B = MealyAutomaton(("p", "q"), ("1", "2"), ((0, 0), (1, 1)), ((1, 0), (0, 1)))
        for n in range(3):
            assert dual_section_transitive(B, n) == dual_section_transitive_bruteforce(B, n)


class TestStabilizer:
    def test_two_omega_small_radius(self, gens):
        found = stabilizer_in_ball(gens, 2, "", "2")
        assert [str(g) for _, g in found] == ["e"]

    def test_two_omega_cyclic(self, A, gens):
        # every fixer in the radius-4 ball is a power of c a c^-1
        g = word(A, "cac^-1")
        found = stabilizer_in_ball(gens, 4, "", "2")
        assert len(found) == 5
        powers = {canonical_key(g ** j) for j in range(-4, 5)}
        assert all(k in powers for k, _ in found)

    def test_one_omega(self, A, gens):
        found = {k for k, _ in stabilizer_in_ball(gens, 4, "", "1")}
        assert found == {canonical_key(word(A, "a") ** j) for j in range(-4, 5)}

    def test_fixers_fix_prefixes(self, gens):
        for _, g in stabilizer_in_ball(gens, 3, "", "2"):
            assert apply(g, "2" * 10) == "2" * 10

    def test_empty_period(self, gens):
        with pytest.raises(EmptyPeriod):
            stabilizer_in_ball(gens, 1, "", "")


def test_all_words(A):
    assert all_words(A, 2)[:4] == ["11", "12", "13", "21"]
