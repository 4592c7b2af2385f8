"""Bounded computational checks of the lemmas about the paper automaton."""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from ..action import (
    GroupWord, apply, canonical_key, commutator, equal, is_identity, minimal_automaton,
    root_perm, section,
)
from ..analysis import ball_enumerate, dual_section_transitive, state_generators
from ..errors import IdentityInput
from ..mealy import MealyAutomaton
from ..perm import Permutation
from ..refine import MinimalAutomaton, product
from .automaton import conjugate, ord_, paper_automaton, w
from .oracle import generator_images, oracle_ball_counts, phi
from .wgroup import in_W


# ---------------------------------------------------------------------------
# powers a^(3^k), b^(3^k), c^(3^k)
# ---------------------------------------------------------------------------

@dataclass
class AkReport:
    k: int
    triple: tuple[str, str, str]        # (x_k, y_k, z_k)
    pattern_ok: bool
    sections_ok: bool
    square_section_ok: bool             # b_k^2 |_{x_k} = c_k b_k
    root_ok: bool                       # c_k b_k acts as (1,2,3) on X
    printed_y_k: str | None             # 2 1^(3^(k-1)+2) as printed, for k >= 1

    @property
    def ok(self) -> bool:
        return self.pattern_ok and self.sections_ok and self.square_section_ok and self.root_ok


def a_k_report(k: int, A: MealyAutomaton | None = None) -> AkReport:
    A = A or paper_automaton()
    n = 3**k
    gens = {s: w(s, A) ** n for s in "abc"}
    start = "1" * n
    orbit = {start}
    todo = [start]
    while todo:
        v = todo.pop()
        for g in gens.values():
            t = apply(g, v)
            if t not in orbit:
                orbit.add(t)
                todo.append(t)
    rest = sorted(orbit - {start})
    triple = tuple(([start] + rest + ["", ""])[:3])
    x, y, z = triple
    ak, bk, ck = gens["a"], gens["b"], gens["c"]
    expected_moves = {
        "a": {x: x, y: z, z: y},
        "b": {x: z, y: y, z: x},
        "c": {x: y, y: x, z: z},
    }
    pattern_ok = len(orbit) == 3 and all(
        apply(gens[s], v) == t for s, mv in expected_moves.items() for v, t in mv.items()
    )
    expected_sections = {
        "a": (ak, bk, ck),
        "b": (ck, ak, bk),
        "c": (bk, ck, ak),
    }
    sections_ok = pattern_ok and all(
        equal(section(gens[s], v), target)
        for s, targets in expected_sections.items()
        for v, target in zip(triple, targets)
    )
    square_ok = pattern_ok and apply(bk * bk, x) == x and equal(section(bk * bk, x), ck * bk)
    root_ok = root_perm(ck * bk) == Permutation.from_cycles([("1", "2", "3")], A.alphabet)
    printed = "2" + "1" * (3 ** (k - 1) + 2) if k >= 1 else None
    return AkReport(k, triple, pattern_ok, sections_ok, square_ok, root_ok, printed)


def verify_a_k_recursion(k_max: int = 2, A: MealyAutomaton | None = None) -> list[AkReport]:
    if k_max > 2:
        raise ValueError("k_max must be <= 2")
    return [a_k_report(k, A) for k in range(k_max + 1)]


# ---------------------------------------------------------------------------
# free semigroup
# ---------------------------------------------------------------------------

def positive_words(A: MealyAutomaton, max_len: int):
    for n in range(1, max_len + 1):
        for tup in itertools.product(range(len(A.states)), repeat=n):
            yield GroupWord(A, tuple(2 * s for s in tup))


def free_semigroup_check(L: int, A: MealyAutomaton | None = None) -> bool:
    """Positive words of length <= L are pairwise distinct elements.

    Also confirms, level by level, that every positive word is a section of
    every other word of the same length (so ``a^(n-1) b`` is always reachable).
    """
    A = A or paper_automaton()
    if L < 1:
        return True
    keys = set()
    count = 0
    for g in positive_words(A, L):
        keys.add(canonical_key(g))
        count += 1
    if len(keys) != count:
        return False
    return all(dual_section_transitive(A, n) for n in range(1, L + 1))


def free_semigroup_collisions(L: int, A: MealyAutomaton | None = None) -> list[tuple[str, str]]:
    A = A or paper_automaton()
    seen: dict = {}
    out = []
    for g in positive_words(A, L):
        k = canonical_key(g)
        if k in seen:
            out.append((str(seen[k]), str(g)))
        else:
            seen[k] = g
    return out


# ---------------------------------------------------------------------------
# the subgroup N generated by the conjugates a^-n alpha a^n
# ---------------------------------------------------------------------------

def lamp_word(exponents: dict[int, int], A: MealyAutomaton | None = None) -> GroupWord:
    """Product of ``a^-n alpha^e a^n`` over increasing positions ``n``."""
    A = A or paper_automaton()
    g = GroupWord(A, ())
    for n in sorted(exponents):
        if exponents[n] % 3:
            g = g * conjugate(n, exponents[n], A)
    return g


def n_independence_failures(support_bound: int, A: MealyAutomaton | None = None) -> list[str]:
    positions = range(-support_bound, support_bound + 1)
    bad = []
    for eps in itertools.product((0, 1, -1), repeat=len(positions)):
        if not any(eps):
            continue
        g = lamp_word(dict(zip(positions, eps)), A)
        if is_identity(g):
            bad.append(str(g))
    return bad


def commutator_failures(bound: int, lo: int | None = None,
                        A: MealyAutomaton | None = None) -> list[tuple[int, int]]:
    lo = -bound if lo is None else lo
    bad = []
    for n in range(lo, bound + 1):
        for m in range(lo, bound + 1):
            if not is_identity(commutator(conjugate(n, 1, A), conjugate(m, 1, A))):
                bad.append((n, m))
    return bad


def verify_N_independence(support_bound: int, A: MealyAutomaton | None = None) -> bool:
    """No non-trivial product of distinct-position conjugates is trivial; conjugates commute."""
    if support_bound < 1:
        raise ValueError("support_bound must be >= 1")
    return (not n_independence_failures(support_bound, A)
            and not commutator_failures(support_bound, A=A))


# ---------------------------------------------------------------------------
# finitary elements
# ---------------------------------------------------------------------------

def _trivial_states(M: MinimalAutomaton) -> set[int]:
    d = len(M.output[0])
    return {q for q in range(M.size)
            if M.output[q] == tuple(range(d)) and all(t == q for t in M.transition[q])}


def level_section_states(M: MinimalAutomaton, depth: int) -> list[set[int]]:
    """States of the minimal automaton reached by the vertices of each level 0..depth."""
    levels = [{0}]
    for _ in range(depth):
        levels.append({t for q in levels[-1] for t in M.transition[q]})
    return levels


def verify_not_finitary(g: GroupWord, depth: int = 8) -> bool:
    """Every level up to ``depth`` carries a non-trivial section of ``g``."""
    if is_identity(g):
        raise IdentityInput("the identity is finitary")
    M = minimal_automaton(g)
    triv = _trivial_states(M)
    return all(lvl - triv for lvl in level_section_states(M, depth))


# ---------------------------------------------------------------------------
# words with ord(w) = 0
# ---------------------------------------------------------------------------

def random_ord_zero_word(rng: random.Random, max_len: int = 8, A: MealyAutomaton | None = None) -> GroupWord:
    """Random non-trivial freely reduced word with exponent sum 0 and length <= max_len."""
    A = A or paper_automaton()
    m = len(A.states)
    while True:
        half = rng.randint(1, max_len // 2)
        codes = [2 * rng.randrange(m) for _ in range(half)] + [2 * rng.randrange(m) + 1 for _ in range(half)]
        rng.shuffle(codes)
        g = GroupWord(A, tuple(codes))
        if g.codes:
            assert ord_(g) == 0
            return g


@dataclass
class OrdZeroReport:
    samples: int
    not_in_w: list = field(default_factory=list)
    not_exponent_3: list = field(default_factory=list)
    not_commuting: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (self.not_in_w or self.not_exponent_3 or self.not_commuting)


def ord_zero_property(samples: int = 500, max_len: int = 8, depth: int = 6,
                      peers: int = 10, seed: int = 0,
                      A: MealyAutomaton | None = None) -> OrdZeroReport:
    rng = random.Random(seed)
    words = [random_ord_zero_word(rng, max_len, A) for _ in range(samples)]
    report = OrdZeroReport(samples)
    for g in words:
        if not in_W(g, depth):
            report.not_in_w.append(str(g))
        M = minimal_automaton(g)
        if not product(product(M, M), M).is_trivial:
            report.not_exponent_3.append(str(g))
        for u in rng.sample(words, peers):
            U = minimal_automaton(u)
            if product(M, U).key != product(U, M).key:
                report.not_commuting.append((str(g), str(u)))
    return report


# ---------------------------------------------------------------------------
# comparison with the abstract lamplighter group
# ---------------------------------------------------------------------------

def reduced_words(A: MealyAutomaton, max_len: int):
    """All freely reduced words of length <= max_len, shortlex order."""
    codes = range(2 * len(A.states))
    layer = [()]
    yield GroupWord(A, ())
    for _ in range(max_len):
        nxt = [t + (c,) for t in layer for c in codes if not t or t[-1] != c ^ 1]
        for t in nxt:
            yield GroupWord(A, t)
        layer = nxt


def phi_kernel_mismatches(max_len: int = 5, convention: str = "plus",
                          A: MealyAutomaton | None = None) -> list[str]:
    """Words where triviality in the automaton group and under phi disagree."""
    A = A or paper_automaton()
    return [str(g) for g in reduced_words(A, max_len)
            if is_identity(g) != phi(g, convention).is_identity]


def ball_comparison(radius: int = 5, convention: str = "plus",
                    A: MealyAutomaton | None = None) -> tuple[list[int], list[int]]:
    """Ball sizes in the automaton group and in the oracle, same generators."""
    A = A or paper_automaton()
    ours = ball_enumerate(state_generators(A), radius).counts
    imgs = generator_images(convention)
    theirs = oracle_ball_counts([imgs[s] for s in A.states], radius, convention)
    return ours, theirs
