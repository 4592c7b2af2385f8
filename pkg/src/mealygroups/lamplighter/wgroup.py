"""The abelian subgroup W, its perm sequences, and the T-transformations."""
from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from ..action import GroupWord, apply, equal, root_perm, section
from ..errors import NotInW
from ..levels import constant_level_perms, decomposition_action, level_action
from ..mealy import MealyAutomaton, build_automaton
from ..perm import Permutation
from .automaton import ALT3, STATES, alpha, conjugate, paper_automaton, w


@dataclass(frozen=True)
class PermSequence:
    """Depth-indexed sequence of Alt_3 permutations, stored as tau indices 0..2."""

    taus: tuple[int, ...]

    @classmethod
    def trivial(cls, depth: int) -> PermSequence:
        return cls((0,) * depth)

    @classmethod
    def from_perms(cls, perms: Sequence[Permutation]) -> PermSequence:
        try:
            return cls(tuple(ALT3.index(p) for p in perms))
        except ValueError:
            raise NotInW("permutation outside Alt_3") from None

    @property
    def depth(self) -> int:
        return len(self.taus)

    @property
    def perms(self) -> tuple[Permutation, ...]:
        return tuple(ALT3[t] for t in self.taus)

    def act(self, v: Sequence[int]) -> tuple[int, ...]:
        if len(v) > self.depth:
            raise ValueError("vertex deeper than the sequence")
        return tuple(ALT3[t](x) for t, x in zip(self.taus, v))

    def render(self) -> str:
        return " ".join(p.render(("1", "2", "3")) if not p.is_identity else "e" for p in self.perms)


def _level_perms(g: GroupWord, depth: int):
    return constant_level_perms(level_action(g, depth), len(g.automaton.alphabet), depth)


def in_W(g: GroupWord, depth: int) -> bool:
    """Level-wise constant Alt_3 root permutations on every level below ``depth``."""
    if depth < 1:
        raise ValueError("depth must be >= 1")
    perms = _level_perms(g, depth)
    return perms is not None and all(p in ALT3 for p in perms)


def perm_sequence(g: GroupWord, depth: int) -> PermSequence:
    perms = _level_perms(g, depth)
    if perms is None or not all(p in ALT3 for p in perms):
        raise NotInW(f"{g} is not in W to depth {depth}")
    return PermSequence.from_perms(perms)


# ---------------------------------------------------------------------------
# T-transformations
# ---------------------------------------------------------------------------

T_NAMES = ("T1", "T2", "T3")
TAU_NAMES = ("t1", "t2", "t3")


def _t_rows(t3_perm):
    return [
        (("T1", "T2", "T3"), Permutation.from_cycles([("t2", "t3")], TAU_NAMES)),
        (("T3", "T1", "T2"), Permutation.from_cycles([("t1", "t3")], TAU_NAMES)),
        (("T2", "T3", "T1"), Permutation.from_cycles([t3_perm], TAU_NAMES)),
    ]


@lru_cache(maxsize=None)
def t_automaton() -> MealyAutomaton:
    """T1=(T1,T2,T3)(t2,t3), T2=(T3,T1,T2)(t1,t3), T3=(T2,T3,T1)(t1,t2).

    This is the recursion of the paper automaton under T_i -> i-th state,
    t_i -> letter i, and it is what Table 1 yields line by line.
    """
    return build_automaton(T_NAMES, TAU_NAMES, _t_rows(("t1", "t2")))


def t_automaton_as_printed() -> MealyAutomaton:
    """Variant with T3 carrying (t1,t3); disagrees with Table 1 (kept for tests)."""
    return build_automaton(T_NAMES, TAU_NAMES, _t_rows(("t1", "t3")))


def apply_T(i: int, s: PermSequence) -> PermSequence:
    """``T_i`` (``i`` in 1..3) acting on a perm sequence."""
    if i not in (1, 2, 3):
        raise ValueError("T index must be 1, 2 or 3")
    g = GroupWord(t_automaton(), (2 * (i - 1),))
    return PermSequence(tuple(TAU_NAMES.index(x) for x in apply(g, [TAU_NAMES[t] for t in s.taus])))


def apply_T_word(indices: Sequence[int], s: PermSequence) -> PermSequence:
    """Apply ``T_{i1}`` first, then ``T_{i2}``, ...  (innermost conjugation first)."""
    for i in indices:
        s = apply_T(i, s)
    return s


def conjugation_type(x: str, y: str) -> int:
    """Type (1, 2 or 3) of ``x^-1 g y``."""
    k = (STATES.index(y) - STATES.index(x)) % 3
    return 1 + k


# ---------------------------------------------------------------------------
# Table 1: decomposition of x^-1 g y for g = (h, h, h) pi in W
# ---------------------------------------------------------------------------

def _row(root, *pairs):
    return root, tuple((p[0], p[1]) for p in pairs)


# key (pi, x, y) -> (root of x^-1 g y, ((x1, y1), (x2, y2), (x3, y3))) meaning
# x^-1 g y = (x1^-1 h y1, x2^-1 h y2, x3^-1 h y3) root
TABLE1 = {
    ("e", "a", "a"): _row("e", "aa", "cc", "bb"),
    ("e", "b", "b"): _row("e", "bb", "aa", "cc"),
    ("e", "c", "c"): _row("e", "cc", "bb", "aa"),
    ("e", "a", "b"): _row("132", "ac", "cb", "ba"),
    ("e", "b", "c"): _row("132", "ba", "ac", "cb"),
    ("e", "c", "a"): _row("132", "cb", "ba", "ac"),
    ("e", "a", "c"): _row("123", "ab", "ca", "bc"),
    ("e", "b", "a"): _row("123", "bc", "ab", "ca"),
    ("e", "c", "b"): _row("123", "ca", "bc", "ab"),
    ("123", "a", "a"): _row("132", "ab", "ca", "bc"),
    ("123", "b", "b"): _row("132", "bc", "ab", "ca"),
    ("123", "c", "c"): _row("132", "ca", "bc", "ab"),
    ("123", "a", "b"): _row("123", "aa", "cc", "bb"),
    ("123", "b", "c"): _row("123", "bb", "aa", "cc"),
    ("123", "c", "a"): _row("123", "cc", "bb", "aa"),
    ("123", "a", "c"): _row("e", "ac", "cb", "ba"),
    ("123", "b", "a"): _row("e", "ba", "ac", "cb"),
    ("123", "c", "b"): _row("e", "cb", "ba", "ac"),
    ("132", "a", "a"): _row("123", "ac", "cb", "ba"),
    ("132", "b", "b"): _row("123", "ba", "ac", "cb"),
    ("132", "c", "c"): _row("123", "cb", "ba", "ac"),
    ("132", "a", "b"): _row("e", "ab", "ca", "bc"),
    ("132", "b", "c"): _row("e", "bc", "ab", "ca"),
    ("132", "c", "a"): _row("e", "ca", "bc", "ab"),
    ("132", "a", "c"): _row("132", "aa", "cc", "bb"),
    ("132", "b", "a"): _row("132", "bb", "aa", "cc"),
    ("132", "c", "b"): _row("132", "cc", "bb", "aa"),
}

PI = {"e": ALT3[0], "123": ALT3[1], "132": ALT3[2]}
PI_NAME = {v: k for k, v in PI.items()}


def t_automaton_from_table() -> MealyAutomaton:
    """Read the T-recursion off Table 1, checking each type row is consistent."""
    rows = {}
    for (pi, x, y), (root, pairs) in TABLE1.items():
        i = conjugation_type(x, y)
        types = {conjugation_type(p, q) for p, q in pairs}
        if len(types) != 1:
            raise ValueError(f"mixed section types in line {(pi, x, y)}")
        entry = (ALT3.index(PI[root]), types.pop())
        key = (i, ALT3.index(PI[pi]))
        if rows.setdefault(key, entry) != entry:
            raise ValueError(f"inconsistent lines for type {i}, pi={pi}")
    out = []
    for i in (1, 2, 3):
        sections = tuple(T_NAMES[rows[(i, t)][1] - 1] for t in range(3))
        perm = Permutation(tuple(rows[(i, t)][0] for t in range(3)))
        out.append((sections, perm))
    return build_automaton(T_NAMES, TAU_NAMES, out)


def random_w_element(rng: random.Random, A: MealyAutomaton | None = None,
                     max_factors: int = 6, max_shift: int = 3) -> GroupWord:
    """Product of up to ``max_factors`` conjugates ``a^-n alpha^(+-1) a^n``, ``|n| <= max_shift``."""
    A = A or paper_automaton()
    g = GroupWord(A, ())
    for _ in range(rng.randint(1, max_factors)):
        g = g * conjugate(rng.randint(-max_shift, max_shift), rng.choice((1, -1)), A)
    return g


@dataclass
class Table1Report:
    samples: int
    depth: int
    checked: dict            # (pi, x, y) -> number of samples verified
    violations: list         # (sample word, pi, x, y)

    @property
    def ok(self) -> bool:
        return not self.violations and len(self.checked) == len(TABLE1)


def verify_table1(samples: int = 100, depth: int = 8, seed: int = 0,
                  A: MealyAutomaton | None = None) -> Table1Report:
    """Check every Table 1 line as equality of actions on level ``depth``.

    Each random W-element ``g`` is used together with ``g alpha`` and
    ``g alpha^2`` so that all three root permutations occur.
    """
    if depth < 2:
        raise ValueError("depth must be >= 2")
    A = A or paper_automaton()
    rng = random.Random(seed)
    gens_hi = {s: level_action(w(s, A), depth) for s in ("a", "b", "c", "a^-1", "b^-1", "c^-1")}
    gens_lo = {s: level_action(w(s), depth - 1) for s in gens_hi}
    checked = {k: 0 for k in TABLE1}
    violations = []
    al = alpha(A)
    for _ in range(samples):
        base = random_w_element(rng, A)
        for j in range(3):
            g = base * al ** j
            pi = PI_NAME[root_perm(g)]
            h = section(g, "1")
            G = level_action(g, depth)
            H = level_action(h, depth - 1)
            for (p, x, y), (root, pairs) in TABLE1.items():
                if p != pi:
                    continue
                lhs = gens_hi[y][G[gens_hi[x + "^-1"]]]
                parts = [gens_lo[q][H[gens_lo[r + "^-1"]]] for r, q in pairs]
                rhs = decomposition_action(PI[root], parts, depth, 3)
                if np.array_equal(lhs, rhs):
                    checked[(p, x, y)] += 1
                else:
                    violations.append((str(g), p, x, y))
    return Table1Report(samples, depth, checked, violations)


def verify_conjugate_collapse(g: GroupWord, depth: int = 8) -> bool:
    """``a^-1ga=b^-1gb=c^-1gc``, ``a^-1gb=b^-1gc=c^-1ga``, ``a^-1gc=b^-1ga=c^-1gb``."""
    if not in_W(g, depth):
        raise NotInW(f"{g} is not in W to depth {depth}")
    A = g.automaton

    def conj(x, y):
        return w(x, A) ** -1 * g * w(y, A)

    groups = [
        [("a", "a"), ("b", "b"), ("c", "c")],
        [("a", "b"), ("b", "c"), ("c", "a")],
        [("a", "c"), ("b", "a"), ("c", "b")],
    ]
    for grp in groups:
        first = conj(*grp[0])
        if not all(equal(first, conj(*p)) for p in grp[1:]):
            return False
    return True
