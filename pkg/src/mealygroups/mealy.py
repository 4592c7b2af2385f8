"""Mealy automata: construction, dual, inverse, bireversibility, isomorphism."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .errors import ArityMismatch, MealyError, NonInvertible, UnknownState
from .perm import Permutation

INVERSE_MARK = "^-1"


def inverse_name(token: str) -> str:
    """``a`` -> ``a^-1`` and back; double inversion restores the token."""
    if token.endswith(INVERSE_MARK):
        return token[: -len(INVERSE_MARK)]
    return token + INVERSE_MARK


@dataclass(frozen=True)
class MealyAutomaton:
    """Complete deterministic transducer with integer-indexed tables.

    ``transition[i][j]`` is the index of the state reached from state ``i`` on
    letter ``j``; ``output[i][j]`` is the index of the letter written.
    """

    states: tuple[str, ...]
    alphabet: tuple[str, ...]
    transition: tuple[tuple[int, ...], ...]
    output: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not self.states or not self.alphabet:
            raise MealyError("states and alphabet must be non-empty")
        if len(set(self.states)) != len(self.states):
            raise MealyError("duplicate state identifiers")
        if len(set(self.alphabet)) != len(self.alphabet):
            raise MealyError("duplicate letters")
        m, d = len(self.states), len(self.alphabet)
        if len(self.transition) != m or len(self.output) != m:
            raise MealyError("one table row per state required")
        for row_t, row_o in zip(self.transition, self.output):
            if len(row_t) != d or len(row_o) != d:
                raise MealyError("table rows must cover the whole alphabet")
            if not all(0 <= t < m for t in row_t) or not all(0 <= y < d for y in row_o):
                raise MealyError("table entry out of range")

    @property
    def size(self) -> tuple[int, int]:
        return len(self.states), len(self.alphabet)

    def state_index(self, s: str) -> int:
        try:
            return self._state_idx[s]
        except KeyError:
            raise UnknownState(s) from None

    def letter_index(self, x: str) -> int:
        from .errors import UnknownLetter

        try:
            return self._letter_idx[x]
        except KeyError:
            raise UnknownLetter(x) from None

    @property
    def _state_idx(self) -> dict:
        d = self.__dict__.get("_si")
        if d is None:
            d = {s: i for i, s in enumerate(self.states)}
            object.__setattr__(self, "_si", d)
        return d

    @property
    def _letter_idx(self) -> dict:
        d = self.__dict__.get("_li")
        if d is None:
            d = {x: i for i, x in enumerate(self.alphabet)}
            object.__setattr__(self, "_li", d)
        return d

    def delta(self, s: str, x: str) -> str:
        return self.states[self.transition[self.state_index(s)][self.letter_index(x)]]

    def lam(self, s: str, x: str) -> str:
        return self.alphabet[self.output[self.state_index(s)][self.letter_index(x)]]

    def root_permutation(self, s: str | int) -> Permutation:
        i = s if isinstance(s, int) else self.state_index(s)
        return Permutation(self.output[i])

    def rows(self) -> list[tuple[str, tuple[str, ...], Permutation]]:
        """Wreath-recursion rows ``(state, sections, root permutation)``."""
        return [
            (s, tuple(self.states[t] for t in self.transition[i]), Permutation(self.output[i]))
            for i, s in enumerate(self.states)
        ]

    def edges(self):
        """Yield ``(source, input, output, target)`` in state then letter order."""
        for i, s in enumerate(self.states):
            for j, x in enumerate(self.alphabet):
                yield s, x, self.alphabet[self.output[i][j]], self.states[self.transition[i][j]]

    def __hash__(self):
        return hash((self.states, self.alphabet, self.transition, self.output))

    def __eq__(self, other):
        if not isinstance(other, MealyAutomaton):
            return NotImplemented
        return (self.states, self.alphabet, self.transition, self.output) == (
            other.states, other.alphabet, other.transition, other.output)


def build_automaton(states: Sequence[str], alphabet: Sequence[str], rows) -> MealyAutomaton:
    """Build an automaton from wreath-recursion rows.

    ``rows`` holds one ``(sections, permutation)`` pair per state, in state
    order; the permutation may be a :class:`Permutation` over letter indices or
    a mapping ``letter -> letter``.
    """
    states, alphabet = tuple(states), tuple(alphabet)
    if len(rows) != len(states):
        raise MealyError(f"{len(rows)} rows for {len(states)} states")
    sidx = {s: i for i, s in enumerate(states)}
    lidx = {x: i for i, x in enumerate(alphabet)}
    trans, out = [], []
    for s, (sections, perm) in zip(states, rows):
        if len(sections) != len(alphabet):
            raise ArityMismatch(s, len(sections), len(alphabet))
        for t in sections:
            if t not in sidx:
                raise UnknownState(t, where=f"row {s}")
        if not isinstance(perm, Permutation):
            perm = Permutation(tuple(lidx[perm[x]] for x in alphabet))
        if len(perm) != len(alphabet):
            raise ArityMismatch(s, len(perm), len(alphabet))
        trans.append(tuple(sidx[t] for t in sections))
        out.append(perm.image)
    return MealyAutomaton(states, alphabet, tuple(trans), tuple(out))


def identity_automaton(alphabet: Sequence[str] = ("1",), state: str = "e") -> MealyAutomaton:
    d = len(alphabet)
    return MealyAutomaton((state,), tuple(alphabet), ((0,) * d,), (tuple(range(d)),))


def dual(A: MealyAutomaton) -> MealyAutomaton:
    m, d = A.size
    trans = tuple(tuple(A.output[s][x] for s in range(m)) for x in range(d))
    out = tuple(tuple(A.transition[s][x] for s in range(m)) for x in range(d))
    return MealyAutomaton(A.alphabet, A.states, trans, out)


def _collision(A: MealyAutomaton):
    for i, row in enumerate(A.output):
        seen = {}
        for j, y in enumerate(row):
            if y in seen:
                return i, seen[y], j, y
            seen[y] = j
    return None


def is_invertible(A: MealyAutomaton) -> bool:
    return _collision(A) is None


def invert(A: MealyAutomaton) -> MealyAutomaton:
    bad = _collision(A)
    if bad is not None:
        i, j1, j2, y = bad
        raise NonInvertible(A.states[i], (A.alphabet[j1], A.alphabet[j2]), A.alphabet[y])
    m, d = A.size
    trans, out = [], []
    for i in range(m):
        inv = [0] * d
        for x, y in enumerate(A.output[i]):
            inv[y] = x
        out.append(tuple(inv))
        trans.append(tuple(A.transition[i][inv[y]] for y in range(d)))
    states = tuple(inverse_name(s) for s in A.states)
    return MealyAutomaton(states, A.alphabet, tuple(trans), tuple(out))


def is_bireversible(A: MealyAutomaton) -> bool:
    if not is_invertible(A) or not is_invertible(dual(A)):
        return False
    return is_invertible(dual(invert(A)))


@dataclass(frozen=True)
class AutomatonIsomorphism:
    state_map: dict[str, str]
    letter_map: dict[str, str]

    def check(self, A: MealyAutomaton, B: MealyAutomaton) -> bool:
        """Re-verify both commuting conditions on every (state, letter) pair."""
        for s in A.states:
            for x in A.alphabet:
                fs, fx = self.state_map[s], self.letter_map[x]
                if self.state_map[A.delta(s, x)] != B.delta(fs, fx):
                    return False
                if self.letter_map[A.lam(s, x)] != B.lam(fs, fx):
                    return False
        return True


def all_isomorphisms(A: MealyAutomaton, B: MealyAutomaton):
    """Yield every isomorphism, letter bijections outermost, both in lexicographic order."""
    if A.size != B.size:
        return
    m, d = A.size
    for lp in itertools.permutations(range(d)):
        for sp in itertools.permutations(range(m)):
            ok = all(
                sp[A.transition[s][x]] == B.transition[sp[s]][lp[x]]
                and lp[A.output[s][x]] == B.output[sp[s]][lp[x]]
                for s in range(m)
                for x in range(d)
            )
            if ok:
                yield AutomatonIsomorphism(
                    {A.states[s]: B.states[sp[s]] for s in range(m)},
                    {A.alphabet[x]: B.alphabet[lp[x]] for x in range(d)},
                )


def find_isomorphism(A: MealyAutomaton, B: MealyAutomaton) -> AutomatonIsomorphism | None:
    """First isomorphism in :func:`all_isomorphisms` order; ``None`` if there is none."""
    return next(all_isomorphisms(A, B), None)


EIGHT_NAMES = ("A", "dA", "iA", "idA", "diA", "didA", "idiA", "ididA")


def eight_automata(A: MealyAutomaton) -> list[MealyAutomaton]:
    """A, d(A), i(A), i(d(A)), d(i(A)), d(i(d(A))), i(d(i(A))), i(d(i(d(A)))).

    Also checks that the last entry coincides with d(i(d(i(A)))).
    """
    dA = dual(A)
    iA = invert(A)
    idA = invert(dA)
    diA = dual(iA)
    didA = dual(idA)
    idiA = invert(diA)
    ididA = invert(didA)
    other = dual(idiA)
    if ididA != other and find_isomorphism(ididA, other) is None:
        raise MealyError("i(d(i(d(A)))) and d(i(d(i(A)))) disagree")
    return [A, dA, iA, idA, diA, didA, idiA, ididA]


def canonical_rename(A: MealyAutomaton, state_prefix="s", letter_prefix="x") -> MealyAutomaton:
    """Replace identifiers by positional names, keeping all tables."""
    return MealyAutomaton(
        tuple(f"{state_prefix}{i}" for i in range(len(A.states))),
        tuple(f"{letter_prefix}{j}" for j in range(len(A.alphabet))),
        A.transition,
        A.output,
    )
