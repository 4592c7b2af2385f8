"""Group words acting on the rooted tree X*.

Words act first letter first: in ``s1 s2 ... sn`` the generator ``s1`` is
applied to a vertex, then ``s2`` to the result, and so on.  The section of a
word at ``v`` is ``s1|_v s2|_{s1(v)} ...``, freely reduced.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import AutomatonMismatch, EmptyPeriod, MealyError, NonInvertible, UnknownLetter, UnknownState
from .mealy import MealyAutomaton, is_invertible
from .perm import Permutation
from .refine import MinimalAutomaton, identity_minimal, minimize, product, refine_partition


# ---------------------------------------------------------------------------
# signed generator tables
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SignedTable:
    """Transition/output tables over signed generators.

    Generator code ``2*i`` is state ``i``; ``2*i + 1`` is its inverse.  Rows
    for inverse codes are ``None`` when the automaton is not invertible.
    """

    next: tuple
    out: tuple


@lru_cache(maxsize=None)
def signed_table(A: MealyAutomaton) -> SignedTable:
    m, d = A.size
    inv_ok = is_invertible(A)
    nxt, out = [], []
    for i in range(m):
        nxt.append(tuple(2 * t for t in A.transition[i]))
        out.append(A.output[i])
        if inv_ok:
            inv = [0] * d
            for x, y in enumerate(A.output[i]):
                inv[y] = x
            nxt.append(tuple(2 * A.transition[i][inv[y]] + 1 for y in range(d)))
            out.append(tuple(inv))
        else:
            nxt.append(None)
            out.append(None)
    return SignedTable(tuple(nxt), tuple(out))


def _reduce(codes: Iterable[int]) -> tuple[int, ...]:
    stack: list[int] = []
    for c in codes:
        if stack and stack[-1] == c ^ 1:
            stack.pop()
        else:
            stack.append(c)
    return tuple(stack)


# ---------------------------------------------------------------------------
# GroupWord
# ---------------------------------------------------------------------------



@dataclass(frozen=True)
class GroupWord:
    """Freely reduced word over the states of an automaton and their inverses."""

    automaton: MealyAutomaton
    codes: tuple[int, ...]

    def __post_init__(self):
        reduced = _reduce(self.codes)
        if reduced != self.codes:
            object.__setattr__(self, "codes", reduced)
        if any(c & 1 for c in self.codes) and not is_invertible(self.automaton):
            raise NonInvertible(*_first_collision(self.automaton))

    @classmethod
    def identity(cls, A: MealyAutomaton) -> GroupWord:
        return cls(A, ())

    @classmethod
    def from_letters(cls, A: MealyAutomaton, letters: Iterable[tuple[str, int]]) -> GroupWord:
        return cls(A, tuple(2 * A.state_index(s) + (1 if sign < 0 else 0) for s, sign in letters))

    @classmethod
    def parse(cls, A: MealyAutomaton, text: str) -> GroupWord:
        """Parse ``"ab^-1c^3"`` (or space separated for multi-character states).

        ``""`` and ``"e"`` (when ``e`` is not a state) denote the identity.
        """
        text = text.strip()
        if text == "" or (text == "e" and "e" not in A.states):
            return cls(A, ())
        names = sorted(A.states, key=len, reverse=True)
        codes: list[int] = []
        pos = 0
        n = len(text)
        while pos < n:
            if text[pos] in " \t*·":
                pos += 1
                continue
            for s in names:
                if text.startswith(s, pos):
                    break
            else:
                m = re.match(r"[A-Za-z0-9_]+", text[pos:])
                raise UnknownState(m.group(0) if m else text[pos], f"word {text!r}")
            pos += len(s)
            exp = 1
            m = re.compile(r"\^\(?(-?\d+)\)?").match(text, pos)
            if m:
                exp = int(m.group(1))
                pos = m.end()
            code = 2 * A.state_index(s)
            if exp < 0:
                code += 1
            codes.extend([code] * abs(exp))
        return cls(A, tuple(codes))

    @property
    def letters(self) -> tuple[tuple[str, int], ...]:
        st = self.automaton.states
        return tuple((st[c >> 1], -1 if c & 1 else 1) for c in self.codes)

    def __len__(self):
        return len(self.codes)

    def __mul__(self, other: GroupWord) -> GroupWord:
        return multiply(self, other)

    def __pow__(self, k: int) -> GroupWord:
        base = self if k >= 0 else inverse(self)
        return GroupWord(self.automaton, base.codes * abs(k))

    def inverse(self) -> GroupWord:
        return inverse(self)

    def __str__(self):
        if not self.codes:
            return "e"
        sep = "" if all(len(s) == 1 for s in self.automaton.states) else " "
        parts = []
        i = 0
        codes = self.codes
        while i < len(codes):
            j = i
            while j < len(codes) and codes[j] == codes[i]:
                j += 1
            name = self.automaton.states[codes[i] >> 1]
            k = (j - i) * (-1 if codes[i] & 1 else 1)
            parts.append(name if k == 1 else f"{name}^{k}")
            i = j
        return sep.join(parts)

    def __repr__(self):
        return f"GroupWord({str(self)!r})"


def _first_collision(A):
    for i, row in enumerate(A.output):
        seen = {}
        for j, y in enumerate(row):
            if y in seen:
                return A.states[i], (A.alphabet[seen[y]], A.alphabet[j]), A.alphabet[y]
            seen[y] = j
    raise AssertionError("automaton is invertible")


def word(A: MealyAutomaton, text: str) -> GroupWord:
    return GroupWord.parse(A, text)


# ---------------------------------------------------------------------------
# vertices
# ---------------------------------------------------------------------------

def letter_indices(A: MealyAutomaton, v) -> tuple[int, ...]:
    """Accept a string of one-character letters, a space separated string, or a sequence."""
    if isinstance(v, str):
        if all(len(x) == 1 for x in A.alphabet):
            v = list(v.replace(" ", ""))
        else:
            v = v.split()
    idx = A._letter_idx
    try:
        return tuple(idx[x] for x in v)
    except KeyError as exc:
        raise UnknownLetter(exc.args[0]) from None


def letters_to_word(A: MealyAutomaton, idx: Sequence[int], like=None):
    letters = [A.alphabet[i] for i in idx]
    if like is None or isinstance(like, str):
        sep = "" if all(len(x) == 1 for x in A.alphabet) else " "
        return sep.join(letters)
    return tuple(letters)


def _run(table: SignedTable, codes: Sequence[int], v: Sequence[int]) -> tuple[list[int], list[int]]:
    """Image of ``v`` under ``codes`` and the (unreduced) section codes."""
    cur = list(v)
    sec = []
    nxt, out = table.next, table.out
    for c in codes:
        for k, x in enumerate(cur):
            cur[k] = out[c][x]
            c = nxt[c][x]
        sec.append(c)
    return cur, sec


# ---------------------------------------------------------------------------
# basic operations
# ---------------------------------------------------------------------------

def apply(g: GroupWord, v):
    """Image of the vertex ``v``; returns the same kind of object it was given."""
    A = g.automaton
    img, _ = _run(signed_table(A), g.codes, letter_indices(A, v))
    return letters_to_word(A, img, like=v)


def section(g: GroupWord, v) -> GroupWord:
    A = g.automaton
    _, sec = _run(signed_table(A), g.codes, letter_indices(A, v))
    return GroupWord(A, tuple(sec))


def root_perm(g: GroupWord) -> Permutation:
    A = g.automaton
    d = len(A.alphabet)
    img = tuple(_run(signed_table(A), g.codes, (x,))[0][0] for x in range(d))
    return Permutation(img)


@dataclass(frozen=True)
class WreathDecomposition:
    root: Permutation
    sections: tuple[GroupWord, ...]

    def render(self) -> str:
        A = self.sections[0].automaton
        return "(" + ", ".join(str(s) for s in self.sections) + ")" + self.root.render(A.alphabet)


def wreath_decompose(g: GroupWord) -> WreathDecomposition:
    A = g.automaton
    table = signed_table(A)
    imgs, secs = [], []
    for x in range(len(A.alphabet)):
        img, sec = _run(table, g.codes, (x,))
        imgs.append(img[0])
        secs.append(GroupWord(A, tuple(sec)))
    return WreathDecomposition(Permutation(tuple(imgs)), tuple(secs))


def _same(g: GroupWord, h: GroupWord):
    if g.automaton != h.automaton:
        raise AutomatonMismatch("words over different automata")


def multiply(g: GroupWord, h: GroupWord) -> GroupWord:
    _same(g, h)
    return GroupWord(g.automaton, g.codes + h.codes)


def inverse(g: GroupWord) -> GroupWord:
    return GroupWord(g.automaton, tuple(c ^ 1 for c in reversed(g.codes)))


def commutator(g: GroupWord, h: GroupWord) -> GroupWord:
    """``g^-1 h^-1 g h``."""
    return inverse(g) * inverse(h) * g * h


# ---------------------------------------------------------------------------
# element automata and the word problem
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ElementAutomaton:
    """Literal section closure of a word, with its refined partition.

    ``nodes[0]`` is the seed; ``transition[i][x]`` is the node index of
    ``section(nodes[i], x)``; ``output[i]`` is the root permutation image of
    ``nodes[i]``; ``partition[i]`` is the block id of node ``i``.
    """

    seed: GroupWord
    nodes: tuple[GroupWord, ...]
    transition: tuple[tuple[int, ...], ...]
    output: tuple[tuple[int, ...], ...]
    partition: tuple[int, ...]

    @property
    def classes(self) -> list[list[int]]:
        groups: dict[int, list[int]] = {}
        for i, b in enumerate(self.partition):
            groups.setdefault(b, []).append(i)
        return sorted(groups.values())

    def minimize(self) -> MinimalAutomaton:
        return minimize(self.transition, self.output, 0)

    @property
    def seed_is_identity(self) -> bool:
        """Seed class has identity root and all its transitions stay inside it."""
        b = self.partition[0]
        members = [i for i, c in enumerate(self.partition) if c == b]
        d = len(self.output[0])
        return all(
            self.output[i] == tuple(range(d))
            and all(self.partition[t] == b for t in self.transition[i])
            for i in members
        )


def element_automaton(g: GroupWord, max_nodes: int | None = None) -> ElementAutomaton:
    """Breadth-first section closure with literal node identity, then refinement.

    Sections of a word are never longer than the word, so the closure is
    finite; ``max_nodes`` aborts with :class:`MealyError` past that many nodes.
    """
    A = g.automaton
    table = signed_table(A)
    d = len(A.alphabet)
    index = {g.codes: 0}
    nodes = [g.codes]
    trans, out = [], []
    i = 0
    while i < len(nodes):
        w = nodes[i]
        i += 1
        row_t, row_o = [], []
        for x in range(d):
            img, sec = _run(table, w, (x,))
            s = _reduce(sec)
            j = index.get(s)
            if j is None:
                j = index[s] = len(nodes)
                nodes.append(s)
                if max_nodes is not None and len(nodes) > max_nodes:
                    raise MealyError(f"section closure exceeds {max_nodes} nodes")
            row_t.append(j)
            row_o.append(img[0])
        trans.append(tuple(row_t))
        out.append(tuple(row_o))
    partition = refine_partition(trans, out)
    # renumber blocks by first occurrence for reproducibility
    first: dict[int, int] = {}
    part = tuple(first.setdefault(b, len(first)) for b in partition)
    return ElementAutomaton(
        g, tuple(GroupWord(A, w) for w in nodes), tuple(trans), tuple(out), part
    )


@lru_cache(maxsize=None)
def generator_automaton(A: MealyAutomaton, code: int) -> MinimalAutomaton:
    table = signed_table(A)
    if table.out[code] is None:
        raise NonInvertible(*_first_collision(A))
    # states are signed codes; restrict to those reachable from ``code``
    n = len(table.next)
    trans = [table.next[c] if table.next[c] is not None else (c,) * len(A.alphabet) for c in range(n)]
    out = [table.out[c] if table.out[c] is not None else tuple(range(len(A.alphabet))) for c in range(n)]
    return minimize(trans, out, code)


@lru_cache(maxsize=1 << 18)
def _minimal(A: MealyAutomaton, codes: tuple[int, ...]) -> MinimalAutomaton:
    if not codes:
        return identity_minimal(len(A.alphabet))
    if len(codes) == 1:
        return generator_automaton(A, codes[0])
    half = len(codes) // 2
    return product(_minimal(A, codes[:half]), _minimal(A, codes[half:]))


def minimal_automaton(g: GroupWord) -> MinimalAutomaton:
    """Minimized element automaton, built by multiplying minimized halves.

    Agrees with ``element_automaton(g).minimize()`` but never materializes the
    literal section closure, which grows exponentially for long mixed words.
    """
    return _minimal(g.automaton, g.codes)


def is_identity(g: GroupWord) -> bool:
    return not g.codes or minimal_automaton(g).is_trivial


def equal(g: GroupWord, h: GroupWord) -> bool:
    _same(g, h)
    return is_identity(multiply(g, inverse(h)))


def canonical_key(g: GroupWord) -> tuple:
    return minimal_automaton(g).key


def moved_vertex(g: GroupWord):
    """A shortest vertex moved by ``g`` (letter word), or ``None`` if trivial."""
    v = minimal_automaton(g).moved_vertex()
    return None if v is None else letters_to_word(g.automaton, v)


def order_bounded(g: GroupWord, bound: int) -> int | None:
    """Least ``k <= bound`` with ``g^k`` trivial; ``None`` stands for unbounded."""
    if bound < 1:
        raise ValueError("bound must be >= 1")
    if is_identity(g):
        return 1
    base = minimal_automaton(g)
    cur = base
    for k in range(2, bound + 1):
        cur = product(cur, base)
        if cur.is_trivial:
            return k
    return None


# ---------------------------------------------------------------------------
# boundary points u p^omega
# ---------------------------------------------------------------------------

def normalize_point(u: Sequence[int], p: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Unique form of ``u p^omega``: primitive period, then shortest preperiod."""
    u, p = list(u), list(p)
    if not p:
        raise EmptyPeriod("period must be non-empty")
    n = len(p)
    for k in range(1, n + 1):
        if n % k == 0 and p == p[:k] * (n // k):
            p = p[:k]
            break
    while u and u[-1] == p[-1]:
        u.pop()
        p = [p[-1]] + p[:-1]
    return tuple(u), tuple(p)


def _act_point(g: GroupWord, u: Sequence[int], p: Sequence[int]):
    if not p:
        raise EmptyPeriod("period must be non-empty")
    M = minimal_automaton(g)
    q = 0
    head = []
    for x in u:
        head.append(M.output[q][x])
        q = M.transition[q][x]
    seen = {}
    outs = []
    step = 0
    while True:
        phase = step % len(p)
        if (q, phase) in seen:
            t0 = seen[(q, phase)]
            return normalize_point(head + outs[:t0], outs[t0:])
        seen[(q, phase)] = step
        x = p[phase]
        outs.append(M.output[q][x])
        q = M.transition[q][x]
        step += 1


def act_on_eventually_periodic(g: GroupWord, u, p):
    """Image of the boundary point ``u p^omega`` as a normalized ``(u', p')``.

    Runs the minimized element automaton along the periodic tail until a
    (state, phase) pair repeats.
    """
    A = g.automaton
    ui, pi = letter_indices(A, u), letter_indices(A, p)
    ru, rp = _act_point(g, ui, pi)
    return letters_to_word(A, ru, like=u), letters_to_word(A, rp, like=p)


def fixes_boundary_point(g: GroupWord, u, p) -> bool:
    A = g.automaton
    ui, pi = letter_indices(A, u), letter_indices(A, p)
    return _act_point(g, ui, pi) == normalize_point(ui, pi)
