"""Partition refinement and minimized element automata.

A :class:`MinimalAutomaton` is a Mealy automaton with a distinguished seed
state, reduced to the coarsest partition compatible with outputs and
transitions and numbered canonically (breadth-first from the seed, letters in
alphabet order).  Two group elements are equal exactly when their minimal
automata are identical, which is what ``canonical_key`` relies on.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Hashable, Sequence


def refine_partition(trans: Sequence[Sequence[int]], labels: Sequence[Hashable]) -> list[int]:
    """Hopcroft refinement; returns a block id for every state.

    The initial partition groups states by ``labels``; the result is the
    coarsest refinement in which equivalent states have equivalent successors
    on every letter.
    """
    n = len(trans)
    if n == 0:
        return []
    d = len(trans[0])
    block_of = [0] * n
    blocks: list[set[int]] = []
    by_label: dict = {}
    for q in range(n):
        b = by_label.get(labels[q])
        if b is None:
            b = by_label[labels[q]] = len(blocks)
            blocks.append(set())
        blocks[b].add(q)
        block_of[q] = b
    inv = [[[] for _ in range(n)] for _ in range(d)]
    for p in range(n):
        row = trans[p]
        for x in range(d):
            inv[x][row[x]].append(p)
    work = {(b, x) for b in range(len(blocks)) for x in range(d)}
    while work:
        b, x = work.pop()
        touched: dict[int, set[int]] = {}
        inv_x = inv[x]
        for q in list(blocks[b]):
            for p in inv_x[q]:
                touched.setdefault(block_of[p], set()).add(p)
        for c, part in touched.items():
            if len(part) == len(blocks[c]):
                continue
            rest = blocks[c] - part
            small, large = (part, rest) if len(part) <= len(rest) else (rest, part)
            new = len(blocks)
            blocks[c] = large
            blocks.append(small)
            for q in small:
                block_of[q] = new
            # (c, y) pending or not, the smaller half is always enough
            for y in range(d):
                work.add((new, y))
    return block_of


@dataclass(frozen=True)
class MinimalAutomaton:
    """Minimized, canonically numbered element automaton; state 0 is the seed."""

    transition: tuple[tuple[int, ...], ...]
    output: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.transition)

    @property
    def is_trivial(self) -> bool:
        return self.size == 1 and all(i == y for i, y in enumerate(self.output[0]))

    @property
    def key(self) -> tuple:
        return (self.transition, self.output)

    def moved_vertex(self) -> tuple[int, ...] | None:
        """Shortest vertex (as letter indices) moved by the element, if any."""
        d = len(self.output[0])
        parent = {0: None}
        queue = deque([0])
        while queue:
            q = queue.popleft()
            for x in range(d):
                if self.output[q][x] != x:
                    path = [x]
                    while parent[q] is not None:
                        q, y = parent[q]
                        path.append(y)
                    return tuple(reversed(path))
            for x in range(d):
                t = self.transition[q][x]
                if t not in parent:
                    parent[t] = (q, x)
                    queue.append(t)
        return None


def minimize(trans: Sequence[Sequence[int]], out: Sequence[Sequence[int]], seed: int = 0) -> MinimalAutomaton:
    """Restrict to states reachable from ``seed``, refine, renumber canonically."""
    d = len(out[seed])
    order = {seed: 0}
    reach = [seed]
    i = 0
    while i < len(reach):
        q = reach[i]
        i += 1
        for x in range(d):
            t = trans[q][x]
            if t not in order:
                order[t] = len(reach)
                reach.append(t)
    sub_t = [tuple(order[trans[q][x]] for x in range(d)) for q in reach]
    sub_o = [tuple(out[q]) for q in reach]
    blocks = refine_partition(sub_t, sub_o)
    return _quotient(sub_t, sub_o, blocks)


def _quotient(trans, out, blocks) -> MinimalAutomaton:
    d = len(out[0])
    rep = {}
    for q, b in enumerate(blocks):
        rep.setdefault(b, q)
    number = {blocks[0]: 0}
    queue = [blocks[0]]
    i = 0
    while i < len(queue):
        b = queue[i]
        i += 1
        q = rep[b]
        for x in range(d):
            c = blocks[trans[q][x]]
            if c not in number:
                number[c] = len(queue)
                queue.append(c)
    new_t = tuple(tuple(number[blocks[trans[rep[b]][x]]] for x in range(d)) for b in queue)
    new_o = tuple(tuple(out[rep[b]]) for b in queue)
    return MinimalAutomaton(new_t, new_o)


def product(g: MinimalAutomaton, h: MinimalAutomaton) -> MinimalAutomaton:
    """Automaton of the element ``g`` followed by ``h`` (``g`` acts first)."""
    d = len(g.output[0])
    index = {(0, 0): 0}
    pairs = [(0, 0)]
    trans, out = [], []
    i = 0
    while i < len(pairs):
        p, q = pairs[i]
        i += 1
        gt, go = g.transition[p], g.output[p]
        ht, ho = h.transition[q], h.output[q]
        row_t, row_o = [], []
        for x in range(d):
            y = go[x]
            nxt = (gt[x], ht[y])
            j = index.get(nxt)
            if j is None:
                j = index[nxt] = len(pairs)
                pairs.append(nxt)
            row_t.append(j)
            row_o.append(ho[y])
        trans.append(row_t)
        out.append(tuple(row_o))
    return minimize(trans, out)


def identity_minimal(d: int) -> MinimalAutomaton:
    return MinimalAutomaton(((0,) * d,), (tuple(range(d)),))
