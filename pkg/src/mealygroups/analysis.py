"""Level orbits, Schreier graphs, balls and stabilizer probes."""
from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

from .action import (
    GroupWord, canonical_key, equal, fixes_boundary_point, inverse, minimal_automaton,
    signed_table,
)
from .errors import EmptyPeriod
from .levels import level_action
from .mealy import MealyAutomaton, is_bireversible
from .refine import product


def with_inverses(generators: Sequence[GroupWord]) -> list[GroupWord]:
    """``g1, g1^-1, g2, g2^-1, ...`` with duplicates (as words) dropped."""
    out: list[GroupWord] = []
    for g in generators:
        for h in (g, inverse(g)):
            if h not in out:
                out.append(h)
    return out


def state_generators(A: MealyAutomaton) -> list[GroupWord]:
    return [GroupWord(A, (2 * i,)) for i in range(len(A.states))]


def all_words(A: MealyAutomaton, n: int) -> list[str]:
    return ["".join(w) if all(len(x) == 1 for x in A.alphabet) else " ".join(w)
            for w in itertools.product(A.alphabet, repeat=n)]


# ---------------------------------------------------------------------------
# orbits and Schreier graphs
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LevelOrbitReport:
    level: int
    orbit_count: int
    orbit_sizes: tuple[int, ...]

    @property
    def transitive(self) -> bool:
        return self.orbit_count == 1


def _find(parent, i):
    while parent[i] != i:
        parent[i] = parent[parent[i]]
        i = parent[i]
    return i


def level_orbits(A: MealyAutomaton, generators: Sequence[GroupWord], n: int) -> LevelOrbitReport:
    if n < 1:
        raise ValueError("level must be >= 1")
    size = len(A.alphabet) ** n
    parent = list(range(size))
    for g in generators:
        perm = level_action(g, n)
        for i, j in enumerate(perm.tolist()):
            ri, rj = _find(parent, i), _find(parent, j)
            if ri != rj:
                parent[max(ri, rj)] = min(ri, rj)
    counts: dict[int, int] = {}
    for i in range(size):
        r = _find(parent, i)
        counts[r] = counts.get(r, 0) + 1
    sizes = tuple(sorted(counts.values(), reverse=True))
    return LevelOrbitReport(n, len(sizes), sizes)


@dataclass(frozen=True)
class SchreierGraph:
    level: int
    vertices: tuple
    edges: tuple  # (source, generator label, target)

    @property
    def connected(self) -> bool:
        if not self.vertices:
            return True
        adj: dict = {v: set() for v in self.vertices}
        for s, _, t in self.edges:
            adj[s].add(t)
            adj[t].add(s)
        seen = {self.vertices[0]}
        stack = [self.vertices[0]]
        while stack:
            v = stack.pop()
            for w in adj[v] - seen:
                seen.add(w)
                stack.append(w)
        return len(seen) == len(self.vertices)


def schreier_graph(A: MealyAutomaton, generators: Sequence[GroupWord], n: int) -> SchreierGraph:
    from .action import apply

    if n < 0:
        raise ValueError("level must be >= 0")
    verts = tuple(all_words(A, n))
    edges = tuple((v, str(g), apply(g, v)) for v in verts for g in generators)
    return SchreierGraph(n, verts, edges)


# ---------------------------------------------------------------------------
# balls
# ---------------------------------------------------------------------------

@dataclass
class BallReport:
    radius: int
    generators: list[str]
    counts: list[int]                       # ball size at radius 0..r
    representatives: list[tuple[tuple, GroupWord]] = field(default_factory=list)

    @property
    def sphere_counts(self) -> list[int]:
        return [c - (self.counts[i - 1] if i else 0) for i, c in enumerate(self.counts)]


def ball_enumerate(generators: Sequence[GroupWord], radius: int, dedup: str = "key") -> BallReport:
    """Breadth-first enumeration of the ball of the given radius.

    Generator order is the declaration order with inverses interleaved.  With
    ``dedup="pairwise"`` new elements are compared against all earlier ones
    with :func:`equal` (slow, cross-validation only).
    """
    if radius < 0:
        raise ValueError("radius must be >= 0")
    gens = with_inverses(generators)
    if not gens:
        raise ValueError("need at least one generator")
    A = gens[0].automaton
    e = GroupWord(A, ())
    gen_aut = [minimal_automaton(g) for g in gens]
    reps: dict = {}
    found: list[GroupWord] = [e]
    key0 = canonical_key(e)
    reps[key0] = e
    frontier = [(e, minimal_automaton(e))]
    counts = [1]
    for _ in range(radius):
        nxt = []
        for w, M in frontier:
            for g, G in zip(gens, gen_aut):
                P = product(M, G)
                if dedup == "pairwise":
                    cand = w * g
                    if any(equal(cand, f) for f in found):
                        continue
                    found.append(cand)
                    reps[P.key] = cand
                    nxt.append((cand, P))
                else:
                    if P.key in reps:
                        continue
                    cand = w * g
                    reps[P.key] = cand
                    nxt.append((cand, P))
        frontier = nxt
        counts.append(counts[-1] + len(nxt))
    rep_list = sorted(reps.items(), key=lambda kv: kv[0])
    return BallReport(radius, [str(g) for g in gens], counts, rep_list)


# ---------------------------------------------------------------------------
# dual action on state words
# ---------------------------------------------------------------------------

def dual_successors(A: MealyAutomaton, n: int) -> dict[tuple[int, ...], list[tuple[int, ...]]]:
    """For each positive state word of length n, its sections at single letters."""
    table = signed_table(A)
    d = len(A.alphabet)
    graph = {}
    for w in itertools.product(range(len(A.states)), repeat=n):
        codes = [2 * s for s in w]
        succ = []
        for x in range(d):
            cur = x
            sec = []
            for c in codes:
                sec.append(table.next[c][cur] // 2)
                cur = table.out[c][cur]
            succ.append(tuple(sec))
        graph[w] = succ
    return graph


def dual_section_transitive(A: MealyAutomaton, n: int) -> bool:
    """Every positive state word of length n is a section of every other one.

    Checked as strong connectivity of the digraph ``w -> w|_x``: forward and
    backward reachability from one word both cover the whole level.
    """
    if n == 0:
        return True
    if not is_bireversible(A):
        raise ValueError("automaton must be bireversible")
    graph = dual_successors(A, n)
    rev: dict = {w: [] for w in graph}
    for w, succ in graph.items():
        for t in succ:
            rev[t].append(w)
    start = next(iter(graph))

    def reach(adj):
        seen = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for t in adj[v]:
                if t not in seen:
                    seen.add(t)
                    stack.append(t)
        return len(seen)

    return reach(graph) == len(graph) and reach(rev) == len(graph)


def dual_section_transitive_bruteforce(A: MealyAutomaton, n: int) -> bool:
    """Directed BFS from every word; quadratic, used to cross-check."""
    if n == 0:
        return True
    graph = dual_successors(A, n)
    for start in graph:
        seen = {start}
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for t in graph[v]:
                if t not in seen:
                    seen.add(t)
                    queue.append(t)
        if len(seen) != len(graph):
            return False
    return True


# ---------------------------------------------------------------------------
# stabilizers
# ---------------------------------------------------------------------------

def stabilizer_in_ball(generators: Sequence[GroupWord], radius: int, u, p, depth: int | None = None):
    """Ball elements fixing ``u p^omega``, as ``(key, shortest word)`` pairs.

    The boundary action is evaluated exactly, so ``depth`` is accepted for
    interface compatibility only.
    """
    if (isinstance(p, str) and not p) or len(p) == 0:
        raise EmptyPeriod("period must be non-empty")
    ball = ball_enumerate(generators, radius)
    return [(k, w) for k, w in ball.representatives if fixes_boundary_point(w, u, p)]
