"""Vectorized actions on a whole level X^n.

Vertex ``x1 x2 ... xn`` (letter indices) is encoded as the base-``d`` integer
with ``x1`` most significant.  A level action is an integer array ``P`` with
``P[i]`` the code of the image of vertex ``i``.
"""
from __future__ import annotations

from functools import lru_cache

import numpy as np

from .action import GroupWord, signed_table
from .mealy import MealyAutomaton
from .perm import Permutation


@lru_cache(maxsize=None)
def level_digits(d: int, n: int) -> np.ndarray:
    """``(d**n, n)`` array of the letter indices of every level-n vertex."""
    idx = np.arange(d**n)
    cols = [(idx // d ** (n - 1 - j)) % d for j in range(n)]
    return np.stack(cols, axis=1) if cols else np.zeros((1, 0), dtype=int)


def encode(digits: np.ndarray, d: int) -> np.ndarray:
    n = digits.shape[1]
    weights = d ** np.arange(n - 1, -1, -1)
    return digits @ weights


@lru_cache(maxsize=None)
def _generator_levels(A: MealyAutomaton, n: int) -> tuple:
    table = signed_table(A)
    d = len(A.alphabet)
    digits = level_digits(d, n)
    nxt = np.array([row if row is not None else (0,) * d for row in table.next])
    out = np.array([row if row is not None else tuple(range(d)) for row in table.out])
    arrays = []
    for code in range(len(table.next)):
        if table.out[code] is None:
            arrays.append(None)
            continue
        state = np.full(digits.shape[0], code)
        img = np.empty_like(digits)
        for j in range(n):
            col = digits[:, j]
            img[:, j] = out[state, col]
            state = nxt[state, col]
        perm = encode(img, d)
        perm.setflags(write=False)
        arrays.append(perm)
    return tuple(arrays)


def level_action(g: GroupWord, n: int) -> np.ndarray:
    """Action of ``g`` on level ``n`` as an index array."""
    A = g.automaton
    d = len(A.alphabet)
    gens = _generator_levels(A, n)
    perm = np.arange(d**n)
    for c in g.codes:
        perm = gens[c][perm]
    return perm


def decomposition_action(root: Permutation, section_actions, n: int, d: int) -> np.ndarray:
    """Level-n action of ``(f_1, ..., f_d) root`` from level-(n-1) section actions."""
    block = d ** (n - 1)
    parts = [root(x) * block + np.asarray(section_actions[x]) for x in range(d)]
    return np.concatenate(parts)


def level_columns(perm: np.ndarray, d: int, n: int) -> np.ndarray:
    """Letter indices of the images, shape ``(d**n, n)``."""
    return level_digits(d, n)[perm]


def constant_level_perms(perm: np.ndarray, d: int, n: int):
    """Per-level root permutations if they are constant across each level, else ``None``.

    Entry ``k`` is the permutation applied to the ``k``-th letter; it exists
    when the image letter at position ``k`` depends only on the input letter
    at position ``k``.
    """
    src = level_digits(d, n)
    img = level_columns(perm, d, n)
    result = []
    for k in range(n):
        table = np.full(d, -1)
        for x in range(d):
            vals = np.unique(img[src[:, k] == x, k])
            if len(vals) != 1:
                return None
            table[x] = vals[0]
        result.append(Permutation(tuple(int(t) for t in table)))
    return result
