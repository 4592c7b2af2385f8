"""Permutations of a finite alphabet, stored as image tuples over indices.

Products compose left to right: ``p.then(q)`` applies ``p`` first.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import NonBijectivePermutation


@dataclass(frozen=True)
class Permutation:
    image: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.image) != list(range(len(self.image))):
            raise NonBijectivePermutation(f"not a bijection: {self.image}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(n)))

    @classmethod
    def from_cycles(cls, cycles: Sequence[Sequence], alphabet: Sequence) -> Permutation:
        """Build from cycles written over letter names, e.g. ``[("2", "3")]``."""
        index = {x: i for i, x in enumerate(alphabet)}
        img = list(range(len(alphabet)))
        seen = set()
        for cyc in cycles:
            idx = []
            for x in cyc:
                if x not in index:
                    raise NonBijectivePermutation(f"unknown letter {x!r} in cycle")
                idx.append(index[x])
            if len(set(idx)) != len(idx) or seen & set(idx):
                raise NonBijectivePermutation(f"letter repeated in cycles {cycles!r}")
            seen |= set(idx)
            for k, i in enumerate(idx):
                img[i] = idx[(k + 1) % len(idx)]
        return cls(tuple(img))

    def __len__(self):
        return len(self.image)

    def __call__(self, i: int) -> int:
        return self.image[i]

    def then(self, other: Permutation) -> Permutation:
        return Permutation(tuple(other.image[j] for j in self.image))

    def inverse(self) -> Permutation:
        inv = [0] * len(self.image)
        for i, j in enumerate(self.image):
            inv[j] = i
        return Permutation(tuple(inv))

    def power(self, k: int) -> Permutation:
        base = self if k >= 0 else self.inverse()
        p = Permutation.identity(len(self))
        for _ in range(abs(k)):
            p = p.then(base)
        return p

    @property
    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.image))

    def cycles(self) -> list[tuple[int, ...]]:
        out, seen = [], set()
        for start in range(len(self.image)):
            if start in seen or self.image[start] == start:
                continue
            cyc = [start]
            seen.add(start)
            j = self.image[start]
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self.image[j]
            out.append(tuple(cyc))
        return out

    def render(self, alphabet: Sequence) -> str:
        """Cycle notation over letter names; identity renders as ``()``."""
        cyc = self.cycles()
        if not cyc:
            return "()"
        sep = "," if all(len(str(x)) == 1 for x in alphabet) else ", "
        return "".join("(" + sep.join(str(alphabet[i]) for i in c) + ")" for c in cyc)
