"""Abstract lamplighter group Z_3 wr Z, independent of any automaton.

An element is a finitely supported lamp configuration ``f: Z -> Z_3`` with an
integer shift ``s``.  Products read left to right: in ``p * q`` the element
``p`` comes first and the lamps of ``q`` are placed relative to ``p``'s shift.
Two offset conventions are available:

``"plus"``  (default)  ``(f, s)(g, t) = (f + g(. + s), s + t)``
``"minus"``            ``(f, s)(g, t) = (f + g(. - s), s + t)``

Under ``"plus"`` the conjugate ``a^-n alpha a^n`` is the single lamp at ``n``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

MOD = 3
CONVENTIONS = ("plus", "minus")


@dataclass(frozen=True)
class LamplighterElement:
    lamps: tuple[tuple[int, int], ...]   # sorted (position, value), value in {1, 2}
    shift: int

    @classmethod
    def make(cls, lamps: Mapping[int, int] | Iterable[tuple[int, int]] = (), shift: int = 0):
        items = lamps.items() if isinstance(lamps, Mapping) else lamps
        acc: dict[int, int] = {}
        for pos, val in items:
            acc[pos] = (acc.get(pos, 0) + val) % MOD
        return cls(tuple(sorted((p, v) for p, v in acc.items() if v)), shift)

    @property
    def is_identity(self) -> bool:
        return not self.lamps and self.shift == 0

    def __mul__(self, other: LamplighterElement) -> LamplighterElement:
        return lamp_multiply(self, other)

    def __str__(self):
        lamps = ",".join(f"{p}:{v}" for p, v in self.lamps)
        return f"<{{{lamps}}}, {self.shift}>"


IDENTITY = LamplighterElement((), 0)
SHIFT = LamplighterElement((), 1)
LAMP = LamplighterElement(((0, 1),), 0)


def lamp_multiply(p: LamplighterElement, q: LamplighterElement, convention: str = "plus") -> LamplighterElement:
    if convention == "plus":
        off = -p.shift
    elif convention == "minus":
        off = p.shift
    else:
        raise ValueError(f"unknown convention {convention!r}")
    lamps = list(p.lamps) + [(pos + off, val) for pos, val in q.lamps]
    return LamplighterElement.make(lamps, p.shift + q.shift)


def lamp_inverse(p: LamplighterElement, convention: str = "plus") -> LamplighterElement:
    # p * p^-1 = e forces p^-1 = (-f shifted back, -s)
    off = p.shift if convention == "plus" else -p.shift
    if convention not in CONVENTIONS:
        raise ValueError(f"unknown convention {convention!r}")
    return LamplighterElement.make([(pos + off, -val) for pos, val in p.lamps], -p.shift)


def lamp_power(p: LamplighterElement, k: int, convention: str = "plus") -> LamplighterElement:
    base = p if k >= 0 else lamp_inverse(p, convention)
    out = IDENTITY
    for _ in range(abs(k)):
        out = lamp_multiply(out, base, convention)
    return out


def generator_images(convention: str = "plus") -> dict[str, LamplighterElement]:
    """Images of the paper automaton's states.

    ``a`` is the shift and ``alpha = a b^-1`` the unit lamp at 0, so
    ``b = alpha^-1 a`` and ``c = alpha a`` (from ``alpha^-1 = a c^-1``).
    """
    a = SHIFT
    alpha = LAMP
    alpha_inv = lamp_inverse(alpha, convention)
    return {
        "a": a,
        "b": lamp_multiply(alpha_inv, a, convention),
        "c": lamp_multiply(alpha, a, convention),
    }


def phi(w, convention: str = "plus") -> LamplighterElement:
    """Image of a group word over ``{a, b, c}`` in Z_3 wr Z."""
    images = generator_images(convention)
    inv = {s: lamp_inverse(g, convention) for s, g in images.items()}
    out = IDENTITY
    for s, sign in w.letters:
        out = lamp_multiply(out, images[s] if sign > 0 else inv[s], convention)
    return out


def oracle_ball_counts(generators: Iterable[LamplighterElement], radius: int,
                       convention: str = "plus") -> list[int]:
    """Ball sizes at radius 0..r for the given generators and their inverses."""
    gens = []
    for g in generators:
        for h in (g, lamp_inverse(g, convention)):
            if h not in gens:
                gens.append(h)
    seen = {IDENTITY}
    frontier = [IDENTITY]
    counts = [1]
    for _ in range(radius):
        nxt = []
        for x in frontier:
            for g in gens:
                y = lamp_multiply(x, g, convention)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
        counts.append(len(seen))
    return counts
