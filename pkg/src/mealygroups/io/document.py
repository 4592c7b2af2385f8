"""Line-oriented ``.aut`` format mirroring wreath-recursion notation.

::

    # the automaton generating Z_3 wr Z
    alphabet: 1 2 3
    a = (a, b, c) (2 3)
    b = (c, a, b) (1 3)
    c = (b, c, a) (1 2)

Each row names a state, its sections in alphabet order, and its root
permutation as zero or more cycles (``()`` is the identity).
"""
from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import (
    ArityMismatch, DocumentSyntaxError, MealyError, NonBijectivePermutation, UnknownLetter,
    UnknownState,
)
from ..mealy import MealyAutomaton, build_automaton
from ..perm import Permutation


@dataclass
class AutomatonDocument:
    automaton: MealyAutomaton
    comments: list[str] = field(default_factory=list)


class _Line:
    """Cursor over one source line; columns are 1-based in errors."""

    def __init__(self, text: str, lineno: int):
        self.text = text
        self.lineno = lineno
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos] in " \t":
            self.pos += 1

    def at_end(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def fail(self, msg, expected=None):
        raise DocumentSyntaxError(msg, self.lineno, self.pos + 1, expected)

    def expect(self, ch: str):
        if self.peek() != ch:
            found = self.peek() or "end of line"
            self.fail(f"found {found!r}", repr(ch))
        self.pos += 1

    def token(self, what="identifier") -> tuple[str, int]:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and (self.text[self.pos].isalnum() or self.text[self.pos] == "_"):
            self.pos += 1
        if self.text.startswith("^-1", self.pos):
            self.pos += 3
        if self.pos == start:
            found = self.text[start] if start < len(self.text) else "end of line"
            self.fail(f"found {found!r}", what)
        return self.text[start:self.pos], start + 1


def _strip_comment(raw: str) -> tuple[str, str | None]:
    i = raw.find("#")
    if i < 0:
        return raw, None
    return raw[:i], raw[i + 1:].strip()


def read_document(text: str) -> AutomatonDocument:
    alphabet = None
    alphabet_cols: dict[str, int] = {}
    rows = []  # (state, col, [(section, col)], [[(letter, col)]], lineno)
    comments = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body, comment = _strip_comment(raw)
        if comment is not None:
            comments.append(comment)
        cur = _Line(body, lineno)
        if cur.at_end():
            continue
        head, col = cur.token("'alphabet:' or a state name")
        if head == "alphabet" and cur.peek() == ":":
            if alphabet is not None:
                raise DocumentSyntaxError("alphabet declared twice", lineno, col)
            cur.expect(":")
            alphabet = []
            while not cur.at_end():
                x, xc = cur.token("letter")
                if x in alphabet_cols:
                    raise DocumentSyntaxError(f"letter {x!r} repeated", lineno, xc)
                alphabet_cols[x] = xc
                alphabet.append(x)
            if not alphabet:
                cur.fail("empty alphabet", "letter")
            continue
        if alphabet is None:
            raise DocumentSyntaxError("row before alphabet declaration", lineno, col, "'alphabet:'")
        if any(r[0] == head for r in rows):
            raise DocumentSyntaxError(f"state {head!r} defined twice", lineno, col)
        cur.expect("=")
        cur.expect("(")
        sections = [cur.token("state name")]
        while cur.peek() == ",":
            cur.expect(",")
            sections.append(cur.token("state name"))
        cur.expect(")")
        cycles = []
        while not cur.at_end():
            cycle_col = cur.pos + 1
            cur.expect("(")
            cyc = []
            while cur.peek() not in (")", ""):
                cyc.append(cur.token("letter"))
                if cur.peek() == ",":
                    cur.expect(",")
            cur.expect(")")
            if cyc:
                cycles.append((cyc, cycle_col))
        rows.append((head, col, sections, cycles, lineno))
    if alphabet is None:
        raise DocumentSyntaxError("missing alphabet declaration", 1, 1, "'alphabet:'")
    if not rows:
        raise DocumentSyntaxError("no state rows", max(1, len(text.splitlines())), 1, "a state row")
    states = [r[0] for r in rows]
    built = []
    for head, col, sections, cycles, lineno in rows:
        if len(sections) != len(alphabet):
            raise ArityMismatch(head, len(sections), len(alphabet)).at(lineno, col)
        for s, sc in sections:
            if s not in states:
                raise UnknownState(s, where=f"row {head}").at(lineno, sc)
        for cyc, cc in cycles:
            for x, xc in cyc:
                if x not in alphabet_cols:
                    raise UnknownLetter(x).at(lineno, xc)
        try:
            perm = Permutation.from_cycles([[x for x, _ in cyc] for cyc, _ in cycles], alphabet)
        except NonBijectivePermutation as exc:
            raise NonBijectivePermutation(str(exc)).at(lineno, cycles[0][1] if cycles else col) from None
        built.append((tuple(s for s, _ in sections), perm))
    return AutomatonDocument(build_automaton(states, alphabet, built), comments)


def parse_document(text: str) -> MealyAutomaton:
    return read_document(text).automaton


def _render_perm(p: Permutation, alphabet) -> str:
    cyc = p.cycles()
    if not cyc:
        return "()"
    return " ".join("(" + " ".join(alphabet[i] for i in c) + ")" for c in cyc)


def render_document(A: MealyAutomaton | AutomatonDocument) -> str:
    comments: list[str] = []
    if isinstance(A, AutomatonDocument):
        comments, A = A.comments, A.automaton
    lines = [f"# {c}" for c in comments]
    lines.append("alphabet: " + " ".join(A.alphabet))
    for s, sections, perm in A.rows():
        lines.append(f"{s} = ({', '.join(sections)}) {_render_perm(perm, A.alphabet)}")
    return "\n".join(lines) + "\n"


def load(path: str) -> MealyAutomaton:
    """Read an automaton file; ``@paper`` names the built-in automaton."""
    if path == "@paper":
        from ..lamplighter.automaton import paper_automaton

        return paper_automaton()
    with open(path, encoding="utf-8") as fh:
        return parse_document(fh.read())


__all__ = ["AutomatonDocument", "MealyError", "load", "parse_document", "read_document", "render_document"]
