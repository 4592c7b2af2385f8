"""Run every bounded check about the paper automaton, in a fixed order."""
from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable

from ..action import canonical_key, equal, order_bounded, section, wreath_decompose
from ..analysis import dual_section_transitive, level_orbits, stabilizer_in_ball, state_generators
from ..mealy import MealyAutomaton, dual, find_isomorphism, invert, is_bireversible
from ..report import CheckResult
from .automaton import alpha, paper_automaton, w
from .checks import (
    ball_comparison, commutator_failures, free_semigroup_collisions, n_independence_failures,
    ord_zero_property, phi_kernel_mismatches, verify_a_k_recursion, verify_not_finitary,
)
from .wgroup import PermSequence, apply_T_word, perm_sequence, t_automaton, t_automaton_from_table, verify_table1


@dataclass
class VerifyConfig:
    depth: int = 8
    radius: int = 5
    length: int = 6
    transitivity_level: int = 7
    dual_length: int = 4
    table_samples: int = 100
    k_max: int = 2
    support: int = 2
    commutator_bound: int = 4
    phi_length: int = 5
    stabilizer_radius: int = 4
    ord_samples: int = 500
    ord_depth: int = 6
    seed: int = 0


# wreath recursions as displayed for A, i(A), d(A), i(d(A)) and ab^-1, bc^-1, ca^-1
DISPLAYS = {
    "A": {"a": ("a b c", "(2,3)"), "b": ("c a b", "(1,3)"), "c": ("b c a", "(1,2)")},
    "iA": {"a^-1": ("a^-1 c^-1 b^-1", "(2,3)"), "b^-1": ("b^-1 a^-1 c^-1", "(1,3)"),
           "c^-1": ("c^-1 b^-1 a^-1", "(1,2)")},
    "dA": {"1": ("1 3 2", "(b,c)"), "2": ("3 2 1", "(a,b)"), "3": ("2 1 3", "(a,c)")},
    "idA": {"1^-1": ("1^-1 2^-1 3^-1", "(b,c)"), "2^-1": ("2^-1 3^-1 1^-1", "(a,b)"),
            "3^-1": ("3^-1 1^-1 2^-1", "(a,c)")},
}
WORD_DISPLAYS = {
    "ab^-1": ("ab^-1 bc^-1 ca^-1", "(1,3,2)"),
    "bc^-1": ("ca^-1 ab^-1 bc^-1", "(1,3,2)"),
    "ca^-1": ("bc^-1 ca^-1 ab^-1", "(1,3,2)"),
}

# sections at 11 of two-letter positive words; cc|_11 is computed as ca
PINNED_SECTIONS = {"ba": "bc", "bb": "ba", "bc": "bb", "ca": "cb", "cb": "cc", "cc": "ca"}


def _rows_match(B: MealyAutomaton, display) -> str | None:
    rendered = {s: (" ".join(sec), p.render(B.alphabet).replace(", ", ","))
                for s, sec, p in B.rows()}
    for s, row in display.items():
        if rendered.get(s) != row:
            return f"{s} = {rendered.get(s)} expected {row}"
    return None


def _check_bireversible(A, cfg):
    return is_bireversible(A), None, "A, d(A), d(i(A)) invertible"


def _check_self_dual(A, cfg):
    iso = find_isomorphism(A, dual(A))
    if iso is None:
        return False, "no isomorphism A -> d(A)", ""
    return True, None, "state map " + ", ".join(f"{k}->{v}" for k, v in iso.state_map.items())


def _check_displays(A, cfg):
    for name, B in (("A", A), ("iA", invert(A)), ("dA", dual(A)), ("idA", invert(dual(A)))):
        bad = _rows_match(B, DISPLAYS[name])
        if bad:
            return False, f"{name}: {bad}", ""
    for text, (secs, root) in WORD_DISPLAYS.items():
        dec = wreath_decompose(w(text, A))
        got = (" ".join(str(s) for s in dec.sections), dec.root.render(A.alphabet))
        if got != (secs, root):
            return False, f"{text} = {got}", ""
    return True, None, "recursions of A, i(A), d(A), i(d(A)), ab^-1, bc^-1, ca^-1"


def _check_alpha(A, cfg):
    groups = [["ab^-1", "bc^-1", "ca^-1"], ["ac^-1", "ba^-1", "cb^-1", "(ab^-1)^-1"],
              ["a^-1b", "b^-1c", "c^-1a"], ["a^-1c", "b^-1a", "c^-1b"]]
    for grp in groups:
        words = [w(t, A) if not t.startswith("(") else alpha(A) ** -1 for t in grp]
        for t, g in zip(grp[1:], words[1:]):
            if not equal(words[0], g):
                return False, f"{grp[0]} != {t}", ""
    al = alpha(A)
    dec = wreath_decompose(al)
    if not all(equal(s, al) for s in dec.sections):
        return False, f"alpha sections {[str(s) for s in dec.sections]}", ""
    k = order_bounded(al, 10)
    if k != 3:
        return False, f"order(alpha) = {k}", ""
    return True, None, "four relation chains, alpha=(alpha,alpha,alpha)(1,3,2), order 3"


def _check_ord_zero(A, cfg):
    r = ord_zero_property(cfg.ord_samples, 8, cfg.ord_depth, 10, cfg.seed, A)
    if not r.ok:
        wit = (r.not_in_w or r.not_exponent_3 or r.not_commuting)[0]
        return False, str(wit), ""
    return True, None, f"{r.samples} words in W, cube trivially, commute"


def _check_table1(A, cfg):
    r = verify_table1(cfg.table_samples, cfg.depth, cfg.seed, A)
    if not r.ok:
        wit = r.violations[0] if r.violations else "some lines never exercised"
        return False, str(wit), ""
    return True, None, f"27 lines x {cfg.table_samples} samples (x3 roots) at depth {cfg.depth}"


def _check_t_recursion(A, cfg):
    if t_automaton_from_table() != t_automaton():
        return False, "Table 1 and the T-recursion disagree", ""
    lhs = perm_sequence(w("a^-1b^-1b^-1c^-1abaa", A), cfg.depth)
    rhs = apply_T_word([2, 1, 3, 1], PermSequence.trivial(cfg.depth))
    if lhs != rhs:
        return False, f"{lhs.render()} != {rhs.render()}", ""
    return True, None, "a^-1b^-1b^-1c^-1abaa = T2T1T3T1(e)"


def _check_transitivity(A, cfg):
    gens = state_generators(A)
    for n in range(1, cfg.transitivity_level + 1):
        rep = level_orbits(A, gens, n)
        if not rep.transitive:
            return False, f"level {n}: orbit sizes {list(rep.orbit_sizes)[:10]}", ""
    return True, None, f"one orbit on X^n for n <= {cfg.transitivity_level}"


def _check_dual_transitivity(A, cfg):
    for n in range(0, cfg.dual_length + 1):
        if not dual_section_transitive(A, n):
            return False, f"length {n}", ""
    return True, None, f"every state word is a section of every other, length <= {cfg.dual_length}"


def _check_free_semigroup(A, cfg):
    for u, v in PINNED_SECTIONS.items():
        got = str(section(w(u, A), "11"))
        if w(got, A) != w(v, A):
            return False, f"{u}|_11 = {got}, expected {v}", ""
    coll = free_semigroup_collisions(cfg.length, A)
    if coll:
        return False, f"{coll[0][0]} = {coll[0][1]}", ""
    for n in range(1, cfg.length + 1):
        if not dual_section_transitive(A, n):
            return False, f"sections not transitive at length {n}", ""
    total = sum(len(A.states) ** n for n in range(1, cfg.length + 1))
    return True, None, f"{total} positive words distinct; sections at 11 as pinned"


def _check_a_k(A, cfg):
    for r in verify_a_k_recursion(cfg.k_max, A):
        if not r.ok:
            return False, f"k={r.k}: {r}", ""
    return True, None, "invariant triples {1^n, 21^(n-1), 31^(n-1)} for n = 3^k"


def _check_n_independence(A, cfg):
    bad = n_independence_failures(cfg.support, A)
    if bad:
        return False, bad[0], ""
    return True, None, f"{3 ** (2 * cfg.support + 1) - 1} sign patterns non-trivial"


def _check_commutators(A, cfg):
    bad = commutator_failures(cfg.commutator_bound, A=A)
    if bad:
        return False, f"[a^-n alpha a^n, a^-m alpha a^m] for (n, m) = {bad[0]}", ""
    k = 2 * cfg.commutator_bound + 1
    return True, None, f"{k * k} commutators trivial"


def _check_phi(A, cfg):
    bad = phi_kernel_mismatches(cfg.phi_length, A=A)
    if bad:
        return False, bad[0], ""
    return True, None, f"triviality agrees with the oracle on words of length <= {cfg.phi_length}"


def _check_ball(A, cfg):
    ours, theirs = ball_comparison(cfg.radius, A=A)
    if ours != theirs:
        return False, f"{ours} vs oracle {theirs}", ""
    return True, None, f"ball sizes {ours}"


def _check_stabilizer(A, cfg):
    fixers = stabilizer_in_ball(state_generators(A), cfg.stabilizer_radius, "", "1")
    a = w("a", A)
    r = cfg.stabilizer_radius
    exp_keys = {canonical_key(a ** j) for j in range(-r, r + 1)}
    got_keys = {k for k, _ in fixers}
    if exp_keys != got_keys:
        others = [str(g) for k, g in fixers if k not in exp_keys]
        return False, f"fixers {others[:5]}; expected {len(exp_keys)} powers of a, got {len(got_keys)}", ""
    return True, None, f"fixers of 1^omega in the radius-{r} ball are a^j, |j| <= {r}"


def _check_not_finitary(A, cfg):
    for g in (alpha(A), alpha(A) ** -1):
        if not verify_not_finitary(g, cfg.depth):
            return False, str(g), ""
    return True, None, f"alpha, alpha^-1 have non-trivial sections on every level <= {cfg.depth}"


CHECKS: list[tuple[str, Callable]] = [
    ("bireversible", _check_bireversible),
    ("self-dual", _check_self_dual),
    ("recursion-displays", _check_displays),
    ("alpha-relations", _check_alpha),
    ("ord-zero-lemma", _check_ord_zero),
    ("table-1", _check_table1),
    ("t-recursion", _check_t_recursion),
    ("transitivity", _check_transitivity),
    ("dual-transitivity", _check_dual_transitivity),
    ("free-semigroup", _check_free_semigroup),
    ("a_k-recursion", _check_a_k),
    ("n-independence", _check_n_independence),
    ("commutators", _check_commutators),
    ("phi-equivalence", _check_phi),
    ("ball-comparison", _check_ball),
    ("stabilizer", _check_stabilizer),
    ("not-finitary", _check_not_finitary),
]


def verify_paper(config: VerifyConfig | None = None, automaton: MealyAutomaton | None = None,
                 only: list[str] | None = None, progress: Callable | None = None) -> list[CheckResult]:
    """Run the checks in order; an exception inside a check is reported as a failure."""
    cfg = config or VerifyConfig()
    A = automaton or paper_automaton()
    results = []
    for name, fn in CHECKS:
        if only and name not in only:
            continue
        t0 = time.perf_counter()
        try:
            ok, witness, summary = fn(A, cfg)
        except Exception as exc:  # noqa: BLE001 - a crashing check is a failed check
            ok, witness, summary = False, f"{type(exc).__name__}: {exc}", ""
        res = CheckResult(name, bool(ok), witness, (time.perf_counter() - t0) * 1000, summary)
        results.append(res)
        if progress:
            progress(res)
    return results
