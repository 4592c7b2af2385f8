"""Command-line front end.

Exit codes: 0 true / success, 1 false / failed check, 2 parse error,
3 invalid usage.
"""
from __future__ import annotations

import argparse
import json
import sys
import time

from . import action
from .analysis import (
    ball_enumerate, level_orbits, schreier_graph, state_generators,
)
from .errors import DocumentSyntaxError, MealyError, NonInvertible
from .io.document import load, render_document
from .io.dot import render_dot
from .mealy import dual, find_isomorphism, invert, is_bireversible, is_invertible

EXIT_TRUE, EXIT_FALSE, EXIT_PARSE, EXIT_USAGE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _emit(args, payload: dict, text: str):
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _generators(A, texts):
    if not texts:
        return state_generators(A)
    return [action.word(A, t) for t in texts]


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_check(args) -> int:
    A = load(args.file)
    t0 = time.perf_counter()
    if args.invertible:
        name, ok = "invertible", is_invertible(A)
    elif args.bireversible:
        name, ok = "bireversible", is_bireversible(A)
    else:
        iso = find_isomorphism(A, dual(A))
        name, ok = "self-dual", iso is not None
    payload = {"check": name, "status": "pass" if ok else "fail",
               "elapsed_ms": round((time.perf_counter() - t0) * 1000, 3)}
    _emit(args, payload, f"{name}: {'yes' if ok else 'no'}")
    return EXIT_TRUE if ok else EXIT_FALSE


def cmd_dual(args) -> int:
    print(render_document(dual(load(args.file))), end="")
    return EXIT_TRUE


def cmd_invert(args) -> int:
    A = load(args.file)
    try:
        B = invert(A)
    except NonInvertible as exc:
        print(f"not invertible: {exc}", file=sys.stderr)
        return EXIT_FALSE
    print(render_document(B), end="")
    return EXIT_TRUE


def cmd_act(args) -> int:
    A = load(args.file)
    g = action.word(A, args.word)
    out = action.apply(g, args.input)
    _emit(args, {"word": str(g), "input": args.input, "output": out}, out)
    return EXIT_TRUE


def cmd_section(args) -> int:
    A = load(args.file)
    g = action.word(A, args.word)
    s = action.section(g, args.input)
    _emit(args, {"word": str(g), "input": args.input, "section": str(s)}, str(s))
    return EXIT_TRUE


def cmd_identity(args) -> int:
    A = load(args.file)
    g = action.word(A, args.word)
    ok = action.is_identity(g)
    payload = {"word": str(g), "identity": ok}
    text = f"{g}: {'trivial' if ok else 'non-trivial'}"
    if not ok:
        payload["witness"] = action.moved_vertex(g)
        text += f" (moves {payload['witness']})"
    _emit(args, payload, text)
    return EXIT_TRUE if ok else EXIT_FALSE


def cmd_orbits(args) -> int:
    A = load(args.file)
    rep = level_orbits(A, _generators(A, args.generators), args.level)
    payload = {"level": rep.level, "orbit_count": rep.orbit_count,
               "orbit_sizes": list(rep.orbit_sizes), "transitive": rep.transitive}
    _emit(args, payload, f"level {rep.level}: {rep.orbit_count} orbit(s), sizes "
          f"{' '.join(map(str, rep.orbit_sizes))}; transitive: {'yes' if rep.transitive else 'no'}")
    return EXIT_TRUE


def cmd_schreier(args) -> int:
    A = load(args.file)
    graph = schreier_graph(A, _generators(A, args.generators), args.level)
    if args.dot:
        print(render_dot(graph), end="")
        return EXIT_TRUE
    payload = {"level": graph.level, "vertices": len(graph.vertices),
               "edges": len(graph.edges), "connected": graph.connected}
    _emit(args, payload, f"level {graph.level}: {len(graph.vertices)} vertices, "
          f"{len(graph.edges)} edges, connected: {'yes' if graph.connected else 'no'}")
    return EXIT_TRUE


def cmd_ball(args) -> int:
    A = load(args.file)
    rep = ball_enumerate(_generators(A, args.generators), args.radius)
    payload = {"radius": rep.radius, "generators": rep.generators, "counts": rep.counts,
               "representatives": [str(wd) for _, wd in rep.representatives]}
    text = "\n".join(f"{r}\t{c}" for r, c in enumerate(rep.counts))
    _emit(args, payload, "radius\tball_size\n" + text)
    return EXIT_TRUE


def cmd_free_semigroup(args) -> int:
    from .lamplighter.checks import free_semigroup_check

    A = load(args.file)
    t0 = time.perf_counter()
    ok = free_semigroup_check(args.length, A)
    payload = {"check": "free-semigroup", "status": "pass" if ok else "fail",
               "elapsed_ms": round((time.perf_counter() - t0) * 1000, 3)}
    _emit(args, payload, f"positive words of length <= {args.length} distinct: {'yes' if ok else 'no'}")
    return EXIT_TRUE if ok else EXIT_FALSE


def cmd_verify_paper(args) -> int:
    from .lamplighter.verify import VerifyConfig, verify_paper

    cfg = VerifyConfig(depth=args.depth, radius=args.radius, length=args.length)
    A = load(args.automaton) if args.automaton else None
    progress = None if args.json else (lambda r: print(r.line(), flush=True))
    results = verify_paper(cfg, A, only=args.only, progress=progress)
    ok = all(r.passed for r in results)
    if args.json:
        print(json.dumps({"status": "pass" if ok else "fail",
                          "checks": [r.to_json() for r in results]}, sort_keys=True))
    else:
        n_pass = sum(r.passed for r in results)
        print(f"{n_pass}/{len(results)} checks passed")
    return EXIT_TRUE if ok else EXIT_FALSE


def cmd_oracle_compare(args) -> int:
    from .lamplighter.checks import ball_comparison

    ours, theirs = ball_comparison(args.radius, args.convention)
    ok = ours == theirs
    payload = {"check": "oracle-compare", "status": "pass" if ok else "fail",
               "automaton_counts": ours, "oracle_counts": theirs}
    rows = "\n".join(f"{r}\t{x}\t{y}" for r, (x, y) in enumerate(zip(ours, theirs)))
    _emit(args, payload, "radius\tautomaton\toracle\n" + rows)
    return EXIT_TRUE if ok else EXIT_FALSE


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="mealygroups", description="Groups generated by invertible Mealy automata.")
    p.add_argument("--json", action="store_true", help="print a single JSON object")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    def add(name, fn, help, file=True, file_default=None):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
        if file:
            if file_default:
                sp.add_argument("file", nargs="?", default=file_default,
                                help="automaton file (.aut) or @paper")
            else:
                sp.add_argument("file", help="automaton file (.aut) or @paper")
        sp.set_defaults(func=fn)
        return sp

    sp = add("check", cmd_check, "boolean properties of an automaton")
    grp = sp.add_mutually_exclusive_group(required=True)
    grp.add_argument("--invertible", action="store_true")
    grp.add_argument("--bireversible", action="store_true")
    grp.add_argument("--self-dual", action="store_true")

    add("dual", cmd_dual, "print the dual automaton")
    add("invert", cmd_invert, "print the inverse automaton")

    for name, fn, help in (("act", cmd_act, "image of a vertex"),
                           ("section", cmd_section, "section of a word at a vertex")):
        sp = add(name, fn, help)
        sp.add_argument("--word", required=True)
        sp.add_argument("--input", required=True)

    sp = add("identity", cmd_identity, "decide whether a word is trivial")
    sp.add_argument("--word", required=True)

    sp = add("orbits", cmd_orbits, "orbits on a level")
    sp.add_argument("--level", type=int, required=True)
    sp.add_argument("--generators", nargs="*")

    sp = add("schreier", cmd_schreier, "Schreier graph of a level")
    sp.add_argument("--level", type=int, required=True)
    sp.add_argument("--dot", action="store_true")
    sp.add_argument("--generators", nargs="*")

    sp = add("ball", cmd_ball, "ball sizes in the word metric")
    sp.add_argument("--radius", type=int, default=5)
    sp.add_argument("--generators", nargs="*")

    sp = add("free-semigroup", cmd_free_semigroup, "positive words pairwise distinct",
             file_default="@paper")
    sp.add_argument("--length", type=int, default=6)

    sp = add("verify-paper", cmd_verify_paper, "run every check on the lamplighter automaton",
             file=False)
    sp.add_argument("--depth", type=int, default=8)
    sp.add_argument("--radius", type=int, default=5)
    sp.add_argument("--length", type=int, default=6)
    sp.add_argument("--automaton", help="run against another automaton file")
    sp.add_argument("--only", nargs="*", help="restrict to the named checks")

    sp = add("oracle-compare", cmd_oracle_compare, "ball sizes against abstract Z_3 wr Z",
             file=False)
    sp.add_argument("--radius", type=int, default=5)
    sp.add_argument("--convention", choices=("plus", "minus"), default="plus")
    return p


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0) if exc.code in (0, EXIT_USAGE) else EXIT_USAGE
    if not getattr(args, "func", None):
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    for attr in ("level", "radius", "length", "depth"):
        val = getattr(args, attr, None)
        if val is not None and val < 0:
            print(f"error: --{attr} must be non-negative", file=sys.stderr)
            return EXIT_USAGE
    try:
        return args.func(args)
    except DocumentSyntaxError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except MealyError as exc:
        kind = "parse error" if exc.line is not None else "error"
        print(f"{kind}: {exc}", file=sys.stderr)
        return EXIT_PARSE if exc.line is not None or "cannot parse" in str(exc) else EXIT_USAGE
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
