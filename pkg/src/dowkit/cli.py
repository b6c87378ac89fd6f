"""Command-line front end.

Every subcommand prints its result to stdout (newline-terminated, no
diagnostics) and reserves stderr for errors.  Exit status: 0 on success,
1 on domain errors such as malformed words or failed verification sweeps,
2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import re
import sys

from . import classifier, patterns, word_graph
from .generators import gen_int, gen_nes, gen_tangled
from .insertions import InsertionKind, insert, parse_spec
from .words import format_word, normalize, parse_word

_GEN_CALL = re.compile(r"(int|nes|trho|ttau)\((\d+(?:,\d+)*)\)\Z")


def _parse_gen_call(text: str):
    match = _GEN_CALL.fullmatch(text.replace(" ", ""))
    if not match:
        raise ValueError(
            "expected FAMILY(ARGS): int(h,nu), nes(h,nu), trho(nu,m,level), "
            "ttau(nu,m,level)"
        )
    name = match.group(1)
    args = [int(a) for a in match.group(2).split(",")]
    if name in ("int", "nes"):
        if len(args) != 2:
            raise ValueError(f"{name} takes (h, nu)")
        return (gen_int if name == "int" else gen_nes)(*args)
    if len(args) != 3:
        raise ValueError(f"{name} takes (nu, m, level)")
    sigma = InsertionKind.REPEAT if name == "trho" else InsertionKind.RETURN
    return gen_tangled(sigma, *args)


def _cmd_normalize(args) -> int:
    print(format_word(normalize(parse_word(args.word))) or "-")
    return 0


def _cmd_equiv(args) -> int:
    w1, w2 = parse_word(args.word1), parse_word(args.word2)
    print("true" if normalize(w1) == normalize(w2) else "false")
    return 0


def _cmd_insert(args) -> int:
    result = insert(parse_word(args.word), parse_spec(args.spec))
    print(format_word(result) or "-")
    return 0


def _cmd_pairs(args) -> int:
    w = parse_word(args.word)
    reports = classifier.enumerate_equivalent_pairs(
        w, args.nu, include_trivial=args.include_trivial
    )
    if args.json:
        print(json.dumps([classifier.report_dict(w, r) for r in reports], indent=2))
    else:
        for report in reports:
            print(classifier.report_line(w, report))
    return 0


def _cmd_predict(args) -> int:
    w = parse_word(args.word)
    pairs = classifier.predict_pairs(w, args.nu)
    if args.json:
        print(
            json.dumps(
                [{"s1": str(s1), "s2": str(s2)} for s1, s2 in pairs], indent=2
            )
        )
    else:
        for s1, s2 in pairs:
            print(f"{s1} {s2}")
    return 0


def _cmd_gen(args) -> int:
    print(format_word(_parse_gen_call(args.call)) or "-")
    return 0


def _cmd_patterns(args) -> int:
    w = parse_word(args.word)
    kind = InsertionKind.REPEAT if args.kind == "rep" else InsertionKind.RETURN
    if args.maximal:
        instances = patterns.maximal_instances(w, kind)
    elif kind is InsertionKind.REPEAT:
        instances = patterns.find_repeat_words(w)
    else:
        instances = patterns.find_return_words(w)
    for inst in instances:
        print(inst)
    return 0


def _cmd_palindrome(args) -> int:
    print("true" if patterns.is_palindrome(parse_word(args.word)) else "false")
    return 0


def _cmd_verify(args) -> int:
    reports = []
    words = word_graph.build_nodes(args.max_size)
    for w in words:
        reports.append(classifier.verify_no_mixed(w, args.nu_max))
        for nu in range(2, args.nu_max + 1):
            reports.append(classifier.verify_sequential_gaps(w, nu))
            reports.append(classifier.verify_structure_witnesses(w, nu))
    reports.append(classifier.verify_generator_families(args.nu_max))
    ok = True
    for report in reports:
        print(report.summary())
        for failure in report.failures:
            print(f"  counterexample: {failure}", file=sys.stderr)
        ok = ok and report.ok
    return 0 if ok else 1


def _cmd_graph_build(args) -> int:
    nu_cap = args.nu_cap if args.nu_cap is not None else max(args.max_size, 1)
    g = word_graph.build(args.max_size, nu_cap, threads=args.threads)
    with open(args.out, "wb") as fh:
        fh.write(g.to_json_bytes())
    return 0


def _load_graph(path: str) -> word_graph.WordGraph:
    with open(path, "rb") as fh:
        return word_graph.WordGraph.from_json_bytes(fh.read())


def _cmd_graph_distance(args) -> int:
    g = _load_graph(args.file)
    print(g.distance(parse_word(args.word)))
    return 0


def _cmd_graph_export(args) -> int:
    g = _load_graph(args.file)
    sys.stdout.buffer.write(word_graph.export_graph(g, args.format))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dowkit",
        description="Double occurrence words: canonical forms, insertions, "
        "equivalence structure, and the insertion graph.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("normalize", help="canonical relabeling of a word")
    p.add_argument("word")
    p.set_defaults(func=_cmd_normalize)

    p = sub.add_parser("equiv", help="whether two words are equivalent")
    p.add_argument("word1")
    p.add_argument("word2")
    p.set_defaults(func=_cmd_equiv)

    p = sub.add_parser("insert", help="apply an insertion spec to a DOW")
    p.add_argument("word")
    p.add_argument("spec", help='e.g. "rho(2,4,6)" or "tau(2,7,11)"')
    p.set_defaults(func=_cmd_insert)

    p = sub.add_parser("pairs", help="equivalent insertion pairs by brute force")
    p.add_argument("word")
    p.add_argument("nu", type=int)
    p.add_argument("--include-trivial", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_pairs)

    p = sub.add_parser("predict", help="pairs implied by structure in the word")
    p.add_argument("word")
    p.add_argument("nu", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_predict)

    p = sub.add_parser("gen", help="build a structured family word")
    p.add_argument("call", help='e.g. "int(2,2)", "nes(3,1)", "trho(2,3,2)"')
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("patterns", help="repeat/return word instances in a DOW")
    p.add_argument("word")
    p.add_argument("--kind", choices=("rep", "ret"), required=True)
    p.add_argument("--maximal", action="store_true")
    p.set_defaults(func=_cmd_patterns)

    p = sub.add_parser("palindrome", help="whether a word reads the same reversed")
    p.add_argument("word")
    p.set_defaults(func=_cmd_palindrome)

    p = sub.add_parser(
        "verify-theorems",
        help="run every verification sweep over small canonical DOWs",
    )
    p.add_argument("--max-size", type=int, default=3)
    p.add_argument("--nu-max", type=int, default=3)
    p.set_defaults(func=_cmd_verify)

    graph = sub.add_parser("graph", help="insertion graph of equivalence classes")
    gsub = graph.add_subparsers(dest="graph_command", required=True)

    p = gsub.add_parser("build", help="build and save a graph as JSON")
    p.add_argument("--max-size", type=int, required=True)
    p.add_argument("--nu-cap", type=int, default=None)
    p.add_argument("--threads", type=int, default=None)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_graph_build)

    p = gsub.add_parser("distance", help="insertion distance from the empty word")
    p.add_argument("file")
    p.add_argument("word")
    p.set_defaults(func=_cmd_graph_distance)

    p = gsub.add_parser("export", help="re-emit a saved graph")
    p.add_argument("file")
    p.add_argument("--format", choices=("dot", "json"), required=True)
    p.set_defaults(func=_cmd_graph_export)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
