"""Command-line front end.

Boolean subcommands print ``true``/``false`` and exit 0/1. Usage and parse
errors exit 2; validation errors (undeclared label, level violation, bad
Q-definition) exit 3.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import explore, hcalc, oracle, ordinals, qo, terms, transforms
from .errors import EnumerationLimitError, ParseError, ValidationError

EXIT_TRUE, EXIT_FALSE, EXIT_USAGE, EXIT_INVALID = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _read_terms(args, q, count: int | None) -> list:
    if args.term_file is not None:
        if args.terms:
            raise UsageError("give terms inline or via --term-file, not both")
        lines = Path(args.term_file).read_text(encoding="utf-8").splitlines()
        texts = [ln.strip() for ln in lines if ln.strip() and not ln.lstrip().startswith("#")]
    else:
        texts = list(args.terms)
    if count is not None and len(texts) != count:
        raise UsageError(f"expected {count} term(s), got {len(texts)}")
    return [terms.parse_term(t, q) for t in texts]


def _bool(value: bool) -> int:
    print("true" if value else "false")
    return EXIT_TRUE if value else EXIT_FALSE


def cmd_leq(args, q):
    t, s = _read_terms(args, q, 2)
    return _bool(hcalc.leq_h(q, t, s))


def cmd_equiv(args, q):
    t, s = _read_terms(args, q, 2)
    return _bool(hcalc.equiv_h(q, t, s))


def cmd_rleq(args, q):
    t, s = _read_terms(args, q, 2)
    return _bool(transforms.leq_h_xi(ordinals.parse_ordinal(args.xi), q, t, s))


_APPLY = {
    "s": transforms.apply_s,
    "r": transforms.apply_r,
    "s*": transforms.apply_s_star,
    "r*": transforms.apply_r_star,
}


def cmd_apply(args, q):
    (t,) = _read_terms(args, q, 1)
    print(terms.print_term(_APPLY[args.op](ordinals.parse_ordinal(args.ord), t)))
    return EXIT_TRUE


def cmd_level(args, q):
    (t,) = _read_terms(args, q, 1)
    return _bool(terms.in_level(t, ordinals.parse_ordinal(args.xi)))


def cmd_irr(args, q):
    (f,) = _read_terms(args, q, 1)
    return _bool(hcalc.is_join_irreducible(q, f))


def cmd_oracle(args, q):
    t, s = _read_terms(args, q, 2)
    return _bool(oracle.hom_leq(q, oracle.to_labeled_forest(t), oracle.to_labeled_forest(s)))


def cmd_canon(args, q):
    (t,) = _read_terms(args, q, 1)
    c = terms.canonicalize(t)
    print(f"{terms.print_term(c)}\t{terms.node_count(c)}" if args.size else terms.print_term(c))
    return EXIT_TRUE


def _label_set(text: str, q) -> list:
    names = [n.strip() for n in text.split(",") if n.strip()]
    if not names:
        raise UsageError("label sets must be nonempty")
    for n in names:
        q.check(n)
    return names


def cmd_dom(args, q):
    return _bool(qo.dominates(q, _label_set(args.small, q), _label_set(args.big, q)))


def cmd_qo(args, q):
    sys.stdout.write(qo.dump_qo(q))
    return EXIT_TRUE


def cmd_ord(args, q):
    a = ordinals.parse_ordinal(args.value)
    if args.cmp is not None:
        print(ordinals.compare(a, ordinals.parse_ordinal(args.cmp)).name)
    elif args.add is not None:
        print(ordinals.add(a, ordinals.parse_ordinal(args.add)))
    elif args.summands:
        print(" ".join(str(e) for e in ordinals.summands(a)))
    else:
        print(a)
    return EXIT_TRUE


def cmd_enum(args, q):
    if args.term_file is not None or args.terms:
        pool = [terms.canonicalize(t) for t in _read_terms(args, q, None)]
    else:
        if args.xi is None or args.max_nodes is None:
            raise UsageError("enum needs --xi and --max-nodes (or --term-file)")
        indices = None
        if args.indices:
            indices = [ordinals.parse_ordinal(x) for x in args.indices.split(",")]
        pool = explore.enumerate_terms(
            q,
            ordinals.parse_ordinal(args.xi),
            args.max_nodes,
            args.max_branch,
            indices=indices,
            limit=args.limit,
        )
    poset = explore.quotient(q, pool, explore.parse_relation(q, args.rel))
    if args.dot:
        Path(args.dot).write_text(explore.hasse_dot(poset), encoding="utf-8")
    text = explore.report(poset)
    if args.report:
        Path(args.report).write_text(text, encoding="utf-8")
    sys.stdout.write(text)
    return EXIT_TRUE


# subcommand -> (handler, needs --qo, library operations it exposes)
COMMANDS = {
    "leq": (cmd_leq, True, ("load_qo", "parse_term", "leq_h", "leq_q")),
    "equiv": (cmd_equiv, True, ("equiv_h",)),
    "rleq": (cmd_rleq, True, ("leq_h_xi", "apply_r_star", "parse_ordinal")),
    "apply": (cmd_apply, True, ("apply_s", "apply_r", "apply_s_star", "apply_r_star", "print_term")),
    "level": (cmd_level, True, ("in_level",)),
    "irr": (cmd_irr, True, ("is_join_irreducible",)),
    "oracle": (cmd_oracle, True, ("to_labeled_forest", "hom_leq")),
    "canon": (cmd_canon, True, ("canonicalize", "node_count")),
    "dom": (cmd_dom, True, ("dominates",)),
    "qo": (cmd_qo, True, ("make_qo", "dump_qo")),
    "ord": (cmd_ord, False, ("parse_ordinal", "compare", "add", "summands")),
    "enum": (cmd_enum, True, ("enumerate_terms", "quotient", "hasse_dot", "report")),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="forestcalc", description="Iterated labeled forest calculus.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text, nterms=None):
        p = sub.add_parser(name, help=help_text)
        if COMMANDS[name][1]:
            p.add_argument("--qo", required=True, metavar="FILE", help="Q-definition (JSON)")
        if nterms is not None:
            p.add_argument("terms", nargs="*", metavar="TERM")
            p.add_argument("--term-file", metavar="PATH", help="read terms from a file, one per line")
        return p

    add("leq", "decide T <=_h S", 2)
    add("equiv", "decide T ==_h S", 2)
    p = add("rleq", "decide the induced order r*_xi(T) <=_h r*_xi(S)", 2)
    p.add_argument("--xi", required=True, metavar="ORD")
    p = add("apply", "apply s, r, s* or r* to a term", 1)
    p.add_argument("--op", required=True, choices=sorted(_APPLY))
    p.add_argument("--ord", required=True, metavar="ORD")
    p = add("level", "decide membership in level xi", 1)
    p.add_argument("--xi", required=True, metavar="ORD")
    add("irr", "decide join-irreducibility", 1)
    add("oracle", "brute-force monotone-map comparison of level-1 terms", 2)
    p = add("canon", "print the canonical form", 1)
    p.add_argument("--size", action="store_true", help="also print the node count")
    p = add("dom", "domination order on comma-separated label sets")
    p.add_argument("small", metavar="S")
    p.add_argument("big", metavar="R")
    add("qo", "print the closed Q-definition in normalized form")
    p = add("ord", "ordinal arithmetic")
    p.add_argument("value", metavar="ORD")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--cmp", metavar="ORD", help="print LT, EQ or GT")
    group.add_argument("--add", metavar="ORD", help="print the ordinal sum")
    group.add_argument("--summands", action="store_true", help="print CNF exponents with repetition")
    p = add("enum", "enumerate terms, build the degree poset, export it", 0)
    p.add_argument("--xi", metavar="ORD")
    p.add_argument("--max-nodes", type=int, metavar="N")
    p.add_argument("--max-branch", type=int, default=2, metavar="B")
    p.add_argument("--indices", metavar="ORD,ORD,...", help="s-index alphabet (default: 0 and the exponents of xi)")
    p.add_argument("--limit", type=int, default=explore.DEFAULT_LIMIT)
    p.add_argument("--rel", default="h", metavar="h|hxi:ORD")
    p.add_argument("--dot", metavar="PATH")
    p.add_argument("--report", metavar="PATH")
    return parser


def run(argv: list | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    handler, needs_qo, _ = COMMANDS[args.command]
    try:
        q = qo.read_qo(args.qo) if needs_qo else None
        return handler(args, q)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (ParseError, UsageError, EnumerationLimitError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
