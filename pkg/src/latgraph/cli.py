"""Command-line driver: ``latgraph <command> ...``.

Exit codes: 0 success, 1 input or validation error, 2 a verification
counterexample was found.
"""

import argparse
import json
import sys

from .congruence import all_congruences, verify_galois
from .depgraph import dependency_graph
from .errors import LatgraphError
from .io import CATALOG_NAMES, catalog, dumps_structure, export_dot, export_report, parse_structure, random_structure
from .order import Poset
from .report import analyze, verify

EXIT_OK, EXIT_INPUT, EXIT_COUNTEREXAMPLE = 0, 1, 2


def _load(spec):
    """A path, or ``catalog:<name>`` for a built-in instance."""
    if spec.startswith("catalog:"):
        name = spec.split(":", 1)[1]
        return catalog(name), name
    return parse_structure(spec), spec


def _need_semilattice(s):
    if isinstance(s, Poset):
        raise LatgraphError("this command needs a semilattice or lattice")
    return s


def cmd_analyze(args):
    s, name = _load(args.file)
    doc = analyze(s, name)
    if args.json:
        sys.stdout.write(export_report(doc))
        return EXIT_OK
    print(f"{name}: {doc['kind']} with {doc['size']} elements")
    if "predicates" in doc:
        print("join-irreducibles:", ", ".join(doc["join_irreducibles"]))
        print("join-primes:", ", ".join(doc["join_primes"]) or "-")
        for key, value in sorted(doc["predicates"].items()):
            print(f"  {key}: {value}")
        print("edges:", " ".join(f"{a}->{b}" for a, b in doc["graph"]["edges"]))
        for key, value in sorted(doc["counts"].items()):
            print(f"  {key}: {value}")
    return EXIT_OK


def cmd_graph(args):
    s, name = _load(args.file)
    text = export_dot(dependency_graph(_need_semilattice(s)), name=name)
    if args.dot in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(text)
    return EXIT_OK


def cmd_congruences(args):
    s, _ = _load(args.file)
    cons = all_congruences(_need_semilattice(s), args.kind)
    print(f"{len(cons)} {args.kind} congruences")
    for i, t in enumerate(cons):
        blocks = " | ".join(",".join(str(x) for x in b) for b in t.block_names())
        print(f"  con{i}: {blocks}")
    return EXIT_OK


def cmd_galois(args):
    s, name = _load(args.file)
    rep = verify_galois(_need_semilattice(s), args.kind)
    sys.stdout.write(export_report(dict(rep.as_dict(), name=name)))
    return EXIT_OK if rep.ok else EXIT_COUNTEREXAMPLE


def cmd_verify(args):
    s, name = _load(args.file)
    doc = verify(s, name)
    sys.stdout.write(export_report(doc))
    return EXIT_COUNTEREXAMPLE if doc["counterexamples"] else EXIT_OK


def cmd_catalog(args):
    if args.name is None:
        for name in CATALOG_NAMES:
            print(name)
        return EXIT_OK
    sys.stdout.write(dumps_structure(catalog(args.name), name=args.name))
    return EXIT_OK


def cmd_random(args):
    s = random_structure(args.seed, args.size, args.kind)
    name = f"random_{args.kind}_seed{args.seed}_size{args.size}"
    sys.stdout.write(dumps_structure(s, name=name))
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(prog="latgraph", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    kinds = ["lattice", "semilattice"]

    p = sub.add_parser("analyze", help="predicates, graph and counts")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("graph", help="dependency graph as DOT")
    p.add_argument("file")
    p.add_argument("--dot", metavar="OUT", help="output path, '-' for stdout")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("congruences", help="list all congruences")
    p.add_argument("file")
    p.add_argument("--kind", choices=kinds, default="lattice")
    p.set_defaults(func=cmd_congruences)

    p = sub.add_parser("galois", help="check the Galois connection laws")
    p.add_argument("file")
    p.add_argument("--kind", choices=kinds, default="lattice")
    p.set_defaults(func=cmd_galois)

    p = sub.add_parser("verify", help="run every verification pass")
    p.add_argument("file")
    p.add_argument("--all", action="store_true", help="run all passes (default)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("catalog", help="list or print built-in instances")
    p.add_argument("name", nargs="?")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("random", help="print a random structure file")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--kind", choices=kinds, default="lattice")
    p.set_defaults(func=cmd_random)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (LatgraphError, OSError, ValueError) as exc:
        print(f"latgraph: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
