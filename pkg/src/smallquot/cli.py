"""Command-line front end.

Exit status: 0 when every check passes, 1 when a check fails (the witness is
in the report), 2 on usage, parse or configuration errors.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import checks
from .braids import relation_suite
from .catalog import FORMATS, emit_report, load_catalog
from .errors import SmallQuotError
from .groups import set_default_ceiling
from .named import BUILTIN_NAMES, THEOREM_A_NAMES, builtin_group
from .reports import CheckReport


class UsageError(Exception):
    pass


def _ranged(lo: int, hi: int):
    def parse(text: str) -> int:
        try:
            v = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
        if not lo <= v <= hi:
            raise argparse.ArgumentTypeError(f"must be in {lo}..{hi}, got {v}")
        return v

    return parse


def _positive(text: str) -> int:
    return _ranged(1, 10**12)(text)


def resolve_target(target: str):
    """A built-in name, a catalog path with one entry, or ``PATH:NAME``."""
    if target in BUILTIN_NAMES:
        return target, builtin_group(target)
    path, name = target, ""
    if not os.path.exists(target) and ":" in target:
        path, _, name = target.rpartition(":")
    if not os.path.exists(path):
        raise UsageError(
            f"unknown target {target!r}: not a built-in name ({', '.join(BUILTIN_NAMES)}) "
            "and not a catalog file"
        )
    entries = load_catalog(path)
    if name:
        entries = [e for e in entries if e.name == name]
        if not entries:
            raise UsageError(f"catalog {path} has no entry named {name!r}")
    elif len(entries) != 1:
        raise UsageError(f"catalog {path} has {len(entries)} entries; use {path}:NAME")
    return entries[0].name, entries[0].to_table()


def _classify(a) -> CheckReport:
    name, G = resolve_target(a.target)
    return checks.classify_report(a.n, G, name, a.classes, a.non_cyclic, a.workers)


def _lemma_a(a) -> CheckReport:
    name, G = resolve_target(a.target)
    return checks.lemma_a_over_target(a.n, G, name, a.workers)


def _catalog_run(a) -> CheckReport:
    if a.catalog:
        entries = load_catalog(a.catalog)
        groups = [(e.name, e.to_table()) for e in entries]
    else:
        groups = [(nm, builtin_group(nm)) for nm in THEOREM_A_NAMES]
    return checks.theorem_a_catalog_check(a.n, groups, workers=a.workers)


COMMANDS = {
    "classify-homs": _classify,
    "verify-lemma-a": _lemma_a,
    "sp-info": lambda a: checks.sp_info(a.g),
    "verify-iso": lambda a: checks.verify_iso(a.g),
    "simplicity": lambda a: checks.simplicity_check(a.group, a.workers),
    "base-cases": lambda a: checks.base_case_check(),
    "catalog-run": _catalog_run,
    "relation-suite": lambda a: relation_suite(a.n),
    "mcg-orbits": lambda a: checks.mcg_orbit_checks(a.g),
    "lattice": lambda a: checks.sn_quotient_lattice_check(a.n),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="tsv")
    common.add_argument("--output", help="write the report here instead of standard output")
    common.add_argument("--ceiling", type=_positive, help="element-count ceiling for closures")
    common.add_argument("--workers", type=_positive, default=1)

    p = argparse.ArgumentParser(
        prog="smallquot",
        description="Verify finite computations about quotients of braid groups "
        "and symplectic groups over GF(2).",
    )
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    c = sub.add_parser("classify-homs", parents=[common], help="enumerate homomorphisms B_n -> T")
    c.add_argument("--n", type=_ranged(2, 7), required=True)
    c.add_argument("--target", required=True, help="built-in name, catalog file, or FILE:NAME")
    c.add_argument("--classes", action="store_true", help="list conjugacy classes")
    c.add_argument("--non-cyclic", action="store_true", help="drop homomorphisms with cyclic image")

    c = sub.add_parser("verify-lemma-a", parents=[common],
                       help="band generator images of every non-cyclic class are distinct")
    c.add_argument("--n", type=_ranged(3, 7), required=True)
    c.add_argument("--target", required=True)

    for name, text in (("sp-info", "order and counts for Sp(2g, F2)"),
                       ("mcg-orbits", "transvection and pair orbits")):
        c = sub.add_parser(name, parents=[common], help=text)
        c.add_argument("--g", type=_ranged(1, 3), required=True)

    c = sub.add_parser("verify-iso", parents=[common],
                       help="refinement actions Sp(2,F2) -> S3, Sp(4,F2) -> S6")
    c.add_argument("--g", type=_ranged(1, 2), required=True)

    c = sub.add_parser("simplicity", parents=[common], help="decide simplicity of a named group")
    c.add_argument("--group", choices=sorted(checks.KNOWN_SIMPLE), required=True)

    sub.add_parser("base-cases", parents=[common], help="B_3 and B_4 into groups of order <= 6")

    c = sub.add_parser("catalog-run", parents=[common],
                       help="search a catalog for small non-cyclic quotients of B_n")
    c.add_argument("--n", type=_ranged(5, 6), required=True)
    c.add_argument("--catalog", help="JSON-lines catalog (default: the built-in list)")

    c = sub.add_parser("relation-suite", parents=[common], help="Artin and band generator relations")
    c.add_argument("--n", type=_ranged(3, 7), required=True)

    c = sub.add_parser("lattice", parents=[common], help="normal subgroups of S_n")
    c.add_argument("--n", type=_ranged(5, 6), required=True)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    if args.ceiling is not None:
        set_default_ceiling(args.ceiling)
    print(f"smallquot: running {args.command} ...", file=sys.stderr, flush=True)
    try:
        report = COMMANDS[args.command](args)
    except (UsageError, SmallQuotError, OSError) as exc:
        print(f"smallquot: error: {exc}", file=sys.stderr)
        return 2
    finally:
        set_default_ceiling(None)
    text = emit_report(report, args.format)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    print(f"smallquot: {args.command} finished: {report.verdict}", file=sys.stderr, flush=True)
    return 1 if report.failed else 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
