"""Command-line entry point: ``nrtloops {catalog,analyze,enumerate,witness,sweep}``."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from contextlib import contextmanager
from pathlib import Path
from typing import Optional, Sequence

from . import perms as P
from .errors import NRTError
from .groups import (
    DEFAULT_CLOSURE_CAP,
    DEFAULT_SUBGROUP_CAP,
    Group,
    Subgroup,
    group_from_generators,
    parse_group_text,
    subgroup_from_elems,
    subgroup_generate,
)
from .named import CATALOG_IDS, catalog, parse_group_id
from .transversal import DEFAULT_NRT_CAP, build_lemma2_witness, enumerate_nrts, left_coset_collision
from .verifier import analyze, remark1_witnesses, sweep_pairs

log = logging.getLogger("nrtloops")


class UsageError(Exception):
    pass


def load_group(args) -> Group:
    given = [x for x in (args.group, args.table_file) if x]
    if len(given) != 1:
        raise UsageError("give exactly one of --group or --table-file")
    if args.table_file:
        path = Path(args.table_file)
        return parse_group_text(path.read_text(), name=path.name)
    if args.degree is not None:
        gens = P.parse_generators(args.group, args.degree)
        return group_from_generators(args.degree, gens, name=f"<{args.group}>", cap=args.closure_cap)
    return parse_group_id(args.group)


def parse_elems(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(",", " ").split()]
    except ValueError:
        raise UsageError(f"--subgroup-elems expects integers, got {text!r}") from None


def load_subgroup(G: Group, args) -> Subgroup:
    if args.subgroup_gens is not None and args.subgroup_elems is not None:
        raise UsageError("give at most one of --subgroup-gens or --subgroup-elems")
    if args.subgroup_gens is not None:
        if G.degree is None:
            raise UsageError("--subgroup-gens needs a permutation group; use --subgroup-elems")
        gens = P.parse_generators(args.subgroup_gens, G.degree)
        return subgroup_generate(G, [G.index_of_perm(g) for g in gens])
    if args.subgroup_elems is not None:
        return subgroup_from_elems(G, parse_elems(args.subgroup_elems))
    raise UsageError("a subgroup is required: --subgroup-gens or --subgroup-elems")


@contextmanager
def output(path: Optional[str]):
    if path:
        with open(path, "w") as fh:
            yield fh
    else:
        yield sys.stdout


def dump(obj, pretty: bool) -> str:
    return json.dumps(obj, indent=2 if pretty else None)


def cmd_catalog(args) -> int:
    with output(args.out) as out:
        for ident, G in zip(CATALOG_IDS, catalog()):
            out.write(f"{ident}\t{G.order}\n")
    return 0


def cmd_analyze(args) -> int:
    G = load_group(args)
    H = load_subgroup(G, args)
    rep = analyze(G, H, cap=args.nrt_cap, early_exit=args.early_exit)
    with output(args.out) as out:
        out.write(rep.to_json(args.pretty) + "\n")
    return 0 if rep.passed else 1


def cmd_enumerate(args) -> int:
    G = load_group(args)
    H = load_subgroup(G, args)
    with output(args.out) as out:
        for i, S in enumerate(enumerate_nrts(G, H, cap=args.nrt_cap)):
            row = {"index": i, "reps": list(S.reps)}
            if G.perms is not None:
                row["cycles"] = [G.label(r) for r in S.reps]
            out.write(dump(row, args.pretty) + "\n")
    return 0


def cmd_witness(args) -> int:
    G = load_group(args)
    H = load_subgroup(G, args)
    W = build_lemma2_witness(G, H)
    a, b = left_coset_collision(W)
    k = W.frame.left.coset_of[a]
    row = {
        "witness": list(W.reps),
        "sharedLeftCoset": list(W.frame.left.cosets[k]),
        "collision": [a, b],
    }
    if G.perms is not None:
        row["cycles"] = [G.label(r) for r in W.reps]
        row["collisionCycles"] = [G.label(a), G.label(b)]
    with output(args.out) as out:
        out.write(dump(row, args.pretty) + "\n")
    return 0


def cmd_sweep(args) -> int:
    entries = sweep_pairs(catalog(), args.max_order, nrt_cap=args.nrt_cap,
                          subgroup_cap=args.subgroup_cap, early_exit=args.early_exit, jobs=args.jobs)
    with output(args.out) as out:
        for e in entries:
            out.write(e.to_json(args.pretty) + "\n")
    reports = [e.report for e in entries if e.report is not None]
    failed = [e for e in entries if not e.passed]
    skipped = [e for e in entries if e.skipped]
    print(f"pairs={len(entries)} analyzed={len(reports)} skipped={len(skipped)} failed={len(failed)} "
          f"remark1_witnesses={len(remark1_witnesses(reports))}", file=sys.stderr)
    for e in failed:
        r = e.report
        bad = [k for k, v in r.checks().items() if not v]
        where = r.prop1_violations[:1] or r.lemma1_violations[:1]
        print(f"FAIL {e.group} H={list(e.subgroup)} checks={bad} nrt={where}", file=sys.stderr)
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nrtloops", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, group=True):
        p.add_argument("--out", help="write output here instead of stdout")
        p.add_argument("--pretty", action="store_true", help="indent JSON output")
        if group:
            p.add_argument("--group", help="named id (sym:3, dih:4, q8, ...) or generator string with --degree")
            p.add_argument("--table-file", help="group multiplication table file")
            p.add_argument("--degree", type=int, help="degree for a generator-string --group")
            p.add_argument("--closure-cap", type=int, default=DEFAULT_CLOSURE_CAP)
            p.add_argument("--subgroup-gens", help='1-based cycles, comma separated, e.g. "(1 2),(1 2 3)"')
            p.add_argument("--subgroup-elems", help="0-based element indices, e.g. 0,3,4")
            p.add_argument("--nrt-cap", type=int, default=DEFAULT_NRT_CAP)

    p = sub.add_parser("catalog", help="list built-in groups")
    common(p, group=False)
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("analyze", help="analyze all NRTs of one subgroup")
    common(p)
    p.add_argument("--early-exit", action="store_true")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("enumerate", help="list every NRT, one JSON line each")
    common(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("witness", help="an NRT that is not a left transversal")
    common(p)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("sweep", help="check every subgroup of the built-in catalog")
    common(p, group=False)
    p.add_argument("--max-order", type=int, default=24)
    p.add_argument("--nrt-cap", type=int, default=DEFAULT_NRT_CAP)
    p.add_argument("--subgroup-cap", type=int, default=DEFAULT_SUBGROUP_CAP)
    p.add_argument("--early-exit", action="store_true")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"nrtloops: error: {exc}", file=sys.stderr)
        return 2
    except (NRTError, ValueError, IndexError, OSError) as exc:
        print(f"nrtloops: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
