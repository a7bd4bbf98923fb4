"""Command-line front end: ``python -m parity600 <command> ...``.

Exit status: 0 success, 1 verification or assertion failure, 2 bad arguments.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from .export import catalog_json, export_dot, export_mmp, load_sets
from .raybasis import RayBasisSet, is_parity_proof

KINDS = ("30-15a", "34-17", "26-13", "38-19", "30-15b", "50-25", "54-27", "complement", "table8")


class UsageError(ValueError):
    """Bad user input detected after argparse; maps to exit status 2."""


def _emit(sets: list[RayBasisSet], kind: str, fmt: str, out, **extra) -> None:
    if fmt == "json":
        out.write(catalog_json(sets, kind, **extra))
    elif fmt == "mmp":
        for s in sets:
            out.write(export_mmp(s).text)
    elif fmt == "dot":
        for s in sets:
            out.write(export_dot(s))
    else:
        for s in sets:
            out.write(f"{s.size}: {s.canonical()}\n")


def _read_sets(path: str) -> list[RayBasisSet]:
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(str(exc)) from exc
    return load_sets(text)


def _parse_line(tok: str) -> tuple[int, ...]:
    try:
        rays = tuple(int(x) for x in tok.replace("-", ",").split(","))
    except ValueError as exc:
        raise UsageError(f"expected a line like 5,24,57, got {tok!r}") from exc
    if len(rays) != 3:
        raise UsageError(f"a line has three rays, got {tok!r}")
    return rays


def _ints(tokens: Sequence[str], n: int, what: str) -> list[int]:
    if len(tokens) < n:
        raise UsageError(f"{what}: expected {n} DPP labels")
    try:
        vals = [int(t) for t in tokens[:n]]
    except ValueError as exc:
        raise UsageError(f"{what}: DPP labels must be integers") from exc
    if any(not 1 <= v <= 36 for v in vals):
        raise UsageError(f"{what}: DPP labels run from 1 to 36")
    return vals


# subcommands -----------------------------------------------------------------

def cmd_tables(args, out) -> int:
    from .verify import verify_tables

    rep = verify_tables()
    if args.format == "json":
        out.write(json.dumps(rep.to_json(), indent=1) + "\n")
    else:
        out.write(rep.text())
    return 0 if rep.ok else 1


def cmd_facets(args, out) -> int:
    from .facets import default_facets

    F = default_facets()
    if args.list:
        items = {"dlp": F.enumerate_dlps, "dpp": F.enumerate_dpps, "rc": F.enumerate_rcs,
                 "line": F.lines}[args.list]()
        for x in items:
            out.write(f"{x}\n")
        return 0
    census = {
        "lines": len(F.lines()),
        "DLPs": len(F.enumerate_dlps()),
        "DPPs": len(F.enumerate_dpps()),
        "RCs": len(F.enumerate_rcs()),
        "tilings": {k: len(F.tilings(k)) for k in ("RC", "DLP", "DPP")},
    }
    if args.format == "json":
        out.write(json.dumps({"schema": 1, **census}, indent=1) + "\n")
    else:
        for k, v in census.items():
            out.write(f"{k}: {v}\n")
    return 0


def _roots(args) -> list[int]:
    roots = list(range(1, 76))
    return roots[::-1] if args.seed_order == "descending" else roots


def cmd_search(args, out) -> int:
    from .search import SearchTarget, search, stderr_progress

    try:
        target = SearchTarget(args.rays, args.bases)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    universe = None
    if args.within:
        (amb,) = _read_sets(args.within)
        universe = amb.basis_ids
    sets = search(target, universe=universe, limit=args.limit, workers=args.threads,
                  roots=_roots(args), complete=not args.minimal_only,
                  progress=stderr_progress if args.progress else None)
    _emit(sets, f"{args.rays}-{args.bases}", args.format, out)
    return 0


def _construct(args) -> tuple[list[RayBasisSet], dict]:
    from .constructions import ConstructionError, default_constructions

    C = default_constructions()
    F = C.F
    p = args.params or []
    extra: dict = {}
    kind = args.kind
    try:
        if kind == "table8":
            return list(C.table8_examples()), extra
        if args.all:
            if kind in ("50-25", "54-27"):
                ambients = ([C.delete_dpps([d]) for d in range(1, 37)] if kind == "50-25"
                            else [C.delete_dlp(d) for d in F.enumerate_dlps()])
                sets = [h for a in ambients for pair in C.partition_even_set(a) for h in pair]
                return sets, extra
            if kind == "complement":
                raise UsageError("complement needs --params")
            cat = C.catalog(kind)
            seen, sets = set(), []
            for c in cat:
                if c.result.basis_ids not in seen:
                    seen.add(c.result.basis_ids)
                    sets.append(c.result)
            extra["generated"] = len(cat)
            return sets, extra
        if kind == "30-15a":
            return [C.construct_30_15_type1(_ints(p, 3, kind))], extra
        if kind in ("34-17", "26-13"):
            pair = _ints(p, 2, kind)
            if len(p) != 3:
                raise UsageError(f"{kind}: --params DPP DPP LINE (e.g. 1 2 17,25,42)")
            d = F.dlp_of(_parse_line(p[2]))
            f = C.construct_34_17 if kind == "34-17" else C.construct_26_13
            return [f(pair, d)], extra
        if kind in ("38-19", "30-15b"):
            (dpp,) = _ints(p, 1, kind)
            if len(p) != 3:
                raise UsageError(f"{kind}: --params DPP LINE LINE (e.g. 1 5,19,46 7,34,53)")
            pair = (F.dlp_of(_parse_line(p[1])), F.dlp_of(_parse_line(p[2])))
            f = C.construct_38_19 if kind == "38-19" else C.construct_30_15_type2
            return [f(dpp, pair)], extra
        if kind == "50-25":
            (dpp,) = _ints(p, 1, kind)
            pairs = C.partition_even_set(C.delete_dpps([dpp]))
            extra["partitions"] = len(pairs)
            return [h for pair in pairs for h in pair], extra
        if kind == "54-27":
            if len(p) != 1:
                raise UsageError("54-27: --params LINE (one line of the DLP to delete)")
            pairs = C.partition_even_set(C.delete_dlp(F.dlp_of(_parse_line(p[0]))))
            extra["partitions"] = len(pairs)
            return [h for pair in pairs for h in pair], extra
        if kind == "complement":
            # --params dpp:N | dlp:a,b,c  R-B
            if len(p) != 2:
                raise UsageError("complement: --params dpp:N|dlp:a,b,c R-B")
            src, val = p[0].split(":", 1)
            amb = C.delete_dpps([int(val)]) if src == "dpp" else C.delete_dlp(F.dlp_of(_parse_line(val)))
            R, B = (int(x) for x in p[1].split("-"))
            found = C.find_basis_complementary_pairs(amb, (R, B), limit=args.limit)
            extra["critical_pairs"] = sum(a and b for _, _, a, b in found)
            return [x for s, c, _, _ in found for x in (s, c)], extra
    except (ConstructionError, KeyError) as exc:
        raise UsageError(str(exc)) from exc
    raise UsageError(f"unknown kind {kind!r}")


def cmd_construct(args, out) -> int:
    sets, extra = _construct(args)
    bad = [s for s in sets if not is_parity_proof(s)]
    _emit(sets, args.kind, args.format, out, **extra)
    return 1 if bad else 0


def cmd_critical(args, out) -> int:
    from .search import is_basis_critical

    sets = _read_sets(args.input)
    failures = 0
    for s in sets:
        crit = is_parity_proof(s) and is_basis_critical(s, full_orthogonality=args.full)
        failures += not crit
        if args.format != "json":
            out.write(f"{s.size} {'critical' if crit else 'NOT critical'}: {s.canonical()}\n")
    if args.format == "json":
        out.write(json.dumps({"schema": 1, "checked": len(sets), "not_critical": failures}) + "\n")
    return 1 if failures else 0


def cmd_orbits(args, out) -> int:
    from .symmetry import classify, groups

    sets = _read_sets(args.input)
    G = groups()[args.group]
    reports = [G.orbit_report(reps[0]) for reps in classify(sets, args.group).values()]
    if args.format == "json":
        out.write(json.dumps({"schema": 1, "group": args.group, "group_order": G.order,
                              "classes": [r.to_json() for r in reports],
                              "total": sum(r.orbit_size for r in reports)}, indent=1) + "\n")
    else:
        for r in reports:
            out.write(f"{r.representative.size} orbit {r.orbit_size} stabilizer {r.stabilizer_order}: "
                      f"{r.representative.canonical()}\n")
        out.write(f"classes {len(reports)} total {sum(r.orbit_size for r in reports)}\n")
    return 0


def cmd_cabello(args, out) -> int:
    from .contextuality import NotAParityProof, global_bound, nhv_max

    if args.global_:
        from .search import search

        g = global_bound(search((26, 13), workers=args.threads))
        if args.format == "json":
            out.write(json.dumps({"schema": 1, **g.to_json()}, indent=1) + "\n")
        else:
            out.write(f"hitting-set bound {g.hitting_set_bound} over {g.n_proofs} proofs\n"
                      f"minimum violated bases {len(g.min_violated)}: {list(g.min_violated)}\n"
                      f"NHV maximum {g.nhv_max_sum} of 75, ratio {g.ratio}\n")
        return 0
    if not args.input:
        raise UsageError("cabello needs --input or --global")
    status = 0
    reports = []
    for s in _read_sets(args.input):
        try:
            r = nhv_max(s)
        except NotAParityProof as exc:
            raise UsageError(str(exc)) from exc
        status |= r.F_max_nhv != r.B - 2
        reports.append(r)
    if args.format == "json":
        out.write(json.dumps({"schema": 1, "reports": [r.to_json() for r in reports]}, indent=1) + "\n")
    else:
        for r in reports:
            out.write(f"B={r.B} F_max={r.F_max_nhv} M={r.M_quantum} n={r.n} m={r.m} "
                      f"violated={list(r.violated)}\n")
    return int(status)


def cmd_export(args, out) -> int:
    sets = _read_sets(args.input)
    fmt = args.format if args.format != "text" else "mmp"
    _emit(sets, "export", fmt, out)
    return 0


# parser ----------------------------------------------------------------------

def _common(sub: bool) -> argparse.ArgumentParser:
    # subcommand copies default to SUPPRESS so they never clobber values given before the command
    d = (lambda v: argparse.SUPPRESS) if sub else (lambda v: v)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--threads", type=int, default=d(os.cpu_count() or 1),
                        help="worker processes for search (default: all cores)")
    common.add_argument("--seed-order", choices=("ascending", "descending"), default=d("ascending"),
                        help="root-basis iteration order; output order is unaffected")
    common.add_argument("--format", choices=("json", "mmp", "dot", "text"), default=d("text"))
    common.add_argument("-o", "--output", default=d(None), help="write to this file instead of stdout")
    return common


def build_parser() -> argparse.ArgumentParser:
    top = _common(False)
    common = _common(True)
    ap = argparse.ArgumentParser(prog="parity600", description=__doc__.splitlines()[0], parents=[top])
    sub = ap.add_subparsers(dest="command", required=True)

    sub.add_parser("tables", parents=[common], help="verify the embedded tables")
    p = sub.add_parser("facets", parents=[common], help="facet census")
    p.add_argument("--list", choices=("line", "dlp", "dpp", "rc"))

    p = sub.add_parser("search", parents=[common], help="exhaustive R-B parity proof search")
    p.add_argument("--rays", "-R", type=int, required=True)
    p.add_argument("--bases", "-B", type=int, required=True)
    p.add_argument("--limit", type=int)
    p.add_argument("--within", help="JSON file holding the ambient set to search inside")
    p.add_argument("--minimal-only", action="store_true",
                   help="do not extend all-even intermediate states (critical proofs only)")
    p.add_argument("--progress", action="store_true")

    p = sub.add_parser("construct", parents=[common], help="build proofs from facets")
    p.add_argument("--kind", choices=KINDS, required=True)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--all", action="store_true")
    g.add_argument("--params", nargs="+")
    p.add_argument("--limit", type=int)

    p = sub.add_parser("critical", parents=[common], help="check basis-criticality")
    p.add_argument("--input", required=True)
    p.add_argument("--full", action="store_true", help="use full orthogonality, not just basis membership")

    p = sub.add_parser("orbits", parents=[common], help="classify sets up to symmetry")
    p.add_argument("--input", required=True)
    p.add_argument("--group", choices=("graph", "geometric", "rotation"), default="geometric")

    p = sub.add_parser("cabello", parents=[common], help="noncontextual bounds")
    p.add_argument("--input")
    p.add_argument("--global", dest="global_", action="store_true")

    p = sub.add_parser("export", parents=[common], help="convert a JSON set/catalog")
    p.add_argument("--input", required=True)
    return ap


COMMANDS = {
    "tables": cmd_tables, "facets": cmd_facets, "search": cmd_search, "construct": cmd_construct,
    "critical": cmd_critical, "orbits": cmd_orbits, "cabello": cmd_cabello, "export": cmd_export,
}


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.threads < 1:
        print("error: --threads must be positive", file=sys.stderr)
        return 2
    out = open(args.output, "w") if args.output else sys.stdout
    try:
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (AssertionError, RuntimeError) as exc:
        print(f"failure: {exc}", file=sys.stderr)
        return 1
    except BrokenPipeError:
        # reader went away (e.g. piped into head); silence the final flush
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return 0
    finally:
        if out is not sys.stdout:
            out.close()
