#!/usr/bin/env python
"""
Command line interface of circiso

    circiso classify --n 32 --r 1,2,15 --s 2,7,9
    circiso enumerate --n 32 --m 2 --json -
    circiso verify-fixtures
"""

import argparse
import logging
import sys
import typing

from . import __version__
from .adam import orbit
from .circulant import ConnectionSet
from .classify import classify_pair, core_extensions, type2_partners
from .config import ARGPARSE_ARGS, DEFAULT_CONFIG, EXHAUSTIVE_CONFIG, PARALLEL_CONFIG, SearchConfig, config_from_args
from .enumeration import enumerate_type2, recheck
from .family import FamilyParams, family_verify
from .fixtures import verify_fixtures
from .modring import check_order, reflexive_reduce
from .oracle import cross_validate
from .theta import ThetaParams, apply
from .tools import dumps, report_to_dict, write_csv
from .util import DomainError, FixtureError, format_jumps, parse_jumps

_LOGGER = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_DOMAIN_ERROR = 1
EXIT_USAGE = 2
EXIT_MISMATCH = 3

PRESETS = {
    "scoped": DEFAULT_CONFIG,
    "exhaustive": EXHAUSTIVE_CONFIG,
    "parallel": PARALLEL_CONFIG,
}


def emit(args, command: str, params: typing.Dict[str, typing.Any], result: typing.Any, text: str):
    """Prints the human-readable text unless the JSON envelope goes to stdout"""
    if args.json == "-":
        print(dumps(command, params, result))
        return
    print(text)
    if args.json is not None:
        with open(args.json, "w", encoding="utf-8") as f:
            f.write(dumps(command, params, result))


def cmd_reduce(args, config: SearchConfig) -> int:
    n = check_order(args.n, config)
    reduced = reflexive_reduce(n, parse_jumps(args.set))
    emit(args, "reduce", {"n": n, "set": args.set}, {"jumps": list(reduced)}, format_jumps(reduced))
    return EXIT_OK


def cmd_orbit(args, config: SearchConfig) -> int:
    c = ConnectionSet.parse(check_order(args.n, config), args.set)
    res = orbit(c)
    members = [{"jumps": list(m.jumps), "x": res.witness[m]} for m in res.members]
    text = "\n".join(f"{m.dumps()}\tx={res.witness[m]}" for m in res.members)
    emit(args, "orbit", {"n": c.n, "set": str(c)}, {"members": members}, text)
    return EXIT_OK


def cmd_theta(args, config: SearchConfig) -> int:
    c = ConnectionSet.parse(check_order(args.n, config), args.set)
    image = apply(ThetaParams(c.n, args.m, args.t), c)
    result = image.circulant_result
    emit(
        args,
        "theta",
        {"n": c.n, "m": args.m, "t": args.t, "set": str(c)},
        {"circulant": result is not None, "jumps": list(result.jumps) if result is not None else None},
        str(result) if result is not None else "not circulant",
    )
    return EXIT_OK


def cmd_classify(args, config: SearchConfig) -> int:
    n = check_order(args.n, config)
    a, b = ConnectionSet.parse(n, args.r), ConnectionSet.parse(n, args.s)
    verdict = classify_pair(a, b)
    emit(args, "classify", {"n": n, "r": str(a), "s": str(b)}, verdict.to_dict(), verdict.dumps())
    return EXIT_OK


def cmd_partners(args, config: SearchConfig) -> int:
    c = ConnectionSet.parse(check_order(args.n, config), args.set)
    partners = type2_partners(c)
    emit(
        args,
        "partners",
        {"n": c.n, "set": str(c)},
        [{"m": p.m, "t": p.t, "jumps": list(p.partner.jumps)} for p in partners],
        "\n".join(f"{p.partner.dumps()}\tm={p.m} t={p.t}" for p in partners),
    )
    return EXIT_OK


def cmd_enumerate(args, config: SearchConfig) -> int:
    report = enumerate_type2(args.n, args.m, config=config)
    lines = [f"{p.r}\t{p.s}\tm={p.m} t={p.t}" for p in report.pairs]
    lines.append(f"pairs: {report.pair_count}")
    lines.append(
        "classes: "
        + ", ".join(f"{count} of size {size}" for size, count in report.class_sizes().items())
    )
    params = {"n": args.n, "m": args.m, "min_size": config.min_size, "exhaustive": config.exhaustive}
    emit(args, "enumerate", params, report_to_dict(report), "\n".join(lines))
    if args.csv is not None:
        with open(args.csv, "w", encoding="utf-8", newline="") as f:
            write_csv(report, f)
    if args.recheck:
        problems = recheck(report, config)
        for problem in problems:
            print(problem, file=sys.stderr)
        if problems:
            return EXIT_MISMATCH
    return EXIT_OK


def cmd_family(args, config: SearchConfig) -> int:
    fp = FamilyParams(args.p, args.family_n, args.x, args.y)
    res = family_verify(fp)
    lines = [f"R_{i} = {c.dumps()}" for i, c in enumerate(res.members, start=1)]
    lines += [
        f"theta_{{{fp.order},{fp.p},{w.t}}}(R_{w.i}) = R_{(w.i + w.j - 1) % fp.p + 1}: {'ok' if w.ok else 'FAILED'}"
        for w in res.witnesses
    ]
    lines += [f"R_{i} and R_{k} are related by the unit {x}" for i, k, x in res.type1_pairs]
    lines.append("verified" if res.ok else "verification failed")
    result = {
        "ok": res.ok,
        "members": [list(c.jumps) for c in res.members],
        "witnesses": [
            {"i": w.i, "j": w.j, "t": w.t, "ok": w.ok} for w in res.witnesses
        ],
    }
    params = {"p": fp.p, "n": fp.n, "x": fp.x, "y": fp.y}
    emit(args, "family", params, result, "\n".join(lines))
    return EXIT_OK if res.ok else EXIT_MISMATCH


def cmd_extend(args, config: SearchConfig) -> int:
    core = ConnectionSet.parse(check_order(args.n, config), args.set)
    rows = core_extensions(core.n, args.m, core, args.t)
    lines = ["# n\tR\tS\tlabel\tsource"]
    lines += [
        f"{core.n}\t{row.r}\t{row.s if row.s is not None else '-'}\t{row.label or '-'}\t{i}"
        for i, row in enumerate(rows, start=1)
    ]
    result = [
        {"r": list(row.r.jumps), "s": list(row.s.jumps) if row.s else None, "label": row.label}
        for row in rows
    ]
    emit(args, "extend", {"n": core.n, "m": args.m, "t": args.t, "set": str(core)}, result, "\n".join(lines))
    return EXIT_OK


def cmd_verify_fixtures(args, config: SearchConfig) -> int:
    kwargs = {} if args.errata is None else {"errata_path": args.errata}
    reports = verify_fixtures(args.paths or None, **kwargs)
    lines = []
    for report in reports:
        lines.append(
            f"{report.path}: {report.rows} rows, {report.matches} matches, "
            f"{len(report.errata_applied)} errata, {len(report.mismatches)} mismatches"
        )
        lines += [f"  {m.dumps()}" for m in report.mismatches]
    result = [
        {
            "path": r.path,
            "rows": r.rows,
            "matches": r.matches,
            "errata": [e.source for e in r.errata_applied],
            "mismatches": [m.dumps() for m in r.mismatches],
        }
        for r in reports
    ]
    emit(args, "verify-fixtures", {"paths": [r.path for r in reports]}, result, "\n".join(lines))
    return EXIT_OK if all(r.ok for r in reports) else EXIT_MISMATCH


def cmd_cross_validate(args, config: SearchConfig) -> int:
    res = cross_validate(args.n, args.m, config)
    lines = [f"refutation: {a.dumps()} / {b.dumps()}" for a, b in res.refutations]
    lines += [f"miss: {a.dumps()} / {b.dumps()}" for a, b in res.misses]
    lines.append(
        f"{len(res.confirmed)} confirmed, {len(res.refutations)} refutations, {len(res.misses)} misses"
    )
    result = {
        "confirmed": len(res.confirmed),
        "refutations": [[list(a.jumps), list(b.jumps)] for a, b in res.refutations],
        "misses": [[list(a.jumps), list(b.jumps)] for a, b in res.misses],
    }
    emit(args, "cross-validate", {"n": args.n, "m": args.m}, result, "\n".join(lines))
    return EXIT_OK if not res.refutations else EXIT_MISMATCH


def add_config_args(p: argparse.ArgumentParser):
    p.add_argument(
        "--preset",
        choices=sorted(PRESETS),
        default="scoped",
        help="Configuration preset the options below are applied to.",
    )
    for k, v in ARGPARSE_ARGS.items():
        flag = f"--{k.replace('_', '-')}"
        if "type" in v:
            p.add_argument(flag, dest=k, default=None, **v)
        else:
            p.add_argument(flag, dest=k, action="store_true", default=None, **v)


def build_parser() -> argparse.ArgumentParser:
    a = argparse.ArgumentParser(
        prog="circiso",
        description="Type-1 and Type-2 isomorphisms of circulant graphs.",
    )
    a.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    a.add_argument(
        "-v", "--verbose", action="count", default=0, help="-v for progress, -vv for debug output."
    )
    sub = a.add_subparsers(dest="command", required=True)

    def command(name: str, func, summary: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=summary)
        p.set_defaults(func=func)
        p.add_argument(
            "--json", default=None, metavar="PATH", help="Write the JSON report to PATH, '-' for stdout."
        )
        add_config_args(p)
        return p

    p = command("reduce", cmd_reduce, "Reflexively reduce a list of jumps.")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--set", required=True, help="Comma separated jumps, e.g. 9,2,23")

    p = command("orbit", cmd_orbit, "List the orbit of a connection set under the units.")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--set", required=True)

    p = command("theta", cmd_theta, "Apply theta_{n,m,t} to a circulant graph.")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--set", required=True)

    p = command("classify", cmd_classify, "Classify a pair of connection sets.")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", required=True)
    p.add_argument("--s", required=True)

    p = command("partners", cmd_partners, "List the Type-2 partners of a connection set.")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--set", required=True)

    p = command("enumerate", cmd_enumerate, "Find all Type-2 pairs of an order.")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--csv", default=None, metavar="PATH", help="Write the pairs as CSV to PATH.")
    p.add_argument(
        "--recheck", action="store_true", help="Re-verify every pair with explicit permutations."
    )

    p = command("family", cmd_family, "Generate and verify a parametric Type-2 family.")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--family-n", type=int, required=True)
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--y", type=int, required=True)

    p = command("extend", cmd_extend, "Extend a core by all sets of multiples of m.")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--set", required=True)

    p = command("verify-fixtures", cmd_verify_fixtures, "Re-classify the transcribed tables.")
    p.add_argument("paths", nargs="*", help="Fixture files, defaults to the packaged ones.")
    p.add_argument("--errata", default=None, help="Errata file, defaults to the packaged one.")

    p = command("cross-validate", cmd_cross_validate, "Compare with a brute-force search.")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)

    return a


def main(argv: typing.Optional[typing.Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level={0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG),
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    config = config_from_args(args, PRESETS[args.preset])
    try:
        return args.func(args, config)
    except DomainError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DOMAIN_ERROR
    except FixtureError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_MISMATCH


if __name__ == "__main__":
    sys.exit(main())
