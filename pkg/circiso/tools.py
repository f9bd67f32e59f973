import csv
import json
import typing

from .circulant import ConnectionSet
from .classification import FORWARD
from .enumeration import EnumeratedPair, EnumerationReport, IsoClass, ScanStats

SCHEMA_VERSION = 1

CSV_COLUMNS = ["n", "m", "R", "S", "t_witness"]


def report_to_dict(report: EnumerationReport) -> typing.Dict[str, typing.Any]:
    return {
        "n": report.n,
        "m": report.m,
        "pair_count": report.pair_count,
        "pairs": [
            {
                "r": list(p.r.jumps),
                "s": list(p.s.jumps),
                "m": p.m,
                "t": p.t,
                "direction": p.direction,
            }
            for p in report.pairs
        ],
        "classes": [[list(c.jumps) for c in iso_class] for iso_class in report.classes],
        "scan_stats": report.scan_stats.to_dict(),
    }


def report_from_dict(d: typing.Dict[str, typing.Any]) -> EnumerationReport:
    n = d["n"]
    pairs = [
        EnumeratedPair(
            ConnectionSet(n, tuple(p["r"])),
            ConnectionSet(n, tuple(p["s"])),
            p["m"],
            p["t"],
            p.get("direction", FORWARD),
        )
        for p in d["pairs"]
    ]
    if len(pairs) != d["pair_count"]:
        raise ValueError(f"pair_count {d['pair_count']} does not match {len(pairs)} listed pairs")
    classes = [
        IsoClass(tuple(ConnectionSet(n, tuple(members)) for members in c)) for c in d["classes"]
    ]
    return EnumerationReport(n, d["m"], pairs, classes, ScanStats(**d.get("scan_stats", {})))


def dumps(command: str, params: typing.Dict[str, typing.Any], result: typing.Any) -> str:
    """The stable machine-readable envelope of every command"""
    return json.dumps(
        {
            "schema_version": SCHEMA_VERSION,
            "command": command,
            "params": params,
            "result": result,
        },
        indent=2,
    )


def loads(s: str) -> typing.Dict[str, typing.Any]:
    d = json.loads(s)
    if d.get("schema_version") != SCHEMA_VERSION:
        raise ValueError(f"unsupported schema version {d.get('schema_version')!r}")
    if d.get("command") == "enumerate":
        d["result"] = report_from_dict(d["result"])
    return d


def write_csv(report: EnumerationReport, f: typing.TextIO):
    writer = csv.writer(f)
    writer.writerow(CSV_COLUMNS)
    for p in report.pairs:
        writer.writerow([report.n, p.m, str(p.r), str(p.s), p.t])
