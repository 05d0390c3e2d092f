"""Command line: ``weiljet <command> ...``.

Every command builds one JSON document (schema version 1); the text output
is rendered from that document.  Exit status: 0 when every check passes, 1
when some check fails, 2 on unreadable input, 3 when a size cap is hit.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from .errors import CapExceeded, Inconsistent, NotHolonomic, ParseError, SchemaError
from .identities import SUITES, run_suites
from .infinitesimal import parse_object
from .jets import (
    SECOND,
    FirstApproachTower,
    SectionJet,
    check_first,
    check_second,
    check_second_tangential,
    check_third,
    check_third_tangential,
    from_section_jet,
    phi,
    psi,
    psi_by_elimination,
)
from .jets.io import candidate_to_json, load, tower_to_json
from .limits import standard_qcr
from .poly import parse_poly
from .report import Report

SCHEMA_VERSION = 1

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


class InputError(Exception):
    pass


def _read_json(path: str):
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from exc


def _document(command: str, args: dict, report: Report, result=None) -> dict:
    doc = {
        "schema_version": SCHEMA_VERSION,
        "command": {"name": command, "args": args},
        "title": report.title,
        "entries": [e.to_json() for e in report.entries],
        "overall": "pass" if report.passed else "fail",
    }
    if result is not None:
        doc["result"] = result
    return doc


# -- commands --------------------------------------------------------------------


def cmd_qcr(expr: str) -> dict:
    obj = parse_object(expr)
    rep = standard_qcr(obj)
    verdict = rep.verdict
    report = Report(f"standard representation of {obj}")
    report.add("representation is a limit", verdict.is_limit,
               None if verdict.is_limit else f"dimension deficit {verdict.equalizer_dim - verdict.apex_dim}")
    return _document("qcr", {"expr": expr}, report, rep.to_json())


def cmd_verify_identities(only: str | None, cap: int) -> dict:
    report = run_suites(only, cap)
    return _document("verify-identities", {"only": only, "n": cap}, report)


def _jet_report(obj, tangential: bool) -> tuple[Report, dict | None]:
    if isinstance(obj, FirstApproachTower):
        verdict, report = check_first(obj)
        return report, {"classification": verdict}
    if obj.approach == SECOND:
        return (check_second_tangential(obj) if tangential else check_second(obj)), None
    return (check_third_tangential(obj) if tangential else check_third(obj)), None


def cmd_check_jet(path: str, tangential: bool) -> dict:
    obj = load(_read_json(path))
    report, extra = _jet_report(obj, tangential)
    return _document("check-jet", {"file": Path(path).name, "tangential": tangential}, report, extra)


def cmd_transmogrify(path: str, mapping: str) -> dict:
    obj = load(_read_json(path))
    args = {"file": Path(path).name, "map": mapping}
    if mapping == "phi":
        if not isinstance(obj, FirstApproachTower):
            raise SchemaError("phi expects a first-approach tower file")
        verdict, first = check_first(obj)
        report = Report(f"phi of a tower of order {obj.order}")
        report.extend(first, prefix="input: ")
        if verdict != "holonomic":
            return _document("transmogrify", args, report)
        image = phi(obj)
        report.extend(check_second_tangential(image), prefix="image: ")
        return _document("transmogrify", args, report, candidate_to_json(image))
    if isinstance(obj, FirstApproachTower) or obj.approach != SECOND:
        raise SchemaError("psi expects a cube-model (second) candidate file")
    report = Report(f"psi of a candidate on D^{obj.n}")
    try:
        image = psi(obj)
    except Inconsistent as exc:
        report.add("image is symmetric", False, str(exc))
        return _document("transmogrify", args, report)
    report.add("image is symmetric", True)
    other = psi_by_elimination(obj)
    diff = image.first_difference(other)
    report.add("k! rule agrees with elimination", diff is None,
               None if diff is None else f"fiber {diff[0] + 1}: difference {diff[2]}")
    report.extend(check_third_tangential(image), prefix="image: ")
    return _document("transmogrify", args, report, candidate_to_json(image))


SAMPLES = ("holonomic-d2", "semi-holonomic-d2", "holonomic-tower", "holonomic-d3")


def sample(name: str) -> dict:
    """Small ready-made input files; see ``weiljet sample --help``."""
    s = SectionJet.from_polynomials([parse_poly("X1^2*X2 + 3*X1", 2)], [1, 2], 3)
    if name == "holonomic-d2":
        return candidate_to_json(from_section_jet(s, SECOND, 2))
    if name == "holonomic-d3":
        return candidate_to_json(from_section_jet(s, SECOND, 3))
    if name == "semi-holonomic-d2":
        c = from_section_jet(s, SECOND, 2)
        key = (0, ((0, 1), (1, 1)))
        body = dict(c.body)
        body[key] = body[key] + parse_poly("g1_11")
        return candidate_to_json(c.with_body(body))
    if name == "holonomic-tower":
        return tower_to_json(from_section_jet(s, "first", 2))
    raise ValueError(f"unknown sample {name!r}")


# -- rendering ----------------------------------------------------------------------


def render(doc: dict) -> str:
    lines = [doc["title"]]
    result = doc.get("result") or {}
    if "pieces" in result:
        lines.append(f"  pieces: {len(result['pieces'])}")
        for p in result["pieces"]:
            lines.append(f"    D^{p['dim']}: ({', '.join(p['map'])})")
        lines.append(f"  overlaps: {len(result['overlaps'])}")
        for o in result["overlaps"]:
            a, b = o["pieces"]
            lines.append(f"    D^{o['dim']} between pieces {a + 1} and {b + 1}")
        cert = result["certificate"]
        lines.append(f"  verdict: {result['verdict']} (apex {cert['apex_dim']}, "
                     f"equalizer {cert['equalizer_dim']}, rank {cert['rank']})")
    if "classification" in result:
        lines.append(f"  classification: {result['classification']}")
    for e in doc["entries"]:
        line = f"{e['verdict'].upper():4}  {e['name']}"
        if "witness" in e:
            line += f"  [{e['witness']}]"
        lines.append(line)
    if "body" in result:
        lines.append(f"image ({result['approach']}, n={result['n']}):")
        for item in result["body"]:
            lines.append(f"  y{item['fiber']} [{item['monomial']}] = {item['value']}")
    lines.append(f"overall: {doc['overall'].upper()}")
    if "timing" in doc:
        lines.append(f"time: {doc['timing']['seconds']:.3f} s")
    return "\n".join(lines)


# -- entry point --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="weiljet", description="Weil algebras, infinitesimal objects and jets.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("qcr", help="standard representation of an infinitesimal object")
    p.add_argument("expr", help='object text, e.g. "D{3}_2", "D(2)", "D{3;(1,2)}"')
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("verify-identities", help="run the built-in identity suites")
    p.add_argument("--only", choices=SUITES)
    p.add_argument("--n", type=int, default=3, help="size cap (default 3)")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("check-jet", help="check a jet candidate or tower file")
    p.add_argument("file")
    p.add_argument("--tangential", action="store_true", help="check full tangentiality")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("transmogrify", help="map a tower (phi) or cube-model jet (psi)")
    p.add_argument("file")
    p.add_argument("--map", choices=("phi", "psi"), required=True)
    p.add_argument("--output", help="also write the image candidate to this file")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("sample", help="print a sample input file")
    p.add_argument("name", choices=SAMPLES)
    return parser


def run(argv: list[str] | None = None) -> tuple[int, str]:
    """Execute a command; returns the exit status and the text to print."""
    args = build_parser().parse_args(argv)
    if args.command == "sample":
        return EXIT_OK, json.dumps(sample(args.name), indent=2)
    start = time.perf_counter()
    try:
        if args.command == "qcr":
            doc = cmd_qcr(args.expr)
        elif args.command == "verify-identities":
            if not 0 <= args.n <= 5:
                raise CapExceeded(f"--n {args.n} outside 0..5")
            doc = cmd_verify_identities(args.only, args.n)
        elif args.command == "check-jet":
            doc = cmd_check_jet(args.file, args.tangential)
        else:
            doc = cmd_transmogrify(args.file, args.map)
            if args.output and "body" in doc.get("result", {}):
                Path(args.output).write_text(json.dumps(doc["result"], indent=2) + "\n")
    except CapExceeded as exc:
        return EXIT_CAP, f"error: {exc}"
    except (InputError, ParseError, SchemaError, NotHolonomic, ValueError) as exc:
        return EXIT_INPUT, f"error: {exc}"
    doc["timing"] = {"seconds": round(time.perf_counter() - start, 6)}
    code = EXIT_OK if doc["overall"] == "pass" else EXIT_FAIL
    text = json.dumps(doc, indent=2, sort_keys=True) if args.json else render(doc)
    return code, text


def main(argv: list[str] | None = None) -> int:
    code, text = run(argv)
    stream = sys.stderr if text.startswith("error:") else sys.stdout
    print(text, file=stream)
    return code


if __name__ == "__main__":
    sys.exit(main())
