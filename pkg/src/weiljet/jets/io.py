"""JSON files for jet candidates and first-approach towers."""

from __future__ import annotations

from ..errors import ParseError, SchemaError
from ..poly import mono_str, parse_poly
from .candidate import SECOND, THIRD, JetCandidate, candidate_algebra
from .first import FirstApproachTower

JET_SCHEMA = "weiljet.jet"
TOWER_SCHEMA = "weiljet.tower"
VERSION = 1


def _scalar(x) -> str:
    return str(x)


def _read_scalar(x, where: str):
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise SchemaError(f"{where}: expected an integer or a string, got {x!r}")
    try:
        p = parse_poly(str(x))
    except ParseError as exc:
        raise SchemaError(f"{where}: {exc}") from exc
    return p.constant_term() if p.is_constant() else p


def _need(d: dict, key: str, kind, where: str):
    if not isinstance(d, dict) or key not in d:
        raise SchemaError(f"{where}: missing field {key!r}")
    val = d[key]
    if not isinstance(val, kind) or isinstance(val, bool):
        raise SchemaError(f"{where}: field {key!r} has the wrong type")
    return val


def _check_header(d, schema: str):
    if not isinstance(d, dict):
        raise SchemaError("top level must be an object")
    if d.get("schema") != schema:
        raise SchemaError(f"expected schema {schema!r}, got {d.get('schema')!r}")
    if d.get("version") != VERSION:
        raise SchemaError(f"unsupported version {d.get('version')!r}")


def candidate_to_json(c: JetCandidate) -> dict:
    return {
        "schema": JET_SCHEMA,
        "version": VERSION,
        "approach": c.approach,
        "n": c.n,
        "base": [_scalar(x) for x in c.base],
        "fiber": [_scalar(y) for y in c.fiber],
        "parameters": sorted(c.parameters()),
        "body": [
            {"fiber": j + 1, "monomial": mono_str(mo), "value": str(p)}
            for (j, mo), p in c.body.items()
            if not p.is_zero()
        ],
    }


def candidate_from_json(d) -> JetCandidate:
    _check_header(d, JET_SCHEMA)
    approach = _need(d, "approach", str, "jet")
    if approach not in (SECOND, THIRD):
        raise SchemaError(f"approach must be {SECOND!r} or {THIRD!r}")
    n = _need(d, "n", int, "jet")
    if not 0 <= n <= 4:
        raise SchemaError("n must lie in 0..4")
    base = [_read_scalar(x, "base") for x in _need(d, "base", list, "jet")]
    fiber = [_read_scalar(y, "fiber") for y in _need(d, "fiber", list, "jet")]
    alg = candidate_algebra(approach, n)
    body = {}
    for k, item in enumerate(_need(d, "body", list, "jet")):
        where = f"body[{k}]"
        j = _need(item, "fiber", int, where) - 1
        if not 0 <= j < len(fiber):
            raise SchemaError(f"{where}: fiber index out of range")
        try:
            mp = parse_poly(_need(item, "monomial", str, where), alg.nvars)
            value = parse_poly(_need(item, "value", str, where))
        except ParseError as exc:
            raise SchemaError(f"{where}: {exc}") from exc
        if len(mp.terms) != 1 or next(iter(mp.terms.values())) != 1:
            raise SchemaError(f"{where}: not a monomial")
        mo = next(iter(mp.terms))
        if mo not in alg.index or mo == ():
            raise SchemaError(f"{where}: {item['monomial']} is not a non-unit basis monomial")
        if (j, mo) in body:
            raise SchemaError(f"{where}: duplicate entry")
        body[(j, mo)] = value
    return JetCandidate(approach, n, base, fiber, body)


def tower_to_json(t: FirstApproachTower) -> dict:
    return {
        "schema": TOWER_SCHEMA,
        "version": VERSION,
        "base": [_scalar(x) for x in t.base],
        "fiber": [_scalar(y) for y in t.fiber],
        "levels": [[[_scalar(x) for x in row] for row in mat] for mat in t.levels],
    }


def tower_from_json(d) -> FirstApproachTower:
    _check_header(d, TOWER_SCHEMA)
    base = [_read_scalar(x, "base") for x in _need(d, "base", list, "tower")]
    fiber = [_read_scalar(y, "fiber") for y in _need(d, "fiber", list, "tower")]
    levels = []
    for k, mat in enumerate(_need(d, "levels", list, "tower"), start=1):
        if not isinstance(mat, list) or not all(isinstance(r, list) for r in mat):
            raise SchemaError(f"level {k} must be a list of rows")
        levels.append([[_read_scalar(x, f"level {k}") for x in row] for row in mat])
    if len(levels) > 3:
        raise SchemaError("towers are supported up to order 3")
    try:
        return FirstApproachTower(base, fiber, levels)
    except ValueError as exc:
        raise SchemaError(str(exc)) from exc


def load(d):
    """Candidate or tower, according to the ``schema`` field."""
    if isinstance(d, dict) and d.get("schema") == TOWER_SCHEMA:
        return tower_from_json(d)
    return candidate_from_json(d)


__all__ = [
    "JET_SCHEMA", "TOWER_SCHEMA", "VERSION",
    "candidate_to_json", "candidate_from_json", "tower_to_json", "tower_from_json", "load",
]
