"""The JSON bundle format.

A bundle holds a group table and the structure constants of H, A, M and phi
as sparse exact-rational blocks ``{"rows", "cols", "entries": [[i, j, "p/q"]]}``.
Bilinear maps are stored as (out x left*right) blocks, coactions per pair of
degree names ``"a,b"``. ``roles`` lists which of the four structures are
present; each declared role must carry all of its blocks.
"""
from __future__ import annotations

import json
import re
from fractions import Fraction
from pathlib import Path
from typing import Any

from jsonschema import Draft202012Validator

from .fixtures import Fixture
from .hopf import AlgebraFamily, GradedSpace, GroupTable, HopfGCoalgebra, join_bilinear, split_bilinear
from .linalg import Matrix, fmt
from .poisson import ColinearUnitMap, ComodulePoissonAlgebra, PoissonAlgebraFamily, PoissonHopfModule

FORMAT_VERSION = "1"
_RATIONAL = r"^-?[0-9]+(/[0-9]+)?$"


class BundleError(ValueError):
    """Anything wrong with a bundle file; ``path`` locates the offending field."""

    def __init__(self, message: str, path: str = ""):
        super().__init__(f"{path}: {message}" if path else message)
        self.path = path


class SchemaViolation(BundleError):
    pass


class MalformedRational(BundleError):
    pass


class IndexOutOfRange(BundleError):
    pass


_BLOCK = {
    "type": "object",
    "required": ["rows", "cols", "entries"],
    "additionalProperties": False,
    "properties": {
        "rows": {"type": "integer", "minimum": 0},
        "cols": {"type": "integer", "minimum": 0},
        "entries": {
            "type": "array",
            "items": {
                "type": "array",
                "prefixItems": [{"type": "integer"}, {"type": "integer"}, {"type": "string"}],
                "minItems": 3,
                "maxItems": 3,
            },
        },
    },
}


def _per_degree(item: dict) -> dict:
    return {"type": "object", "additionalProperties": item}


def _role(required: list[str], properties: dict) -> dict:
    return {"type": "object", "required": required, "additionalProperties": False, "properties": properties}


_DIMS = {"type": "array", "items": {"type": "integer", "minimum": 0}}

SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["format_version", "group", "roles"],
    "additionalProperties": False,
    "$defs": {"block": _BLOCK},
    "properties": {
        "format_version": {"const": FORMAT_VERSION},
        "name": {"type": "string"},
        "group": {
            "type": "object",
            "required": ["names", "mul", "identity"],
            "additionalProperties": False,
            "properties": {
                "names": {"type": "array", "items": {"type": "string"}, "minItems": 1},
                "mul": {"type": "array", "items": {"type": "array", "items": {"type": "integer"}}},
                "identity": {"type": "integer"},
            },
        },
        "roles": {"type": "array", "items": {"enum": ["H", "A", "M", "phi"]}, "uniqueItems": True},
        "H": _role(["dims", "mult", "unit", "comult", "counit", "antipode"], {
            "dims": _DIMS,
            "mult": _per_degree({"$ref": "#/$defs/block"}),
            "unit": _per_degree({"$ref": "#/$defs/block"}),
            "comult": _per_degree({"$ref": "#/$defs/block"}),
            "counit": {"$ref": "#/$defs/block"},
            "antipode": _per_degree({"$ref": "#/$defs/block"}),
        }),
        "A": _role(["dims", "mult", "unit", "bracket", "coaction"], {
            "dims": _DIMS,
            "mult": _per_degree({"$ref": "#/$defs/block"}),
            "unit": _per_degree({"$ref": "#/$defs/block"}),
            "bracket": _per_degree({"$ref": "#/$defs/block"}),
            "coaction": _per_degree({"$ref": "#/$defs/block"}),
        }),
        "M": _role(["dims", "lie", "coaction"], {
            "dims": _DIMS,
            "act": _per_degree({"$ref": "#/$defs/block"}),
            "lie": _per_degree({"$ref": "#/$defs/block"}),
            "coaction": _per_degree({"$ref": "#/$defs/block"}),
        }),
        "phi": _role(["maps"], {"maps": _per_degree({"$ref": "#/$defs/block"})}),
        "expected": {"type": "object"},
    },
    "allOf": [
        {"if": {"properties": {"roles": {"contains": {"const": r}}}}, "then": {"required": [r]}}
        for r in ("H", "A", "M", "phi")
    ] + [
        {"if": {"properties": {"roles": {"contains": {"const": r}}}},
         "then": {"properties": {"roles": {"contains": {"const": "H"}}}}}
        for r in ("A", "M", "phi")
    ],
}

_VALIDATOR = Draft202012Validator(SCHEMA)


# -- export -----------------------------------------------------------------------------

def block(m: Matrix) -> dict:
    return {"rows": m.nrows, "cols": m.ncols, "entries": [[i, j, fmt(x)] for i, j, x in m.nonzero()]}


def _vector_block(v) -> dict:
    return block(Matrix.from_columns([v], len(v)))


def _pairs(coaction: dict, g: GroupTable) -> dict:
    return {f"{g.names[a]},{g.names[b]}": block(coaction[a, b]) for a, b in g.pairs()}


def _bilinear_blocks(ops, dims, g: GroupTable) -> dict:
    return {g.names[a]: block(join_bilinear(ops[a], dims[a], dims[a])) for a in g.elements}


def to_dict(fx: Fixture) -> dict:
    h = fx.H
    g = h.group
    out: dict[str, Any] = {
        "format_version": FORMAT_VERSION,
        "name": fx.name,
        "group": {"names": list(g.names), "mul": [list(r) for r in g.mul], "identity": g.identity},
        "roles": ["H"],
    }
    out["H"] = {
        "dims": list(h.dims),
        "mult": _bilinear_blocks(h.algebra.mult, h.dims, g),
        "unit": {g.names[a]: _vector_block(h.unit(a)) for a in g.elements},
        "comult": _pairs(h.comult, g),
        "counit": block(h.counit),
        "antipode": {g.names[a]: block(h.antipode[a]) for a in g.elements},
    }
    if fx.A is not None:
        A = fx.A
        out["roles"].append("A")
        out["A"] = {
            "dims": list(A.dims),
            "mult": _bilinear_blocks(A.mult, A.dims, g),
            "unit": {g.names[a]: _vector_block(A.unit(a)) for a in g.elements},
            "bracket": _bilinear_blocks(A.bracket, A.dims, g),
            "coaction": _pairs(A.coaction, g),
        }
    if fx.M is not None:
        M = fx.M
        out["roles"].append("M")
        out["M"] = {"dims": list(M.dims), "lie": _bilinear_blocks(M.lie, M.dims, g),
                    "coaction": _pairs(M.coaction, g)}
        if M.act is not None:
            out["M"]["act"] = _bilinear_blocks(M.act, M.dims, g)
    if fx.phi is not None:
        out["roles"].append("phi")
        out["phi"] = {"maps": {g.names[a]: block(fx.phi.maps[a]) for a in g.elements}}
    if fx.expected:
        out["expected"] = fx.expected
    return out


def dumps(fx: Fixture) -> str:
    return json.dumps(to_dict(fx), indent=1, sort_keys=True) + "\n"


def export_bundle(fx: Fixture, path: str | Path) -> None:
    Path(path).write_text(dumps(fx), encoding="utf-8")


# -- parse ---------------------------------------------------------------------------------

def parse_rational(s: str, path: str) -> Fraction:
    if not re.match(_RATIONAL, s):
        raise MalformedRational(f"{s!r} is not an integer or p/q", path)
    num, _, den = s.partition("/")
    if den and int(den) == 0:
        raise MalformedRational(f"{s!r} has zero denominator", path)
    x = Fraction(int(num), int(den) if den else 1)
    if fmt(x) != s:
        raise MalformedRational(f"{s!r} is not in lowest terms (expected {fmt(x)!r})", path)
    return x


def _matrix(b: dict, rows: int, cols: int, path: str) -> Matrix:
    if b["rows"] != rows or b["cols"] != cols:
        raise IndexOutOfRange(f"block is {b['rows']}x{b['cols']}, expected {rows}x{cols}", path)
    entries = []
    seen = set()
    for k, (i, j, s) in enumerate(b["entries"]):
        p = f"{path}/entries/{k}"
        if not (0 <= i < rows and 0 <= j < cols):
            raise IndexOutOfRange(f"entry ({i}, {j}) outside {rows}x{cols}", p)
        if (i, j) in seen:
            raise BundleError(f"entry ({i}, {j}) given twice", p)
        seen.add((i, j))
        entries.append((i, j, parse_rational(s, p)))
    return Matrix.from_sparse(rows, cols, entries)


def _get(d: dict, key: str, path: str):
    if key not in d:
        raise SchemaViolation(f"missing block {key!r}", path)
    return d[key]


def _group(d: dict) -> GroupTable:
    names, mul, e = d["names"], d["mul"], d["identity"]
    n = len(names)
    if len(set(names)) != n:
        raise BundleError("group element names must be distinct", "group/names")
    if len(mul) != n or any(len(r) != n for r in mul):
        raise IndexOutOfRange(f"multiplication table must be {n}x{n}", "group/mul")
    for i, r in enumerate(mul):
        for j, x in enumerate(r):
            if not 0 <= x < n:
                raise IndexOutOfRange(f"product index {x} outside 0..{n - 1}", f"group/mul/{i}/{j}")
    if not 0 <= e < n:
        raise IndexOutOfRange(f"identity index {e} outside 0..{n - 1}", "group/identity")
    return GroupTable(tuple(names), tuple(tuple(r) for r in mul), e)


def _dims(d: list, g: GroupTable, path: str) -> tuple[int, ...]:
    if len(d) != g.order:
        raise IndexOutOfRange(f"{len(d)} dimensions for {g.order} degrees", path)
    return tuple(d)


def _per_deg(d: dict, g: GroupTable, path: str, shape) -> tuple[Matrix, ...]:
    out = []
    for a in g.elements:
        name = g.names[a]
        out.append(_matrix(_get(d, name, path), *shape(a), f"{path}/{name}"))
    extra = set(d) - set(g.names)
    if extra:
        raise IndexOutOfRange(f"unknown degree {sorted(extra)[0]!r}", path)
    return tuple(out)


def _bilinear(d: dict, g: GroupTable, dims, right_dims, path: str) -> tuple:
    mats = _per_deg(d, g, path, lambda a: (right_dims[a], dims[a] * right_dims[a]))
    return tuple(split_bilinear(m, dims[a], right_dims[a]) for a, m in enumerate(mats))


def _coaction(d: dict, g: GroupTable, dims, hdims, path: str) -> dict:
    out = {}
    for a, b in g.pairs():
        key = f"{g.names[a]},{g.names[b]}"
        out[a, b] = _matrix(_get(d, key, path), dims[a] * hdims[b], dims[g(a, b)], f"{path}/{key}")
    valid = {f"{g.names[a]},{g.names[b]}" for a, b in g.pairs()}
    extra = set(d) - valid
    if extra:
        raise IndexOutOfRange(f"unknown degree pair {sorted(extra)[0]!r}", path)
    return out


def _units(d: dict, g: GroupTable, dims, path: str) -> tuple:
    mats = _per_deg(d, g, path, lambda a: (dims[a], 1))
    return tuple(m.column(0) for m in mats)


def from_dict(doc: Any) -> Fixture:
    errors = sorted(_VALIDATOR.iter_errors(doc), key=lambda e: list(e.absolute_path))
    if errors:
        e = errors[0]
        where = "/".join(str(p) for p in e.absolute_path) or "<root>"
        raise SchemaViolation(e.message, where)
    g = _group(doc["group"])
    roles = set(doc["roles"])
    hd = doc["H"]
    hdims = _dims(hd["dims"], g, "H/dims")
    space = GradedSpace(g, hdims)
    alg = AlgebraFamily(space, _bilinear(hd["mult"], g, hdims, hdims, "H/mult"), _units(hd["unit"], g, hdims, "H/unit"))
    e = g.identity
    h = HopfGCoalgebra(alg, _coaction(hd["comult"], g, hdims, hdims, "H/comult"),
                       _matrix(hd["counit"], 1, hdims[e], "H/counit"),
                       _per_deg(hd["antipode"], g, "H/antipode", lambda a: (hdims[g.inv(a)], hdims[a])))
    A = M = phi = None
    if "A" in roles:
        ad = doc["A"]
        adims = _dims(ad["dims"], g, "A/dims")
        aalg = AlgebraFamily(GradedSpace(g, adims), _bilinear(ad["mult"], g, adims, adims, "A/mult"),
                             _units(ad["unit"], g, adims, "A/unit"))
        P = PoissonAlgebraFamily(aalg, _bilinear(ad["bracket"], g, adims, adims, "A/bracket"))
        A = ComodulePoissonAlgebra(P, _coaction(ad["coaction"], g, adims, hdims, "A/coaction"))
    if "M" in roles:
        if A is None:
            raise SchemaViolation("role M needs role A", "roles")
        md = doc["M"]
        mdims = _dims(md["dims"], g, "M/dims")
        act = _bilinear(md["act"], g, A.dims, mdims, "M/act") if "act" in md else None
        lie = _bilinear(md["lie"], g, A.dims, mdims, "M/lie")
        M = PoissonHopfModule(GradedSpace(g, mdims), act, lie, _coaction(md["coaction"], g, mdims, hdims, "M/coaction"))
    if "phi" in roles:
        if A is None:
            raise SchemaViolation("role phi needs role A", "roles")
        phi = ColinearUnitMap(_per_deg(doc["phi"]["maps"], g, "phi/maps", lambda a: (A.dims[a], hdims[a])))
    return Fixture(doc.get("name", ""), h, A, M, phi, dict(doc.get("expected", {})))


def loads(text: str) -> Fixture:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise BundleError(f"not JSON: {exc.msg} at line {exc.lineno} column {exc.colno}") from None
    return from_dict(doc)


def parse_bundle(path: str | Path) -> Fixture:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise BundleError(f"cannot read {path}: {exc.strerror}") from None
    return loads(text)


__all__ = ["FORMAT_VERSION", "SCHEMA", "BundleError", "SchemaViolation", "MalformedRational", "IndexOutOfRange",
           "to_dict", "dumps", "export_bundle", "from_dict", "loads", "parse_bundle", "parse_rational", "block"]
