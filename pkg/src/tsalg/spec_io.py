"""JSON documents describing actions and modules.

Serialization is canonical (sorted keys, two-space indent, trailing
newline), so ``dumps(loads(text)) == text`` for any document produced
by :func:`dumps`. Validation errors carry a JSON pointer to the
offending value.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from .actions import ActionLawError, AlgebraAction, make_action
from .fields import PrimeField, is_prime
from .groups import CrossSection, GroupError, GroupTable, Subgroup, build_group, cross_section
from .modules import KGModule, ModuleError, make_module
from .poly import ParseError, PolyRing, VAR_RE

SPEC_KEYS = {"p", "variables", "group", "action_by_generator", "subgroup", "action_on",
             "cross_section", "metadata"}
MODULE_KEYS = {"p", "group", "generator_matrices", "metadata"}


class SpecError(ValueError):
    def __init__(self, message: str, pointer: str = "", extra: dict | None = None):
        super().__init__(f"{pointer or '/'}: {message}")
        self.pointer = pointer or "/"
        self.message = message
        self.extra = extra or {}


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _expect(cond: bool, message: str, pointer: str) -> None:
    if not cond:
        raise SpecError(message, pointer)


def _int_list(value, pointer: str) -> list[int]:
    _expect(isinstance(value, list), "expected an array of integers", pointer)
    for i, x in enumerate(value):
        _expect(isinstance(x, int) and not isinstance(x, bool), "expected an integer", f"{pointer}/{i}")
    return value


def parse_group(doc, pointer: str = "/group", cap: int = 64) -> GroupTable:
    _expect(isinstance(doc, dict), "expected an object", pointer)
    keys = set(doc) - {"cap"}
    _expect(keys in ({"generators"}, {"table"}, {"generators", "degree"}),
            "group needs exactly one of 'generators' or 'table'", pointer)
    cap = doc.get("cap", cap)
    try:
        if "table" in doc:
            rows = doc["table"]
            _expect(isinstance(rows, list), "expected an array of rows", f"{pointer}/table")
            for i, row in enumerate(rows):
                _int_list(row, f"{pointer}/table/{i}")
            return build_group(table=rows, cap=cap)
        gens = doc["generators"]
        _expect(isinstance(gens, list), "expected an array of permutations", f"{pointer}/generators")
        for i, g in enumerate(gens):
            _int_list(g, f"{pointer}/generators/{i}")
        return build_group(gens, degree=doc.get("degree"), cap=cap)
    except GroupError as exc:
        raise SpecError(str(exc), pointer) from None


def group_to_json(G: GroupTable) -> dict:
    if G.perms is not None:
        gens = [list(G.perms[s]) for s in G.generators]
        out: dict = {"generators": gens}
        if not gens:
            out["degree"] = len(G.perms[0])
        return out
    return {"table": [list(r) for r in G.mult]}


def parse_subgroup(G: GroupTable, value, pointer: str = "/subgroup") -> Subgroup:
    _int_list(value, pointer)
    try:
        return Subgroup(G, value)
    except GroupError as exc:
        raise SpecError(str(exc), pointer) from None


@dataclass
class SpecDocument:
    p: int
    variables: list
    group: dict
    action_by_generator: list
    subgroup: list | None = None
    action_on: str = "group"
    cross_section: list | None = None
    metadata: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out: dict = {
            "p": self.p,
            "variables": list(self.variables),
            "group": self.group,
            "action_by_generator": self.action_by_generator,
        }
        if self.subgroup is not None:
            out["subgroup"] = self.subgroup
        if self.action_on != "group":
            out["action_on"] = self.action_on
        if self.cross_section is not None:
            out["cross_section"] = self.cross_section
        if self.metadata:
            out["metadata"] = self.metadata
        return out

    def serialize(self) -> str:
        return dumps(self.to_json())


@dataclass
class LoadedSpec:
    doc: SpecDocument
    group: GroupTable
    action: AlgebraAction
    subgroup: Subgroup | None
    section: CrossSection | None = None

    @property
    def acting_group(self) -> GroupTable:
        return self.action.group


def parse_spec_document(obj) -> SpecDocument:
    _expect(isinstance(obj, dict), "spec must be a JSON object", "")
    unknown = sorted(set(obj) - SPEC_KEYS)
    _expect(not unknown, f"unknown key {unknown[0]!r}" if unknown else "", f"/{unknown[0]}" if unknown else "")
    for key in ("p", "variables", "group", "action_by_generator"):
        _expect(key in obj, f"missing required key {key!r}", "")
    p = obj["p"]
    _expect(isinstance(p, int) and not isinstance(p, bool) and is_prime(p), "p must be a prime integer", "/p")
    variables = obj["variables"]
    _expect(isinstance(variables, list), "expected an array of variable names", "/variables")
    for i, v in enumerate(variables):
        _expect(isinstance(v, str) and VAR_RE.match(v) is not None, "invalid variable name", f"/variables/{i}")
    _expect(len(set(variables)) == len(variables), "duplicate variable names", "/variables")
    abg = obj["action_by_generator"]
    _expect(isinstance(abg, list), "expected an array of image lists", "/action_by_generator")
    for i, row in enumerate(abg):
        _expect(isinstance(row, list), "expected an array of polynomial strings", f"/action_by_generator/{i}")
        _expect(len(row) == len(variables), f"expected {len(variables)} images",
                f"/action_by_generator/{i}")
        for j, f in enumerate(row):
            _expect(isinstance(f, str), "expected a polynomial string", f"/action_by_generator/{i}/{j}")
    action_on = obj.get("action_on", "group")
    _expect(action_on in ("group", "subgroup"), "must be 'group' or 'subgroup'", "/action_on")
    meta = obj.get("metadata", {})
    _expect(isinstance(meta, dict), "expected an object", "/metadata")
    sub = obj.get("subgroup")
    if sub is not None:
        _int_list(sub, "/subgroup")
    cs = obj.get("cross_section")
    if cs is not None:
        _int_list(cs, "/cross_section")
    _expect(isinstance(obj["group"], dict), "expected an object", "/group")
    return SpecDocument(p, list(variables), obj["group"], abg, sub, action_on, cs, meta)


def build_from_document(doc: SpecDocument) -> LoadedSpec:
    G = parse_group(doc.group)
    H = parse_subgroup(G, doc.subgroup) if doc.subgroup is not None else None
    section = None
    if doc.cross_section is not None:
        _expect(H is not None, "cross_section needs a subgroup", "/cross_section")
        try:
            section = CrossSection(H, tuple(doc.cross_section))
        except GroupError as exc:
            raise SpecError(str(exc), "/cross_section") from None
    elif H is not None:
        section = cross_section(H)
    if doc.action_on == "subgroup":
        _expect(H is not None, "action_on 'subgroup' needs a subgroup", "/action_on")
        acting = H.as_group()
    else:
        acting = G
    _expect(len(doc.action_by_generator) == len(acting.generators),
            f"expected {len(acting.generators)} image lists (one per generator)", "/action_by_generator")
    ring = PolyRing(PrimeField(doc.p), doc.variables)
    images = []
    for i, row in enumerate(doc.action_by_generator):
        parsed = []
        for j, text in enumerate(row):
            try:
                parsed.append(ring.parse(text))
            except (ParseError, KeyError) as exc:
                raise SpecError(str(exc), f"/action_by_generator/{i}/{j}") from None
        images.append(parsed)
    try:
        action = make_action(ring.field, doc.variables, acting, images)
    except ActionLawError as exc:
        raise SpecError(str(exc), "/action_by_generator", {"g": exc.g, "h": exc.h, "var": exc.var}) from None
    return LoadedSpec(doc, G, action, H, section)


def loads_spec(text: str) -> LoadedSpec:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError(f"invalid JSON: {exc.msg} at line {exc.lineno} column {exc.colno}", "") from None
    return build_from_document(parse_spec_document(obj))


def spec_from_action(A: AlgebraAction, subgroup: Subgroup | None = None, metadata: dict | None = None,
                     group_json: dict | None = None) -> SpecDocument:
    """Describe an action by its generator images (round-trips through :func:`loads_spec`)."""
    gens = [[str(f) for f in A.images[s]] for s in A.group.generators]
    return SpecDocument(
        p=A.p,
        variables=list(A.vars),
        group=group_json or group_to_json(A.group),
        action_by_generator=gens,
        subgroup=list(subgroup.elements) if subgroup is not None else None,
        metadata=dict(metadata or {}),
    )


def loads_module(text: str) -> KGModule:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError(f"invalid JSON: {exc.msg}", "") from None
    return module_from_json(obj)


def module_from_json(obj, group: GroupTable | None = None, pointer: str = "") -> KGModule:
    _expect(isinstance(obj, dict), "module must be a JSON object", pointer)
    unknown = sorted(set(obj) - MODULE_KEYS - {"name", "dim"})
    _expect(not unknown, f"unknown key {unknown[0]!r}" if unknown else "", pointer)
    p = obj.get("p")
    _expect(isinstance(p, int) and is_prime(p), "p must be a prime integer", f"{pointer}/p")
    if group is None:
        _expect("group" in obj, "missing required key 'group'", pointer)
        group = parse_group(obj["group"], f"{pointer}/group")
    mats = obj.get("generator_matrices")
    _expect(isinstance(mats, list), "expected an array of matrices", f"{pointer}/generator_matrices")
    for k, M in enumerate(mats):
        _expect(isinstance(M, list), "expected a matrix", f"{pointer}/generator_matrices/{k}")
        for i, row in enumerate(M):
            _int_list(row, f"{pointer}/generator_matrices/{k}/{i}")
    try:
        return make_module(group, mats, p)
    except (ModuleError, ValueError) as exc:
        raise SpecError(str(exc), f"{pointer}/generator_matrices") from None


SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "Action spec",
    "type": "object",
    "required": ["p", "variables", "group", "action_by_generator"],
    "additionalProperties": False,
    "properties": {
        "p": {"type": "integer", "description": "prime characteristic"},
        "variables": {"type": "array", "items": {"type": "string", "pattern": "^[A-Za-z][A-Za-z0-9_]*$"}},
        "group": {
            "type": "object",
            "oneOf": [
                {"required": ["generators"], "properties": {
                    "generators": {"type": "array", "items": {"type": "array", "items": {"type": "integer"}},
                                   "description": "permutations as image arrays: entry i is the image of i"},
                    "degree": {"type": "integer"}, "cap": {"type": "integer"}}},
                {"required": ["table"], "properties": {
                    "table": {"type": "array", "items": {"type": "array", "items": {"type": "integer"}}},
                    "cap": {"type": "integer"}}},
            ],
        },
        "action_by_generator": {
            "type": "array",
            "items": {"type": "array", "items": {"type": "string"}},
            "description": "per generator, the image of each variable as a polynomial string",
        },
        "subgroup": {"type": "array", "items": {"type": "integer"}},
        "action_on": {"enum": ["group", "subgroup"]},
        "cross_section": {"type": "array", "items": {"type": "integer"}},
        "metadata": {"type": "object"},
    },
    "$defs": {
        "module": {
            "type": "object",
            "required": ["p", "group", "generator_matrices"],
            "properties": {
                "p": {"type": "integer"},
                "group": {"type": "object"},
                "generator_matrices": {"type": "array",
                                       "items": {"type": "array", "items": {"type": "array",
                                                                             "items": {"type": "integer"}}}},
            },
        },
    },
}
