import json

import pytest

from tsalg.catalog import load_spec, spec_names, spec_text
from tsalg.spec_io import SpecError, dumps, loads_module, loads_spec, parse_spec_document, spec_from_action

BASE = {"p": 2, "variables": ["x"], "group": {"generators": [[1, 0]]}, "action_by_generator": [["x + 1"]]}


def mutate(**kw):
    doc = json.loads(json.dumps(BASE))
    doc.update(kw)
    return json.dumps(doc)


@pytest.mark.parametrize("name", spec_names())
def test_shipped_specs_roundtrip(name):
    text = spec_text(name)
    spec = loads_spec(text)
    assert spec.doc.serialize() == text
    assert loads_spec(spec.doc.serialize()).doc == spec.doc


def test_spec_from_action_roundtrip(c4):
    doc = spec_from_action(c4)
    again = loads_spec(doc.serialize())
    assert again.action == c4
    assert again.doc.serialize() == doc.serialize()


@pytest.mark.parametrize("text,pointer", [
    ("{", ""),
    (mutate(p=4), "/p"),
    (mutate(variables=["x", "x"]), "/variables"),
    (mutate(variables=["1x"]), "/variables/0"),
    (mutate(action_by_generator=[["x +"]]), "/action_by_generator/0/0"),
    (mutate(action_by_generator=[["x", "x"]]), "/action_by_generator/0"),
    (mutate(subgroup=[1]), "/subgroup"),
    (mutate(extra=1), "/extra"),
    (mutate(group={"generators": [[0, 0]]}), "/group"),
    (mutate(action_on="subgroup"), "/action_on"),
])
def test_errors_carry_pointers(text, pointer):
    with pytest.raises(SpecError) as info:
        loads_spec(text)
    assert info.value.pointer == (pointer or "/")


def test_non_closed_subgroup():
    doc = {"p": 3, "variables": ["a"], "group": {"generators": [[1, 0, 2], [1, 2, 0]]},
           "action_by_generator": [["a"], ["a"]], "subgroup": [0, 1, 2]}
    with pytest.raises(SpecError) as info:
        loads_spec(json.dumps(doc))
    assert info.value.pointer == "/subgroup"


def test_action_law_failure_has_triple():
    with pytest.raises(SpecError) as info:
        loads_spec(mutate(p=3))
    assert info.value.extra["var"] == "x"


def test_table_group():
    doc = dict(BASE, group={"table": [[0, 1], [1, 0]]})
    spec = loads_spec(json.dumps(doc))
    assert spec.group.order == 2


def test_subgroup_spec():
    spec = load_spec("c3-dreg-in-s3")
    assert spec.action.group.order == 3 and spec.group.order == 6
    assert spec.section.reps == (0, 1)


def test_module_json():
    M = loads_module(json.dumps({"p": 2, "group": {"generators": [[1, 0]]},
                                 "generator_matrices": [[[0, 1], [1, 0]]]}))
    assert M.dim == 2
    with pytest.raises(SpecError):
        loads_module(json.dumps({"p": 2, "group": {"generators": [[1, 2, 0]]},
                                 "generator_matrices": [[[0, 1], [1, 0]]]}))


def test_dumps_canonical():
    assert dumps({"b": 1, "a": [1, 2]}) == '{\n  "a": [\n    1,\n    2\n  ],\n  "b": 1\n}\n'


def test_parse_document_keeps_metadata():
    doc = parse_spec_document(json.loads(mutate(metadata={"k": "v"})))
    assert doc.metadata == {"k": "v"}
