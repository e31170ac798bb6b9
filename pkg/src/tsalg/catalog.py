"""Shipped data: catalogs of simple modules and example action specs."""

from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources

from .groups import GroupTable
from .modules import KGModule
from .spec_io import LoadedSpec, loads_spec, module_from_json, parse_group

CATALOG_GROUPS = ("C2", "C3", "C4", "S3", "C6")


def _data(*parts: str) -> str:
    return resources.files("tsalg").joinpath("data", *parts).read_text(encoding="utf-8")


def spec_text(name: str) -> str:
    return _data("specs", f"{name}.json")


def load_spec(name: str) -> LoadedSpec:
    return loads_spec(spec_text(name))


def spec_names() -> list[str]:
    folder = resources.files("tsalg").joinpath("data", "specs")
    return sorted(p.name[:-5] for p in folder.iterdir() if p.name.endswith(".json"))


@lru_cache(maxsize=None)
def _catalog_doc(group_name: str, p: int) -> dict:
    return json.loads(_data("simples", f"{group_name.lower()}_p{p}.json"))


def catalog_group(group_name: str, p: int) -> GroupTable:
    return parse_group(_catalog_doc(group_name, p)["group"])


def load_catalog(group_name: str, p: int, group: GroupTable | None = None) -> list[KGModule]:
    """Simple modules for a catalog group; pass ``group`` to attach them to an equal group table."""
    doc = _catalog_doc(group_name, p)
    G = group if group is not None else parse_group(doc["group"])
    if group is not None and parse_group(doc["group"]) != group:
        raise ValueError(f"group does not match the {group_name} catalog presentation")
    return [module_from_json({"p": p, "generator_matrices": s["generator_matrices"]}, group=G,
                             pointer=f"/simples/{i}")
            for i, s in enumerate(doc["simples"])]


def catalog_names(group_name: str, p: int) -> list[str]:
    return [s["name"] for s in _catalog_doc(group_name, p)["simples"]]


def find_catalog(group: GroupTable, p: int) -> list[KGModule] | None:
    """The catalog whose presentation equals ``group``, if any."""
    for name in CATALOG_GROUPS:
        try:
            if catalog_group(name, p) == group:
                return load_catalog(name, p, group)
        except FileNotFoundError:
            continue
    return None
