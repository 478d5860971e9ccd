"""Tree file format: JSON with canonical serialization.

Canonical form sorts the keys inside every object but keeps node ids in
first-occurrence order (the nodes map, edge list, and info set lists are
positional). load(save(tree)) is structurally identical and byte-stable.
"""

import json

from .errors import ParseError
from .model import KINDS, validate

# prose names for the coordination game's actions, normalized on load
_ACTION_ALIASES = {"cinema": "left", "theater": "right"}

_TOP_KEYS = ("agents", "edges", "info_sets", "nodes", "root")


def _normalize(description):
    if not isinstance(description, dict):
        raise ParseError("tree description must be an object")
    for key in ("agents", "nodes", "edges", "root"):
        if key not in description:
            raise ParseError(f"missing top-level key {key!r}")
    nodes = description.get("nodes")
    if not isinstance(nodes, dict):
        raise ParseError("'nodes' must be a map of id -> node record")
    for node_id, rec in nodes.items():
        if not isinstance(rec, dict):
            raise ParseError(f"node {node_id!r} must be an object")
        kind = rec.get("kind")
        if kind not in KINDS:
            raise ParseError(f"node {node_id!r} has unknown kind {kind!r}")
    edges = description.get("edges")
    if not isinstance(edges, list):
        raise ParseError("'edges' must be a list")
    for rec in edges:
        if not isinstance(rec, dict):
            raise ParseError("each edge must be an object")
        action = rec.get("action")
        if action in _ACTION_ALIASES:
            rec["action"] = _ACTION_ALIASES[action]
    return description


def parse(text):
    """JSON text -> raw description (aliases normalized, kinds checked)."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno, column=exc.colno) from None
    return _normalize(data)


def load(path):
    """Parse and validate a tree file."""
    with open(path, "r", encoding="utf-8") as handle:
        return validate(parse(handle.read()))


def loads(text):
    return validate(parse(text))


def canonical_description(tree):
    """Description dict in canonical order: top-level keys sorted, object
    keys sorted, ids kept in first-occurrence order."""
    raw = tree.to_description()
    out = {}
    for key in _TOP_KEYS:
        value = raw[key]
        if key == "nodes":
            value = {n: dict(sorted(rec.items())) for n, rec in value.items()}
        elif key == "edges":
            value = [dict(sorted(rec.items())) for rec in value]
        out[key] = value
    return out


def dumps(tree):
    return json.dumps(canonical_description(tree), indent=2) + "\n"


def save(tree, path):
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(dumps(tree))


def dump_json(payload):
    """Canonical JSON for structured CLI output: stable key order, stable
    float formatting."""
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"
