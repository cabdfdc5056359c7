"""Canonical text dump of a transient store, used to compare object graphs
across processes and languages byte-for-byte.

One line per field and per relationship, lexicographically sorted:

    <qualifiedName>.<key>.<field>=<value>
    <qualifiedName>.<key>.@<relationship>=<key | null | [k1,k2]>

Value encodings avoid every representation that differs between language
runtimes.  Floats are printed as the hex of their IEEE 754 bit pattern
(``f32:`` 8 hex digits, ``f64:`` 16) rather than as decimal text; strings
are JSON-quoted; enum values print as ordinals; sequences as comma-joined
brackets; embedded structs as ``{name=value;...}`` in field order; extern
payloads as ``hex:`` plus lowercase hex digits.
"""

from __future__ import annotations

import json
import struct
from typing import Any

from ..typedesc import TypeDesc
from .dictionary import DictionaryService
from .store import TransientStore


def encode_value(desc: TypeDesc, value: Any, service: DictionaryService) -> str:
    kind = desc.kind
    if kind == "boolean":
        return "true" if value else "false"
    if kind in ("octet", "short", "long", "longlong", "enum"):
        return str(value)
    if kind == "float":
        return "f32:" + struct.pack(">f", value).hex()
    if kind == "double":
        return "f64:" + struct.pack(">d", value).hex()
    if kind == "string":
        return json.dumps(value, ensure_ascii=False)
    if kind == "sequence":
        return "[" + ",".join(encode_value(desc.element, item, service) for item in value) + "]"
    if kind == "extern":
        return "hex:" + value.hex()
    assert kind == "class"
    parts = [
        f"{attr.name}={encode_value(attr.type, value[attr.name], service)}"
        for attr in service.flattened_attributes(desc.name)
    ]
    return "{" + ";".join(parts) + "}"


def canonical_dump(store: TransientStore) -> str:
    """The store's full observable state as sorted text, one line per field
    and per relationship, with a trailing newline when non-empty."""
    service = store.service
    lines: list[str] = []
    for key, obj in store.items():
        prefix = f"{obj.qualified_name}.{key}"
        for attr in service.flattened_attributes(obj.qualified_name):
            encoded = encode_value(attr.type, obj.fields[attr.name], service)
            lines.append(f"{prefix}.{attr.name}={encoded}")
        for rel in service.flattened_relationships(obj.qualified_name):
            slot = obj.links[rel.name]
            if isinstance(slot, list):
                encoded = "[" + ",".join(slot) + "]"
            else:
                encoded = "null" if slot is None else slot
            lines.append(f"{prefix}.@{rel.name}={encoded}")
    lines.sort()
    return "\n".join(lines) + ("\n" if lines else "")
