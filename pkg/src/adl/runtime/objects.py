"""Dynamic instances: objects created from class descriptors alone, with
zero-initialized fields, checked field access by dotted path, and link
slots shaped by the class's relationships.

Values are plain Python data.  Primitives map to bool/int/float/str, a
sequence is a list, an enum value is its zero-based ordinal, an embedded
plain-struct value is a dict over the struct's flattened attributes, and an
extern value is opaque bytes.  ``set_field`` validates (and where needed
normalizes) values before any mutation; a failed write leaves the object
unchanged.
"""

from __future__ import annotations

import struct
from typing import Any

from ..errors import (
    FieldAccessError,
    FieldTypeError,
    NotInstantiableError,
    UnknownFieldError,
)
from ..typedesc import TypeDesc
from .dictionary import AttributeDescriptor, ClassDescriptor, DictionaryService

INT_RANGES = {
    "octet": (0, 255),
    "short": (-(2**15), 2**15 - 1),
    "long": (-(2**31), 2**31 - 1),
    "longlong": (-(2**63), 2**63 - 1),
}


def to_f32(value: float) -> float:
    """Nearest value representable in 32-bit IEEE 754.  Applied when a
    `float` attribute is set so round trips through the wire are exact."""
    return struct.unpack("<f", struct.pack("<f", value))[0]


class DynamicObject:
    """An instance described entirely by its class descriptor."""

    __slots__ = ("cls", "service", "fields", "links")

    def __init__(self, cls: ClassDescriptor, service: DictionaryService) -> None:
        self.cls = cls
        self.service = service
        self.fields: dict[str, Any] = {
            attr.name: zero_value(attr.type, service)
            for attr in service.flattened_attributes(cls.qualified_name)
        }
        self.links: dict[str, str | list[str] | None] = {
            rel.name: [] if rel.many else None
            for rel in service.flattened_relationships(cls.qualified_name)
        }

    @property
    def class_id(self) -> int:
        return self.cls.class_id

    @property
    def qualified_name(self) -> str:
        return self.cls.qualified_name

    def __repr__(self) -> str:
        return f"<DynamicObject {self.cls.qualified_name} 0x{self.cls.class_id:08x}>"


def zero_value(desc: TypeDesc, service: DictionaryService) -> Any:
    """The type-specific initial value: false, 0, 0.0, empty string, empty
    sequence, first enumerator, all-zero struct, empty extern payload."""
    if desc.kind == "boolean":
        return False
    if desc.kind in INT_RANGES or desc.kind == "enum":
        return 0
    if desc.kind in ("float", "double"):
        return 0.0
    if desc.kind == "string":
        return ""
    if desc.kind == "sequence":
        return []
    if desc.kind == "extern":
        return b""
    assert desc.kind == "class"
    struct_cls = service.find(desc.name)
    return {
        attr.name: zero_value(attr.type, service)
        for attr in service.flattened_attributes(struct_cls.qualified_name)
    }


def check_value(desc: TypeDesc, value: Any, service: DictionaryService) -> Any:
    """Validate ``value`` against a type descriptor, returning the normalized
    value to store.  Raises FieldTypeError on any mismatch."""
    kind = desc.kind
    if kind == "boolean":
        if not isinstance(value, bool):
            raise FieldTypeError(f"expected boolean, got {type(value).__name__}")
        return value
    if kind in INT_RANGES:
        if isinstance(value, bool) or not isinstance(value, int):
            raise FieldTypeError(f"expected {kind} integer, got {type(value).__name__}")
        low, high = INT_RANGES[kind]
        if not low <= value <= high:
            raise FieldTypeError(f"value {value} out of range for {kind} [{low}, {high}]")
        return value
    if kind in ("float", "double"):
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise FieldTypeError(f"expected {kind}, got {type(value).__name__}")
        value = float(value)
        return to_f32(value) if kind == "float" else value
    if kind == "string":
        if not isinstance(value, str):
            raise FieldTypeError(f"expected string, got {type(value).__name__}")
        return value
    if kind == "sequence":
        if not isinstance(value, (list, tuple)):
            raise FieldTypeError(f"expected sequence, got {type(value).__name__}")
        return [check_value(desc.element, item, service) for item in value]
    if kind == "enum":
        enumerators = service.enums.get(desc.name)
        if isinstance(value, str):
            if enumerators is None or value not in enumerators:
                raise FieldTypeError(f"'{value}' is not an enumerator of {desc.name}")
            return enumerators.index(value)
        if isinstance(value, bool) or not isinstance(value, int):
            raise FieldTypeError(f"expected {desc.name} ordinal or name, got {type(value).__name__}")
        if value < 0 or (enumerators is not None and value >= len(enumerators)):
            raise FieldTypeError(f"ordinal {value} out of range for enum {desc.name}")
        return value
    if kind == "extern":
        if not isinstance(value, (bytes, bytearray)):
            raise FieldTypeError(f"expected opaque bytes for {desc.name}, got {type(value).__name__}")
        return bytes(value)
    assert kind == "class"
    if not isinstance(value, dict):
        raise FieldTypeError(f"expected {desc.name} value (a field map), got {type(value).__name__}")
    members = service.flattened_attributes(desc.name)
    expected = [m.name for m in members]
    if list(value.keys()) != expected and set(value.keys()) != set(expected):
        raise FieldTypeError(
            f"{desc.name} value has fields {sorted(value.keys())}, expected {sorted(expected)}"
        )
    return {m.name: check_value(m.type, value[m.name], service) for m in members}


def create_instance(service: DictionaryService, class_name: str) -> DynamicObject:
    """Instantiate a registered class with zero-valued fields and empty
    links.  Opaque (extern) classes are not instantiable."""
    cls = service.find(class_name)
    if cls.category == "extern":
        raise NotInstantiableError(f"'{class_name}' is an opaque type and cannot be instantiated")
    return DynamicObject(cls, service)


def _walk(obj: DynamicObject, path: str) -> tuple[dict, str, AttributeDescriptor, list[AttributeDescriptor]]:
    """Resolve a dotted path to (container dict, final key, final attribute
    descriptor, every attribute descriptor traversed)."""
    segments = path.split(".")
    service = obj.service
    attrs = {a.name: a for a in service.flattened_attributes(obj.qualified_name)}
    container: dict = obj.fields
    traversed: list[AttributeDescriptor] = []
    class_name = obj.qualified_name
    for i, segment in enumerate(segments):
        attr = attrs.get(segment)
        if attr is None:
            raise UnknownFieldError(f"'{class_name}' has no field '{segment}' (path '{path}')")
        traversed.append(attr)
        if i == len(segments) - 1:
            return container, segment, attr, traversed
        if attr.type.kind != "class":
            raise UnknownFieldError(
                f"field '{segment}' of '{class_name}' is not a struct; cannot descend into '{path}'"
            )
        container = container[segment]
        class_name = attr.type.name
        attrs = {a.name: a for a in service.flattened_attributes(class_name)}
    raise AssertionError("unreachable")


def get_field(obj: DynamicObject, path: str) -> Any:
    """Value of the attribute at a dotted path."""
    container, key, _, _ = _walk(obj, path)
    return container[key]


def set_field(obj: DynamicObject, path: str, value: Any) -> None:
    """Assign the attribute at a dotted path after type checking.

    Writing through any private attribute requires a privileged service;
    type mismatches and access violations leave the object unchanged.
    """
    container, key, attr, traversed = _walk(obj, path)
    if not obj.service.privileged:
        for seen in traversed:
            if seen.private:
                raise FieldAccessError(
                    f"attribute '{seen.name}' is private; writing requires a privileged service"
                )
    container[key] = check_value(attr.type, value, obj.service)
