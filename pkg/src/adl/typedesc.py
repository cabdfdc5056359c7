"""Canonical type descriptors.

One compact string grammar names every resolved attribute/parameter type, and
the same grammar appears in the reflection manifest, the converter schema
sidecars, and the embedded schema of binary payloads:

    boolean | octet | short | long | longlong | float | double | string
    sequence<D>
    enum:Qualified::Name | class:Qualified::Name | extern:Qualified::Name

``class:`` names a plain struct embedded by value; framework-category classes
never appear as value types (they are reached through relationships).
"""

from __future__ import annotations

from dataclasses import dataclass

PRIMITIVE_KINDS = (
    "boolean",
    "octet",
    "short",
    "long",
    "longlong",
    "float",
    "double",
    "string",
)

NAMED_KINDS = ("enum", "class", "extern")

# AST spells the 64-bit integer with a space; descriptors use one token.
_AST_PRIMITIVE_TO_KIND = {
    "boolean": "boolean",
    "octet": "octet",
    "short": "short",
    "long": "long",
    "long long": "longlong",
    "float": "float",
    "double": "double",
    "string": "string",
}


@dataclass(frozen=True)
class TypeDesc:
    kind: str
    name: str | None = None
    element: TypeDesc | None = None

    def __post_init__(self) -> None:
        if self.kind in PRIMITIVE_KINDS:
            assert self.name is None and self.element is None
        elif self.kind == "sequence":
            assert self.element is not None and self.name is None
        elif self.kind in NAMED_KINDS:
            assert self.name and self.element is None
        else:
            raise ValueError(f"unknown type kind: {self.kind}")

    @property
    def is_primitive(self) -> bool:
        return self.kind in PRIMITIVE_KINDS


def primitive(ast_name: str) -> TypeDesc:
    return TypeDesc(_AST_PRIMITIVE_TO_KIND[ast_name])


def sequence_of(element: TypeDesc) -> TypeDesc:
    return TypeDesc("sequence", element=element)


def render(desc: TypeDesc) -> str:
    if desc.is_primitive:
        return desc.kind
    if desc.kind == "sequence":
        return f"sequence<{render(desc.element)}>"
    return f"{desc.kind}:{desc.name}"


def parse(text: str) -> TypeDesc:
    """Parse a descriptor string; raises ValueError on malformed input."""
    desc, rest = _parse(text)
    if rest:
        raise ValueError(f"trailing text in type descriptor: {text!r}")
    return desc


def _parse(text: str) -> tuple[TypeDesc, str]:
    if text.startswith("sequence<"):
        inner, rest = _parse(text[len("sequence<"):])
        if not rest.startswith(">"):
            raise ValueError(f"unclosed sequence descriptor: {text!r}")
        return sequence_of(inner), rest[1:]
    for kind in NAMED_KINDS:
        prefix = kind + ":"
        if text.startswith(prefix):
            body = text[len(prefix):]
            end = body.find(">")
            name = body if end < 0 else body[:end]
            if not name:
                raise ValueError(f"missing name in type descriptor: {text!r}")
            return TypeDesc(kind, name=name), body[len(name):]
    for kind in PRIMITIVE_KINDS:
        if text.startswith(kind):
            rest = text[len(kind):]
            # "long" must not swallow the prefix of "longlong"
            if kind == "long" and rest.startswith("long"):
                continue
            if rest[:1] not in ("", ">"):
                break
            return TypeDesc(kind), rest
    raise ValueError(f"malformed type descriptor: {text!r}")
