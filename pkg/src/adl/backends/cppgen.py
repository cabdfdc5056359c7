"""Shared helpers for the C++-emitting back ends: type mapping, naming,
include computation, and small formatting utilities.

Generated code refers to every described type by its globally qualified
name (a ``::`` prefix plus the full module path), which keeps references
unambiguous no matter which namespace the reference appears in.
"""

from __future__ import annotations

from .. import metamodel
from ..metamodel import MetaClass, MetaModel
from ..typedesc import TypeDesc

CPP_PRIMITIVES = {
    "boolean": "bool",
    "octet": "std::uint8_t",
    "short": "std::int16_t",
    "long": "std::int32_t",
    "longlong": "std::int64_t",
    "float": "float",
    "double": "double",
    "string": "std::string",
}

EXTERN_CPP_TYPE = "std::vector<std::uint8_t>"

SCALAR_KINDS = ("boolean", "octet", "short", "long", "longlong", "float", "double", "enum")


def global_name(qualified_name: str) -> str:
    return "::" + qualified_name


def cpp_type(desc: TypeDesc) -> str:
    if desc.kind in CPP_PRIMITIVES:
        return CPP_PRIMITIVES[desc.kind]
    if desc.kind == "sequence":
        return f"std::vector<{cpp_type(desc.element)}>"
    if desc.kind == "extern":
        return EXTERN_CPP_TYPE
    return global_name(desc.name)  # enum or class


def param_type(desc: TypeDesc) -> str:
    """Parameter-passing form: scalars by value, everything else by
    reference to const."""
    text = cpp_type(desc)
    return text if desc.kind in SCALAR_KINDS else f"const {text}&"


def return_type(desc: TypeDesc) -> str:
    """Accessor return form, mirroring param_type."""
    text = cpp_type(desc)
    return text if desc.kind in SCALAR_KINDS else f"const {text}&"


def member_initializer(desc: TypeDesc, model: MetaModel) -> str | None:
    """In-class initializer matching the runtime's zero values; None when
    the default constructor already produces it."""
    if desc.kind == "boolean":
        return "false"
    if desc.kind in ("octet", "short", "long", "longlong"):
        return "0"
    if desc.kind == "float":
        return "0.0f"
    if desc.kind == "double":
        return "0.0"
    if desc.kind == "enum":
        first = model.enum_index[desc.name].enumerators[0]
        return f"{global_name(desc.name)}::{first}"
    return None


def upper_first(name: str) -> str:
    return name[:1].upper() + name[1:]


def mutator_name(attr_name: str) -> str:
    return "set" + upper_first(attr_name)


def header_path(cls: MetaClass) -> str:
    return "/".join((*cls.module_path, cls.name)) + ".h"


def source_path(cls: MetaClass) -> str:
    return "/".join((*cls.module_path, cls.name)) + ".cpp"


def types_header_path(module_path: tuple[str, ...]) -> str:
    return "/".join((*module_path, "Types.h"))


def include_guard(path: str) -> str:
    mangled = path.replace("/", "_").replace(".", "_").upper()
    return f"ADL_GEN_{mangled}"


def banner_lines(banner: str) -> list[str]:
    return [f"// {line}".rstrip() for line in banner.splitlines()] + [""]


def namespace_open(module_path: tuple[str, ...]) -> list[str]:
    return [f"namespace {part} {{" for part in module_path]


def namespace_close(module_path: tuple[str, ...]) -> list[str]:
    return [f"}} // namespace {part}" for part in reversed(module_path)]


def walk_type(desc: TypeDesc):
    yield desc
    if desc.kind == "sequence":
        yield from walk_type(desc.element)


def class_includes(cls: MetaClass, model: MetaModel) -> tuple[list[str], list[str]]:
    """(system includes, generated includes) a class header needs: always
    <cstdint> for the ClassId, containers and strings on demand, base-class
    headers, embedded-struct headers, and Types.h for every enum module."""
    system = {"cstdint"}
    generated: set[str] = set()
    for base in cls.bases:
        generated.add(header_path(base))
    for attr in cls.attributes:
        for desc in walk_type(attr.type):
            if desc.kind == "string":
                system.add("string")
            elif desc.kind in ("sequence", "extern"):
                system.add("vector")
            if desc.kind == "extern":
                system.add("cstdint")
            elif desc.kind == "enum":
                generated.add(types_header_path(tuple(desc.name.split("::")[:-1])))
            elif desc.kind == "class":
                generated.add(header_path(model.class_index[desc.name]))
    for method in cls.methods:
        descs = [ptype for _, ptype in method.params]
        if method.return_type is not None:
            descs.append(method.return_type)
        for top in descs:
            for desc in walk_type(top):
                if desc.kind == "string":
                    system.add("string")
                elif desc.kind in ("sequence", "extern"):
                    system.add("vector")
                if desc.kind == "extern":
                    system.add("cstdint")
                elif desc.kind == "enum":
                    generated.add(types_header_path(tuple(desc.name.split("::")[:-1])))
                elif desc.kind == "class" and model.class_index[desc.name] is not cls:
                    generated.add(header_path(model.class_index[desc.name]))
    if cls.relationships:
        system.add("vector")
    generated.discard(header_path(cls))
    return sorted(system), sorted(generated)


def forward_declarations(cls: MetaClass) -> list[str]:
    """Relationship targets are held by pointer, so a forward declaration
    (in the target's own namespace) is enough for the header."""
    targets: dict[str, MetaClass] = {}
    for rel in cls.relationships:
        if rel.target is not cls:
            targets[rel.target.qualified_name] = rel.target
    lines: list[str] = []
    for qualified in sorted(targets):
        target = targets[qualified]
        if target.module_path:
            opening = " ".join(f"namespace {part} {{" for part in target.module_path)
            closing = " ".join("}" for _ in target.module_path)
            lines.append(f"{opening} class {target.name}; {closing}")
        else:
            lines.append(f"class {target.name};")
    return lines


def is_framework(cls: MetaClass) -> bool:
    return cls.category in metamodel.FRAMEWORK_CATEGORIES
