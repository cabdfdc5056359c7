"""C++ data-object emitter: one header and one implementation file per
described class, plus a Types.h per module holding its enums.

Every attribute becomes a private data member with a public accessor, and a
mutator unless the attribute's visibility is private.  Relationship members
hold raw pointers; their mutators maintain the inverse side eagerly through
private attach/detach operations, with mutual friendship between the two
endpoint classes.  Multiple inheritance uses virtual bases so a diamond
ancestor contributes one subobject, matching the flattening rule used
everywhere else.  Each implementation file ends with a user-extensions
region that initially carries default stubs for declared methods; the
region's contents survive regeneration.
"""

from __future__ import annotations

from .. import ast
from ..metamodel import MetaAttribute, MetaClass, MetaModel, MetaRelationship
from . import cppgen
from .fileset import EmitError, EmitterConfig, FileSet, make_region


def emit_dataobjects(model: MetaModel, config: EmitterConfig) -> FileSet:
    """Deterministic FileSet of generated C++ sources for a resolved model.
    Raises EmitError when a declared method collides with a generated
    member function."""
    if not model.resolved:
        raise ValueError("model must be resolved before emission")
    files = FileSet()
    for module_path, enums in sorted(_enums_by_module(model).items()):
        files.add(cppgen.types_header_path(module_path), _render_types_header(module_path, enums, config))
    for cls in sorted(model.classes(), key=lambda c: c.qualified_name):
        if cls.declared_category is ast.Category.EXTERN:
            continue
        _check_collisions(cls)
        files.add(cppgen.header_path(cls), _render_header(cls, model, config))
        files.add(cppgen.source_path(cls), _render_source(cls, model, config))
    return files


def _enums_by_module(model: MetaModel):
    grouped: dict[tuple[str, ...], list] = {}
    for enum in model.enums():
        module_path = tuple(enum.qualified_name.split("::")[:-1])
        grouped.setdefault(module_path, []).append(enum)
    for enums in grouped.values():
        enums.sort(key=lambda e: e.qualified_name)
    return grouped


def _generated_members(cls: MetaClass) -> dict[tuple[str, int], str]:
    """(name, arity) of every member function this emitter generates."""
    members: dict[tuple[str, int], str] = {("classId", 0): "ClassId constant"}

    def claim(name: str, arity: int, what: str) -> None:
        key = (name, arity)
        if key in members:
            raise EmitError(
                f"class '{cls.qualified_name}': generated member '{name}' for the {what} "
                f"collides with the {members[key]}"
            )
        members[key] = what

    for attr in cls.attributes:
        claim(attr.name, 0, f"accessor of attribute '{attr.name}'")
        if attr.visibility is ast.Visibility.PUBLIC:
            claim(cppgen.mutator_name(attr.name), 1, f"mutator of attribute '{attr.name}'")
    for rel in cls.relationships:
        claim(rel.name, 0, f"accessor of relationship '{rel.name}'")
        if rel.cardinality is ast.Cardinality.MANY:
            claim("addTo" + cppgen.upper_first(rel.name), 1, f"add operation of relationship '{rel.name}'")
            claim(
                "removeFrom" + cppgen.upper_first(rel.name),
                1,
                f"remove operation of relationship '{rel.name}'",
            )
        else:
            claim(cppgen.mutator_name(rel.name), 1, f"mutator of relationship '{rel.name}'")
        claim(f"_adl_attach_{rel.name}", 1, f"attach operation of relationship '{rel.name}'")
        claim(f"_adl_detach_{rel.name}", 1, f"detach operation of relationship '{rel.name}'")
    return members


def _check_collisions(cls: MetaClass) -> None:
    generated = _generated_members(cls)
    for method in cls.methods:
        key = (method.name, len(method.declared_params))
        if key in generated:
            raise EmitError(
                f"class '{cls.qualified_name}': declared method '{method.name}' collides "
                f"with the {generated[key]}"
            )


def _render_types_header(module_path: tuple[str, ...], enums: list, config: EmitterConfig) -> str:
    path = cppgen.types_header_path(module_path)
    guard = cppgen.include_guard(path)
    lines = cppgen.banner_lines(config.header_banner)
    lines += [f"#ifndef {guard}", f"#define {guard}", "", "#include <cstdint>", ""]
    lines += cppgen.namespace_open(module_path)
    for enum in enums:
        lines.append("")
        lines.append(f"enum class {enum.qualified_name.rsplit('::', 1)[-1]} : std::int32_t {{")
        for ordinal, name in enumerate(enum.enumerators):
            comma = "," if ordinal < len(enum.enumerators) - 1 else ""
            lines.append(f"    {name} = {ordinal}{comma}")
        lines.append("};")
    if module_path:
        lines.append("")
        lines += cppgen.namespace_close(module_path)
    lines += ["", f"#endif // {guard}", ""]
    return "\n".join(lines)


def _pointer_type(target: MetaClass) -> str:
    return cppgen.global_name(target.qualified_name) + "*"


def _attribute_decls(attr: MetaAttribute) -> list[str]:
    lines = [f"    {cppgen.return_type(attr.type)} {attr.name}() const;"]
    if attr.visibility is ast.Visibility.PUBLIC:
        lines.append(
            f"    void {cppgen.mutator_name(attr.name)}({cppgen.param_type(attr.type)} value);"
        )
    else:
        lines[0] += "  // private attribute: read-only accessor"
    return lines


def _relationship_decls(rel: MetaRelationship) -> list[str]:
    pointer = _pointer_type(rel.target)
    title = cppgen.upper_first(rel.name)
    if rel.cardinality is ast.Cardinality.MANY:
        return [
            f"    const std::vector<{pointer}>& {rel.name}() const;",
            f"    void addTo{title}({pointer} value);",
            f"    void removeFrom{title}({pointer} value);",
        ]
    return [
        f"    {pointer} {rel.name}() const;",
        f"    void set{title}({pointer} value);",
    ]


def _method_decl(method) -> str:
    returns = "void" if method.returns_void else cppgen.cpp_type(method.return_type)
    params = ", ".join(f"{cppgen.param_type(ptype)} {pname}" for pname, ptype in method.params)
    const = " const" if method.is_const else ""
    return f"    {returns} {method.name}({params}){const};"


def _method_stub(cls: MetaClass, method) -> list[str]:
    returns = "void" if method.returns_void else cppgen.cpp_type(method.return_type)
    params = ", ".join(f"{cppgen.param_type(ptype)} {pname}" for pname, ptype in method.params)
    const = " const" if method.is_const else ""
    lines = [f"{returns} {cls.name}::{method.name}({params}){const} {{"]
    for pname, _ in method.params:
        lines.append(f"    (void){pname};")
    if not method.returns_void:
        lines.append("    return {};")
    lines.append("}")
    lines.append("")
    return lines


def _member_decl(attr: MetaAttribute, model: MetaModel) -> str:
    init = cppgen.member_initializer(attr.type, model)
    suffix = f" = {init}" if init is not None else ""
    return f"    {cppgen.cpp_type(attr.type)} m_{attr.name}{suffix};"


def _render_header(cls: MetaClass, model: MetaModel, config: EmitterConfig) -> str:
    guard = cppgen.include_guard(cppgen.header_path(cls))
    system, generated = cppgen.class_includes(cls, model)
    lines = cppgen.banner_lines(config.header_banner)
    lines += [f"#ifndef {guard}", f"#define {guard}", ""]
    lines += [f"#include <{name}>" for name in system]
    lines += [f'#include "{path}"' for path in generated]
    lines.append("")
    forwards = cppgen.forward_declarations(cls)
    if forwards:
        lines += forwards
        lines.append("")
    lines += cppgen.namespace_open(cls.module_path)
    if cls.module_path:
        lines.append("")

    base_list = ", ".join(f"public virtual {cppgen.global_name(b.qualified_name)}" for b in cls.bases)
    heritage = f" : {base_list}" if base_list else ""
    lines.append(f"class {cls.name}{heritage} {{")
    lines.append("public:")
    lines.append(f"    {cls.name}() = default;")
    lines.append(f"    virtual ~{cls.name}() = default;")
    if cppgen.is_framework(cls):
        lines.append(f"    {cls.name}(const {cls.name}&) = delete;  // identity object: not copyable")
        lines.append(f"    {cls.name}& operator=(const {cls.name}&) = delete;")
    lines.append("")
    assert cls.class_id is not None
    lines.append(
        f"    static constexpr std::uint32_t classId() noexcept {{ return 0x{cls.class_id:08x}u; }}"
    )
    for attr in cls.attributes:
        lines.append("")
        lines += _attribute_decls(attr)
    for rel in cls.relationships:
        lines.append("")
        lines.append(f"    // relationship: {rel.cardinality.value} {rel.target.qualified_name}, "
                     f"inverse '{rel.inverse_name}'")
        lines += _relationship_decls(rel)
    if cls.methods:
        lines.append("")
        for method in cls.methods:
            lines.append(_method_decl(method))
    lines.append("")
    lines.append("    // additional member declarations may be placed in the region below")
    lines += ["    " + line if line else line for line in make_region().splitlines()]
    lines.append("")
    lines.append("private:")
    friend_lines = _friend_decls(cls)
    if friend_lines:
        lines += friend_lines
    for rel in cls.relationships:
        pointer = _pointer_type(rel.target)
        lines.append(f"    void _adl_attach_{rel.name}({pointer} value);")
        lines.append(f"    void _adl_detach_{rel.name}({pointer} value);")
    if friend_lines or cls.relationships:
        lines.append("")
    for attr in cls.attributes:
        lines.append(_member_decl(attr, model))
    for rel in cls.relationships:
        pointer = _pointer_type(rel.target)
        if rel.cardinality is ast.Cardinality.MANY:
            lines.append(f"    std::vector<{pointer}> m_{rel.name};")
        else:
            lines.append(f"    {pointer} m_{rel.name} = nullptr;")
    lines.append("};")
    lines.append("")
    if cls.module_path:
        lines += cppgen.namespace_close(cls.module_path)
        lines.append("")
    lines += [f"#endif // {guard}", ""]
    return "\n".join(lines)


def _friend_decls(cls: MetaClass) -> list[str]:
    lines = [f"    friend struct {cls.name}Cnv;"]
    partners = sorted(
        {rel.target.qualified_name for rel in cls.relationships if rel.target is not cls}
    )
    for partner in partners:
        lines.append(f"    friend class {cppgen.global_name(partner)};")
    return lines


def _render_source(cls: MetaClass, model: MetaModel, config: EmitterConfig) -> str:
    lines = cppgen.banner_lines(config.header_banner)
    lines.append(f'#include "{cppgen.header_path(cls)}"')
    target_headers = sorted(
        {cppgen.header_path(rel.target) for rel in cls.relationships if rel.target is not cls}
    )
    lines += [f'#include "{path}"' for path in target_headers]
    if any(rel.cardinality is ast.Cardinality.MANY for rel in cls.relationships):
        lines.append("#include <algorithm>")
    lines.append("")
    lines += cppgen.namespace_open(cls.module_path)
    lines.append("")
    for attr in cls.attributes:
        lines += _attribute_defs(cls, attr)
        lines.append("")
    for rel in cls.relationships:
        lines += _relationship_defs(cls, rel)
        lines.append("")
    stub_lines: list[str] = []
    for method in cls.methods:
        stub_lines += _method_stub(cls, method)
    body = "".join(line + "\n" for line in stub_lines)
    if cls.methods:
        lines.append("// default stubs for declared methods; edit within the region")
    lines += make_region(body=body).splitlines()
    lines.append("")
    lines += cppgen.namespace_close(cls.module_path)
    lines.append("")
    return "\n".join(lines)


def _attribute_defs(cls: MetaClass, attr: MetaAttribute) -> list[str]:
    returns = cppgen.return_type(attr.type)
    lines = [f"{returns} {cls.name}::{attr.name}() const {{ return m_{attr.name}; }}"]
    if attr.visibility is ast.Visibility.PUBLIC:
        lines.append(
            f"void {cls.name}::{cppgen.mutator_name(attr.name)}({cppgen.param_type(attr.type)} value) "
            f"{{ m_{attr.name} = value; }}"
        )
    return lines


def _relationship_defs(cls: MetaClass, rel: MetaRelationship) -> list[str]:
    pointer = _pointer_type(rel.target)
    name = rel.name
    title = cppgen.upper_first(name)
    inverse = rel.inverse()
    inv = inverse.name
    many = rel.cardinality is ast.Cardinality.MANY
    inverse_many = inverse.cardinality is ast.Cardinality.MANY
    lines: list[str] = []

    if many:
        lines.append(f"const std::vector<{pointer}>& {cls.name}::{name}() const {{ return m_{name}; }}")
        lines.append("")
        lines.append(f"void {cls.name}::addTo{title}({pointer} value) {{")
        lines.append("    if (value == nullptr) { return; }")
        lines.append(
            f"    if (std::find(m_{name}.begin(), m_{name}.end(), value) != m_{name}.end()) {{ return; }}"
        )
        lines += _displace_inverse(rel, "value")
        lines.append(f"    _adl_attach_{name}(value);")
        lines.append(f"    value->_adl_attach_{inv}(this);")
        lines.append("}")
        lines.append("")
        lines.append(f"void {cls.name}::removeFrom{title}({pointer} value) {{")
        lines.append("    if (value == nullptr) { return; }")
        lines.append(
            f"    if (std::find(m_{name}.begin(), m_{name}.end(), value) == m_{name}.end()) {{ return; }}"
        )
        lines.append(f"    _adl_detach_{name}(value);")
        lines.append(f"    value->_adl_detach_{inv}(this);")
        lines.append("}")
        lines.append("")
        lines.append(f"void {cls.name}::_adl_attach_{name}({pointer} value) {{")
        lines.append(
            f"    if (std::find(m_{name}.begin(), m_{name}.end(), value) == m_{name}.end()) "
            f"{{ m_{name}.push_back(value); }}"
        )
        lines.append("}")
        lines.append("")
        lines.append(f"void {cls.name}::_adl_detach_{name}({pointer} value) {{")
        lines.append(
            f"    m_{name}.erase(std::remove(m_{name}.begin(), m_{name}.end(), value), m_{name}.end());"
        )
        lines.append("}")
    else:
        lines.append(f"{pointer} {cls.name}::{name}() const {{ return m_{name}; }}")
        lines.append("")
        lines.append(f"void {cls.name}::set{title}({pointer} value) {{")
        lines.append(f"    if (m_{name} == value) {{ return; }}")
        lines.append(f"    if (m_{name} != nullptr) {{")
        lines.append(f"        {pointer} old = m_{name};")
        lines.append(f"        _adl_detach_{name}(old);")
        lines.append(f"        old->_adl_detach_{inv}(this);")
        lines.append("    }")
        lines.append("    if (value != nullptr) {")
        lines += ["    " + line for line in _displace_inverse(rel, "value")]
        lines.append(f"        _adl_attach_{name}(value);")
        lines.append(f"        value->_adl_attach_{inv}(this);")
        lines.append("    }")
        lines.append("}")
        lines.append("")
        lines.append(f"void {cls.name}::_adl_attach_{name}({pointer} value) {{ m_{name} = value; }}")
        lines.append("")
        lines.append(f"void {cls.name}::_adl_detach_{name}({pointer} value) {{")
        lines.append(f"    if (m_{name} == value) {{ m_{name} = nullptr; }}")
        lines.append("}")
    return lines


def _displace_inverse(rel: MetaRelationship, value_expr: str) -> list[str]:
    """When the inverse endpoint is single-valued, the new partner must drop
    its previous link before attaching, on both sides."""
    inverse = rel.inverse()
    if inverse.cardinality is ast.Cardinality.MANY:
        return []
    owner_pointer = cppgen.global_name(rel.owner.qualified_name) + "*"
    inv = inverse.name
    return [
        f"    if ({value_expr}->m_{inv} != nullptr && {value_expr}->m_{inv} != this) {{",
        f"        {owner_pointer} displaced = {value_expr}->m_{inv};",
        f"        {value_expr}->_adl_detach_{inv}(displaced);",
        f"        displaced->_adl_detach_{rel.name}({value_expr});",
        "    }",
    ]
