"""Canonical formatter for ADL syntax trees.

One layout, deterministic: two-space indentation, one declaration per line,
category keyword first in the base list, ``private`` before ``persistent``.
Re-parsing the output yields a structurally identical tree (positions aside).
Comments are not preserved; the printer works from the AST alone.
"""

from __future__ import annotations

from . import ast


def format_type(type_ref: ast.TypeRef) -> str:
    if isinstance(type_ref, ast.PrimitiveType):
        return type_ref.name
    if isinstance(type_ref, ast.NamedType):
        return type_ref.name
    return f"sequence<{format_type(type_ref.element)}>"


def _member_line(member: ast.ClassMember) -> str:
    if isinstance(member, ast.AttributeDecl):
        words = []
        if member.visibility is ast.Visibility.PRIVATE:
            words.append("private")
        if member.persistent:
            words.append("persistent")
        words.append(format_type(member.type))
        words.append(member.name)
        return " ".join(words) + ";"
    if isinstance(member, ast.RelationshipDecl):
        return (
            f"relationship {member.cardinality.value} {member.target} "
            f"{member.name} inverse {member.inverse};"
        )
    params = ", ".join(f"{format_type(p.type)} {p.name}" for p in member.params)
    ret = "void" if member.return_type is None else format_type(member.return_type)
    const = " const" if member.is_const else ""
    return f"{ret} {member.name}({params}){const};"


def _decl_lines(decl: ast.Declaration, indent: int) -> list[str]:
    pad = "  " * indent
    if isinstance(decl, ast.ModuleDecl):
        lines = [f"{pad}module {decl.name} {{"]
        for member in decl.members:
            lines.extend(_decl_lines(member, indent + 1))
        lines.append(f"{pad}}};")
        return lines
    if isinstance(decl, ast.ClassDecl):
        heritage = []
        if decl.category is not ast.Category.PLAIN:
            heritage.append(decl.category.value)
        heritage.extend(decl.bases)
        suffix = f" : {', '.join(heritage)}" if heritage else ""
        lines = [f"{pad}class {decl.name}{suffix} {{"]
        inner = "  " * (indent + 1)
        for member in decl.members:
            lines.append(inner + _member_line(member))
        lines.append(f"{pad}}};")
        return lines
    if isinstance(decl, ast.EnumDecl):
        return [f"{pad}enum {decl.name} {{ {', '.join(decl.enumerators)} }};"]
    if isinstance(decl, ast.TypedefDecl):
        return [f"{pad}typedef {format_type(decl.type)} {decl.alias};"]
    return [f"{pad}extern {decl.name};"]


def pretty_print(unit: ast.CompilationUnit) -> str:
    """Render a compilation unit in the one canonical layout."""
    if not unit.declarations:
        return ""
    lines: list[str] = []
    for decl in unit.declarations:
        lines.extend(_decl_lines(decl, 0))
    return "\n".join(lines) + "\n"
