"""Converter emitter: per-class C++ code translating between generated data
objects and the persistent wire layout, plus one schema sidecar describing
that layout.

The wire layout is exactly the runtime codec's: a class's record carries
its flattened persistent attributes in linearization order, and an embedded
plain struct is written as all of its attributes.  Converters are emitted
header-only.  Because C++ friendship is not inherited, each converter
serializes only its own class's members and the flattened drivers delegate
ancestor fields to the ancestor's converter.

Two target encodings exist, selected by EmitterConfig.converterFormat:
``self-describing-binary`` (byte-compatible with the runtime codec's value
encoding) and ``canonical-json`` (the canonical text dump's value grammar,
useful for debugging exports).  The sidecar layout description is the same
for both.
"""

from __future__ import annotations

from .. import ast, manifest, metamodel, typedesc
from ..diagnostics import Diagnostic, warning
from ..metamodel import MetaAttribute, MetaClass, MetaModel
from ..typedesc import TypeDesc
from . import cppgen
from .fileset import EmitterConfig, FileSet

WIRE_HEADER_PATH = "adl/Wire.h"
TEXT_HEADER_PATH = "adl/Text.h"
SIDECAR_PATH = "wire.schema.json"


def emit_converters(model: MetaModel, config: EmitterConfig) -> tuple[FileSet, list[Diagnostic]]:
    """Deterministic FileSet of converter sources and the wire.schema.json
    sidecar, plus warnings (a DataObject class with nothing persistent still
    gets a converter, but its records would be empty)."""
    if not model.resolved:
        raise ValueError("model must be resolved before emission")
    files = FileSet()
    warnings: list[Diagnostic] = []
    closure = _converter_closure(model)
    if closure:
        if config.converter_format == "self-describing-binary":
            files.add(WIRE_HEADER_PATH, _render_wire_header(config))
        else:
            files.add(TEXT_HEADER_PATH, _render_text_header(config))
        files.add(SIDECAR_PATH, _render_sidecar(model, closure, config))
    for cls in closure:
        if (
            cls.category is ast.Category.DATA_OBJECT
            and not any(a.persistent for a in metamodel.attributes_of(cls, include_inherited=True))
        ):
            warnings.append(
                warning(
                    "empty-payload",
                    f"class '{cls.qualified_name}' has no persistent attributes; "
                    "its serialized records carry no fields",
                    cls.pos,
                )
            )
        files.add(_converter_path(cls), _render_converter(cls, model, config))
    return files, warnings


def _converter_closure(model: MetaModel) -> list[MetaClass]:
    """Classes needing converters: every framework-category class, every
    plain struct reachable from one through embedded values, and the
    ancestors of any of those (drivers delegate to ancestor converters)."""
    include: dict[str, MetaClass] = {}
    pending = [cls for cls in model.classes() if cppgen.is_framework(cls)]
    while pending:
        cls = pending.pop()
        if cls.qualified_name in include:
            continue
        include[cls.qualified_name] = cls
        for ancestor in metamodel.linearization(cls):
            if ancestor.qualified_name not in include:
                pending.append(ancestor)
        for attr in metamodel.attributes_of(cls, include_inherited=True):
            desc = attr.type
            while desc.kind == "sequence":
                desc = desc.element
            if desc.kind == "class" and desc.name not in include:
                pending.append(model.class_index[desc.name])
    return sorted(include.values(), key=lambda c: c.qualified_name)


def _converter_path(cls: MetaClass) -> str:
    return "/".join((*cls.module_path, cls.name)) + "Cnv.h"


def _cnv_name(cls: MetaClass) -> str:
    return cppgen.global_name(cls.qualified_name) + "Cnv"


# --- sidecar ---------------------------------------------------------------------


def _render_sidecar(model: MetaModel, closure: list[MetaClass], config: EmitterConfig) -> str:
    classes = []
    for cls in closure:
        flattened = metamodel.attributes_of(cls, include_inherited=True)
        relationships = metamodel.relationships_of(cls, include_inherited=True)
        classes.append(
            {
                "qualifiedName": cls.qualified_name,
                "classId": cls.class_id,
                "category": cls.category.value,
                "attributes": [
                    {
                        "name": attr.name,
                        "type": typedesc.render(attr.type),
                        "persistent": attr.persistent,
                        "private": attr.private,
                    }
                    for attr in flattened
                ],
                "relationships": [
                    {
                        "name": rel.name,
                        "cardinality": rel.cardinality.value,
                        "target": rel.target.qualified_name,
                        "inverse": rel.inverse_name,
                    }
                    for rel in relationships
                ],
                "recordFields": [a.name for a in flattened if a.persistent],
                "valueFields": [a.name for a in flattened],
            }
        )
    return manifest.canonical_json(
        {
            "schemaVersion": manifest.SCHEMA_VERSION,
            "encoding": config.converter_format,
            "classes": classes,
        }
    )


# --- binary converters -----------------------------------------------------------


def _render_converter(cls: MetaClass, model: MetaModel, config: EmitterConfig) -> str:
    guard = cppgen.include_guard(_converter_path(cls))
    lines = cppgen.banner_lines(config.header_banner)
    lines += [f"#ifndef {guard}", f"#define {guard}", ""]
    support = WIRE_HEADER_PATH if config.converter_format == "self-describing-binary" else TEXT_HEADER_PATH
    includes = {support, cppgen.header_path(cls)}
    for ancestor in metamodel.linearization(cls):
        if ancestor is not cls:
            includes.add(_converter_path(ancestor))
    for attr in cls.attributes:
        desc = attr.type
        while desc.kind == "sequence":
            desc = desc.element
        if desc.kind == "class":
            includes.add(_converter_path(model.class_index[desc.name]))
    lines += [f'#include "{path}"' for path in sorted(includes)]
    lines.append("")
    lines += cppgen.namespace_open(cls.module_path)
    lines.append("")
    if config.converter_format == "self-describing-binary":
        lines += _binary_struct(cls, model)
    else:
        lines += _text_struct(cls, model)
    lines.append("")
    if cls.module_path:
        lines += cppgen.namespace_close(cls.module_path)
        lines.append("")
    lines += [f"#endif // {guard}", ""]
    return "\n".join(lines)


def _binary_struct(cls: MetaClass, model: MetaModel) -> list[str]:
    ref = cppgen.global_name(cls.qualified_name)
    name = cls.name + "Cnv"
    lin = metamodel.linearization(cls)
    own_persistent = [a for a in cls.attributes if a.persistent]
    own_all = list(cls.attributes)
    lines = [f"struct {name} {{"]

    def writer(fn: str, attrs: list[MetaAttribute]) -> list[str]:
        body = [f"    static void {fn}(const {ref}& obj, ::adl::wire::Writer& out) {{"]
        if not attrs:
            body.append("        (void)obj; (void)out;")
        for attr in attrs:
            body += _write_value_code(f"obj.m_{attr.name}", attr.type, model, indent=8, depth=0)
        body.append("    }")
        return body

    def reader(fn: str, attrs: list[MetaAttribute]) -> list[str]:
        body = [f"    static void {fn}({ref}& obj, ::adl::wire::Reader& in) {{"]
        if not attrs:
            body.append("        (void)obj; (void)in;")
        for attr in attrs:
            body += _read_value_code(f"obj.m_{attr.name}", attr.type, model, indent=8, depth=0)
        body.append("    }")
        return body

    lines += writer("writeOwnRecord", own_persistent)
    lines += reader("readOwnRecord", own_persistent)
    lines += writer("writeOwnValue", own_all)
    lines += reader("readOwnValue", own_all)
    for fn, own_fn, const in (
        ("writeRecord", "writeOwnRecord", "const "),
        ("readRecord", "readOwnRecord", ""),
        ("writeValue", "writeOwnValue", "const "),
        ("readValue", "readOwnValue", ""),
    ):
        stream = "::adl::wire::Writer& out" if fn.startswith("write") else "::adl::wire::Reader& in"
        arg = "out" if fn.startswith("write") else "in"
        lines.append(f"    static void {fn}({const}{ref}& obj, {stream}) {{")
        for ancestor in lin:
            cnv = _cnv_name(ancestor) if ancestor is not cls else name
            lines.append(f"        {cnv}::{own_fn}(obj, {arg});")
        lines.append("    }")
    lines.append("};")
    return lines


def _write_value_code(expr: str, desc: TypeDesc, model: MetaModel, indent: int, depth: int) -> list[str]:
    pad = " " * indent
    kind = desc.kind
    if kind == "boolean":
        return [f"{pad}out.u8({expr} ? 1 : 0);"]
    if kind == "octet":
        return [f"{pad}out.u8({expr});"]
    if kind == "short":
        return [f"{pad}out.i16({expr});"]
    if kind == "long":
        return [f"{pad}out.i32({expr});"]
    if kind == "longlong":
        return [f"{pad}out.i64({expr});"]
    if kind == "float":
        return [f"{pad}out.f32({expr});"]
    if kind == "double":
        return [f"{pad}out.f64({expr});"]
    if kind == "string":
        return [f"{pad}out.str({expr});"]
    if kind == "enum":
        return [f"{pad}out.i32(static_cast<std::int32_t>({expr}));"]
    if kind == "extern":
        return [f"{pad}out.blob({expr});"]
    if kind == "sequence":
        var = f"e{depth}"
        inner = _write_value_code(var, desc.element, model, indent + 4, depth + 1)
        return [
            f"{pad}out.u32(static_cast<std::uint32_t>({expr}.size()));",
            f"{pad}for (const auto& {var} : {expr}) {{",
            *inner,
            f"{pad}}}",
        ]
    assert kind == "class"
    return [f"{pad}{_cnv_name(model.class_index[desc.name])}::writeValue({expr}, out);"]


def _read_value_code(target: str, desc: TypeDesc, model: MetaModel, indent: int, depth: int) -> list[str]:
    pad = " " * indent
    kind = desc.kind
    simple = {
        "boolean": "in.u8() != 0",
        "octet": "in.u8()",
        "short": "in.i16()",
        "long": "in.i32()",
        "longlong": "in.i64()",
        "float": "in.f32()",
        "double": "in.f64()",
        "string": "in.str()",
        "extern": "in.blob()",
    }
    if kind in simple:
        return [f"{pad}{target} = {simple[kind]};"]
    if kind == "enum":
        return [f"{pad}{target} = static_cast<{cppgen.global_name(desc.name)}>(in.i32());"]
    if kind == "sequence":
        count = f"n{depth}"
        index = f"i{depth}"
        element = f"v{depth}"
        inner: list[str] = [f"{pad}    {cppgen.cpp_type(desc.element)} {element}{{}};"]
        inner += _read_value_code(element, desc.element, model, indent + 4, depth + 1)
        return [
            f"{pad}{{",
            f"{pad}    const std::uint32_t {count} = in.u32();",
            f"{pad}    {target}.clear();",
            f"{pad}    {target}.reserve({count});",
            f"{pad}    for (std::uint32_t {index} = 0; {index} < {count}; ++{index}) {{",
            *["    " + line for line in inner],
            f"{pad}        {target}.push_back({element});",
            f"{pad}    }}",
            f"{pad}}}",
        ]
    assert kind == "class"
    return [f"{pad}{_cnv_name(model.class_index[desc.name])}::readValue({target}, in);"]


# --- canonical-text converters -----------------------------------------------------


def _text_struct(cls: MetaClass, model: MetaModel) -> list[str]:
    ref = cppgen.global_name(cls.qualified_name)
    name = cls.name + "Cnv"
    lin = metamodel.linearization(cls)
    lines = [f"struct {name} {{"]
    lines.append(f"    static void writeOwnText(const {ref}& obj, std::ostream& out, bool& first) {{")
    if not cls.attributes:
        lines.append("        (void)obj; (void)out; (void)first;")
    for attr in cls.attributes:
        lines.append("        if (!first) { out << \";\"; }")
        lines.append("        first = false;")
        lines.append(f'        out << "{attr.name}=";')
        lines += _write_text_code(f"obj.m_{attr.name}", attr.type, model, indent=8, depth=0)
    lines.append("    }")
    lines.append(f"    static void writeText(const {ref}& obj, std::ostream& out) {{")
    lines.append('        out << "{";')
    lines.append("        bool first = true;")
    for ancestor in lin:
        cnv = _cnv_name(ancestor) if ancestor is not cls else name
        lines.append(f"        {cnv}::writeOwnText(obj, out, first);")
    lines.append('        out << "}";')
    lines.append("    }")
    lines.append("};")
    return lines


def _write_text_code(expr: str, desc: TypeDesc, model: MetaModel, indent: int, depth: int) -> list[str]:
    pad = " " * indent
    kind = desc.kind
    if kind == "boolean":
        return [f'{pad}out << ({expr} ? "true" : "false");']
    if kind in ("octet", "short", "long", "longlong"):
        return [f"{pad}out << static_cast<std::int64_t>({expr});"]
    if kind == "enum":
        return [f"{pad}out << static_cast<std::int32_t>({expr});"]
    if kind == "float":
        return [f"{pad}::adl::text::f32hex({expr}, out);"]
    if kind == "double":
        return [f"{pad}::adl::text::f64hex({expr}, out);"]
    if kind == "string":
        return [f"{pad}::adl::text::jsonString({expr}, out);"]
    if kind == "extern":
        return [f"{pad}::adl::text::hexBytes({expr}, out);"]
    if kind == "sequence":
        var = f"e{depth}"
        flag = f"first{depth}"
        inner = _write_text_code(var, desc.element, model, indent + 4, depth + 1)
        return [
            f'{pad}out << "[";',
            f"{pad}{{",
            f"{pad}    bool {flag} = true;",
            f"{pad}    for (const auto& {var} : {expr}) {{",
            f'{pad}        if (!{flag}) {{ out << ","; }}',
            f"{pad}        {flag} = false;",
            *["    " + line for line in inner],
            f"{pad}    }}",
            f"{pad}}}",
            f'{pad}out << "]";',
        ]
    assert kind == "class"
    return [f"{pad}{_cnv_name(model.class_index[desc.name])}::writeText({expr}, out);"]


# --- support headers ---------------------------------------------------------------


def _render_wire_header(config: EmitterConfig) -> str:
    guard = cppgen.include_guard(WIRE_HEADER_PATH)
    lines = cppgen.banner_lines(config.header_banner)
    lines.append(_WIRE_HEADER_TEMPLATE.format(guard=guard))
    return "\n".join(lines)


def _render_text_header(config: EmitterConfig) -> str:
    guard = cppgen.include_guard(TEXT_HEADER_PATH)
    lines = cppgen.banner_lines(config.header_banner)
    lines.append(_TEXT_HEADER_TEMPLATE.format(guard=guard))
    return "\n".join(lines)


_WIRE_HEADER_TEMPLATE = """\
#ifndef {guard}
#define {guard}

#include <cstdint>
#include <cstring>
#include <stdexcept>
#include <string>
#include <vector>

// Little-endian wire primitives matching the runtime payload codec:
// fixed-width integers, IEEE 754 floats, and length-prefixed strings,
// sequences, and opaque blobs.
namespace adl {{
namespace wire {{

class Writer {{
public:
    const std::vector<std::uint8_t>& bytes() const {{ return m_bytes; }}

    void u8(std::uint8_t v) {{ m_bytes.push_back(v); }}
    void u16(std::uint16_t v) {{ put(v, 2); }}
    void u32(std::uint32_t v) {{ put(v, 4); }}
    void u64(std::uint64_t v) {{ put(v, 8); }}
    void i16(std::int16_t v) {{ u16(static_cast<std::uint16_t>(v)); }}
    void i32(std::int32_t v) {{ u32(static_cast<std::uint32_t>(v)); }}
    void i64(std::int64_t v) {{ u64(static_cast<std::uint64_t>(v)); }}
    void f32(float v) {{
        std::uint32_t bits = 0;
        std::memcpy(&bits, &v, sizeof bits);
        u32(bits);
    }}
    void f64(double v) {{
        std::uint64_t bits = 0;
        std::memcpy(&bits, &v, sizeof bits);
        u64(bits);
    }}
    void str(const std::string& v) {{
        u32(static_cast<std::uint32_t>(v.size()));
        m_bytes.insert(m_bytes.end(), v.begin(), v.end());
    }}
    void blob(const std::vector<std::uint8_t>& v) {{
        u32(static_cast<std::uint32_t>(v.size()));
        m_bytes.insert(m_bytes.end(), v.begin(), v.end());
    }}

private:
    void put(std::uint64_t v, int width) {{
        for (int i = 0; i < width; ++i) {{
            m_bytes.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
        }}
    }}

    std::vector<std::uint8_t> m_bytes;
}};

class Reader {{
public:
    Reader(const std::uint8_t* data, std::size_t size) : m_data(data), m_size(size) {{}}

    bool done() const {{ return m_offset == m_size; }}

    std::uint8_t u8() {{ need(1); return m_data[m_offset++]; }}
    std::uint16_t u16() {{ return static_cast<std::uint16_t>(get(2)); }}
    std::uint32_t u32() {{ return static_cast<std::uint32_t>(get(4)); }}
    std::uint64_t u64() {{ return get(8); }}
    std::int16_t i16() {{ return static_cast<std::int16_t>(u16()); }}
    std::int32_t i32() {{ return static_cast<std::int32_t>(u32()); }}
    std::int64_t i64() {{ return static_cast<std::int64_t>(u64()); }}
    float f32() {{
        const std::uint32_t bits = u32();
        float v = 0;
        std::memcpy(&v, &bits, sizeof v);
        return v;
    }}
    double f64() {{
        const std::uint64_t bits = u64();
        double v = 0;
        std::memcpy(&v, &bits, sizeof v);
        return v;
    }}
    std::string str() {{
        const std::uint32_t n = u32();
        need(n);
        std::string v(reinterpret_cast<const char*>(m_data + m_offset), n);
        m_offset += n;
        return v;
    }}
    std::vector<std::uint8_t> blob() {{
        const std::uint32_t n = u32();
        need(n);
        std::vector<std::uint8_t> v(m_data + m_offset, m_data + m_offset + n);
        m_offset += n;
        return v;
    }}

private:
    void need(std::size_t n) const {{
        if (m_offset + n > m_size) {{
            throw std::runtime_error("truncated payload");
        }}
    }}
    std::uint64_t get(int width) {{
        need(static_cast<std::size_t>(width));
        std::uint64_t v = 0;
        for (int i = 0; i < width; ++i) {{
            v |= static_cast<std::uint64_t>(m_data[m_offset + i]) << (8 * i);
        }}
        m_offset += static_cast<std::size_t>(width);
        return v;
    }}

    const std::uint8_t* m_data;
    std::size_t m_size;
    std::size_t m_offset = 0;
}};

}} // namespace wire
}} // namespace adl

#endif // {guard}
"""

_TEXT_HEADER_TEMPLATE = """\
#ifndef {guard}
#define {guard}

#include <cstdint>
#include <cstring>
#include <ostream>
#include <string>
#include <vector>

// Canonical text value encodings shared with the runtime's dump format:
// floats as big-endian hex of their IEEE 754 bits, strings JSON-quoted,
// opaque payloads as lowercase hex.
namespace adl {{
namespace text {{

inline void hexDigits(std::uint64_t bits, int width, std::ostream& out) {{
    static const char digits[] = "0123456789abcdef";
    for (int i = width - 1; i >= 0; --i) {{
        out << digits[(bits >> (4 * i)) & 0xF];
    }}
}}

inline void f32hex(float v, std::ostream& out) {{
    std::uint32_t bits = 0;
    std::memcpy(&bits, &v, sizeof bits);
    out << "f32:";
    hexDigits(bits, 8, out);
}}

inline void f64hex(double v, std::ostream& out) {{
    std::uint64_t bits = 0;
    std::memcpy(&bits, &v, sizeof bits);
    out << "f64:";
    hexDigits(bits, 16, out);
}}

inline void jsonString(const std::string& s, std::ostream& out) {{
    out << '"';
    for (const char c : s) {{
        const unsigned char u = static_cast<unsigned char>(c);
        switch (c) {{
            case '"': out << "\\\\\\""; break;
            case '\\\\': out << "\\\\\\\\"; break;
            case '\\b': out << "\\\\b"; break;
            case '\\f': out << "\\\\f"; break;
            case '\\n': out << "\\\\n"; break;
            case '\\r': out << "\\\\r"; break;
            case '\\t': out << "\\\\t"; break;
            default:
                if (u < 0x20) {{
                    out << "\\\\u00";
                    hexDigits(u, 2, out);
                }} else {{
                    out << c;
                }}
        }}
    }}
    out << '"';
}}

inline void hexBytes(const std::vector<std::uint8_t>& v, std::ostream& out) {{
    out << "hex:";
    for (const std::uint8_t b : v) {{
        hexDigits(b, 2, out);
    }}
}}

}} // namespace text
}} // namespace adl

#endif // {guard}
"""
