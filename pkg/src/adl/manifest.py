"""The reflection manifest: a canonical JSON document describing every class
and enum of a resolved model.

Canonical form means sorted object keys, two-space indentation, UTF-8, LF
line endings, and a trailing newline.  Building the document twice from the
same model yields identical bytes, and a loaded manifest re-emits
byte-identically, so the document can serve as a cross-process and
cross-language fixture.
"""

from __future__ import annotations

import json
from typing import Any

from . import ast, metamodel, typedesc
from .errors import ManifestError
from .metamodel import MetaClass, MetaModel

SCHEMA_VERSION = 1

CATEGORY_NAMES = tuple(c.value for c in ast.Category)
CARDINALITY_NAMES = tuple(c.value for c in ast.Cardinality)
VISIBILITY_NAMES = tuple(v.value for v in ast.Visibility)


def canonical_json(document: dict[str, Any]) -> str:
    return json.dumps(document, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def class_entry(cls: MetaClass) -> dict[str, Any]:
    return {
        "qualifiedName": cls.qualified_name,
        "classId": cls.class_id,
        "category": cls.category.value,
        "bases": [base.qualified_name for base in cls.bases],
        "attributes": [
            {
                "name": attr.name,
                "type": typedesc.render(attr.type),
                "visibility": attr.visibility.value,
                "persistent": attr.persistent,
            }
            for attr in cls.attributes
        ],
        "relationships": [
            {
                "name": rel.name,
                "cardinality": rel.cardinality.value,
                "target": rel.target.qualified_name,
                "inverse": rel.inverse_name,
            }
            for rel in cls.relationships
        ],
        "methods": [
            {
                "name": method.name,
                "returns": "void" if method.returns_void else typedesc.render(method.return_type),
                "params": [
                    {"name": pname, "type": typedesc.render(ptype)} for pname, ptype in method.params
                ],
                "const": method.is_const,
            }
            for method in cls.methods
        ],
    }


def build_manifest(model: MetaModel) -> dict[str, Any]:
    """Manifest document for a resolved model.  Classes and enums are listed
    sorted by qualified name; member lists keep declaration order because it
    is the wire order."""
    if not model.resolved:
        raise ValueError("model must be resolved before emitting a manifest")
    return {
        "schemaVersion": SCHEMA_VERSION,
        "classes": [
            class_entry(cls)
            for cls in sorted(model.classes(), key=lambda c: c.qualified_name)
        ],
        "enums": [
            {"qualifiedName": e.qualified_name, "enumerators": list(e.enumerators)}
            for e in sorted(model.enums(), key=lambda e: e.qualified_name)
        ],
    }


def render_manifest(model: MetaModel) -> str:
    return canonical_json(build_manifest(model))


# --- parsing and validation ------------------------------------------------------


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise ManifestError(message)


def _check_string(entry: dict, key: str, where: str) -> str:
    value = entry.get(key)
    _require(isinstance(value, str) and value != "", f"{where}: '{key}' must be a non-empty string")
    return value


def _check_type_descriptor(text: Any, where: str) -> None:
    _require(isinstance(text, str), f"{where}: type descriptor must be a string")
    try:
        typedesc.parse(text)
    except ValueError as exc:
        raise ManifestError(f"{where}: bad type descriptor {text!r}: {exc}") from None


def parse_manifest(document: bytes | str) -> dict[str, Any]:
    """Parse and validate a manifest document.  Raises ManifestError on
    malformed JSON, wrong schema version, structural problems, or duplicate
    class names or ids."""
    if isinstance(document, bytes):
        try:
            document = document.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ManifestError(f"manifest is not UTF-8: {exc}") from None
    try:
        doc = json.loads(document)
    except json.JSONDecodeError as exc:
        raise ManifestError(f"manifest is not valid JSON: {exc}") from None
    _require(isinstance(doc, dict), "manifest root must be an object")
    version = doc.get("schemaVersion")
    _require(isinstance(version, int), "manifest lacks an integer 'schemaVersion'")
    if version != SCHEMA_VERSION:
        raise ManifestError(f"unsupported schemaVersion {version} (supported: {SCHEMA_VERSION})")
    _require(isinstance(doc.get("classes"), list), "'classes' must be a list")
    _require(isinstance(doc.get("enums"), list), "'enums' must be a list")

    names: set[str] = set()
    ids: dict[int, str] = {}
    for entry in doc["classes"]:
        _require(isinstance(entry, dict), "class entry must be an object")
        name = _check_string(entry, "qualifiedName", "class entry")
        where = f"class '{name}'"
        _require(name not in names, f"duplicate class '{name}'")
        names.add(name)
        class_id = entry.get("classId")
        _require(
            isinstance(class_id, int) and 0 <= class_id <= 0xFFFFFFFF,
            f"{where}: 'classId' must be a 32-bit integer",
        )
        if class_id in ids:
            raise ManifestError(f"duplicate classId 0x{class_id:08x} ('{ids[class_id]}' and '{name}')")
        ids[class_id] = name
        _require(entry.get("category") in CATEGORY_NAMES, f"{where}: bad 'category'")
        for field in ("bases", "attributes", "relationships", "methods"):
            _require(isinstance(entry.get(field), list), f"{where}: '{field}' must be a list")
        for base in entry["bases"]:
            _require(isinstance(base, str) and base != "", f"{where}: base names must be strings")
        for attr in entry["attributes"]:
            _require(isinstance(attr, dict), f"{where}: attribute entry must be an object")
            aname = _check_string(attr, "name", where)
            _check_type_descriptor(attr.get("type"), f"{where}.{aname}")
            _require(attr.get("visibility") in VISIBILITY_NAMES, f"{where}.{aname}: bad 'visibility'")
            _require(isinstance(attr.get("persistent"), bool), f"{where}.{aname}: bad 'persistent'")
        for rel in entry["relationships"]:
            _require(isinstance(rel, dict), f"{where}: relationship entry must be an object")
            rname = _check_string(rel, "name", where)
            _require(rel.get("cardinality") in CARDINALITY_NAMES, f"{where}.{rname}: bad 'cardinality'")
            _check_string(rel, "target", f"{where}.{rname}")
            _check_string(rel, "inverse", f"{where}.{rname}")
        for method in entry["methods"]:
            _require(isinstance(method, dict), f"{where}: method entry must be an object")
            mname = _check_string(method, "name", where)
            returns = method.get("returns")
            if returns != "void":
                _check_type_descriptor(returns, f"{where}.{mname}")
            _require(isinstance(method.get("params"), list), f"{where}.{mname}: bad 'params'")
            for param in method["params"]:
                _require(isinstance(param, dict), f"{where}.{mname}: param entry must be an object")
                _check_string(param, "name", f"{where}.{mname}")
                _check_type_descriptor(param.get("type"), f"{where}.{mname}")
            _require(isinstance(method.get("const"), bool), f"{where}.{mname}: bad 'const'")

    enum_names: set[str] = set()
    for entry in doc["enums"]:
        _require(isinstance(entry, dict), "enum entry must be an object")
        name = _check_string(entry, "qualifiedName", "enum entry")
        _require(name not in enum_names, f"duplicate enum '{name}'")
        enum_names.add(name)
        enumerators = entry.get("enumerators")
        _require(
            isinstance(enumerators, list)
            and enumerators
            and all(isinstance(e, str) and e for e in enumerators),
            f"enum '{name}': 'enumerators' must be a non-empty list of names",
        )

    for entry in doc["classes"]:
        where = f"class '{entry['qualifiedName']}'"
        for base in entry["bases"]:
            _require(base in names, f"{where}: unknown base '{base}'")
        for rel in entry["relationships"]:
            _require(rel["target"] in names, f"{where}: unknown relationship target '{rel['target']}'")
    return doc


def verify_class_ids(doc: dict[str, Any]) -> None:
    """Check every classId in a parsed manifest against the hash of its
    qualified name.  Guards against hand-edited documents."""
    for entry in doc["classes"]:
        expected = metamodel.compute_class_id(entry["qualifiedName"])
        if entry["classId"] != expected:
            raise ManifestError(
                f"class '{entry['qualifiedName']}': classId 0x{entry['classId']:08x} "
                f"does not match its name hash 0x{expected:08x}"
            )
