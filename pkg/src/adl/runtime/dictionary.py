"""The dictionary service: an immutable registry of class descriptors keyed
both by qualified name and by ClassId, loaded from a reflection manifest.

The registry preserves the manifest's full content, so ``to_manifest``
re-emits the document byte-identically.  Descriptor lookups, inheritance
linearization, and flattened member views are the reflection surface the
rest of the runtime builds on.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterable

from .. import manifest as manifest_mod
from ..errors import ManifestError, UnknownClassError
from ..typedesc import TypeDesc, parse as parse_typedesc


@dataclass(frozen=True)
class AttributeDescriptor:
    name: str
    type: TypeDesc
    type_text: str
    private: bool
    persistent: bool


@dataclass(frozen=True)
class RelationshipDescriptor:
    name: str
    cardinality: str  # "one" | "many"
    target: str
    inverse: str

    @property
    def many(self) -> bool:
        return self.cardinality == "many"


@dataclass(frozen=True)
class MethodDescriptor:
    name: str
    returns: str  # type descriptor text, or "void"
    params: tuple[tuple[str, str], ...]
    const: bool


@dataclass(frozen=True)
class ClassDescriptor:
    qualified_name: str
    class_id: int
    category: str
    bases: tuple[str, ...]
    attributes: tuple[AttributeDescriptor, ...]
    relationships: tuple[RelationshipDescriptor, ...]
    methods: tuple[MethodDescriptor, ...]

    @property
    def name(self) -> str:
        return self.qualified_name.rsplit("::", 1)[-1]


def _attribute_from_entry(entry: dict[str, Any]) -> AttributeDescriptor:
    return AttributeDescriptor(
        name=entry["name"],
        type=parse_typedesc(entry["type"]),
        type_text=entry["type"],
        private=entry["visibility"] == "private",
        persistent=entry["persistent"],
    )


class DictionaryService:
    """Registry of class descriptors and enum value sets.

    Immutable after construction and safe for concurrent reads.  The
    ``privileged`` flag governs writes to private attributes through
    ``set_field``.
    """

    def __init__(
        self,
        descriptors: Iterable[ClassDescriptor],
        enums: dict[str, tuple[str, ...]] | None = None,
        privileged: bool = False,
    ) -> None:
        self.by_name: dict[str, ClassDescriptor] = {}
        self.by_id: dict[int, ClassDescriptor] = {}
        self.enums: dict[str, tuple[str, ...]] = dict(enums or {})
        self.privileged = privileged
        for desc in descriptors:
            if desc.qualified_name in self.by_name:
                raise ManifestError(f"duplicate class '{desc.qualified_name}'")
            other = self.by_id.get(desc.class_id)
            if other is not None:
                raise ManifestError(
                    f"duplicate classId 0x{desc.class_id:08x} "
                    f"('{other.qualified_name}' and '{desc.qualified_name}')"
                )
            self.by_name[desc.qualified_name] = desc
            self.by_id[desc.class_id] = desc
        self._linearized: dict[str, tuple[ClassDescriptor, ...]] = {}

    def __len__(self) -> int:
        return len(self.by_name)

    def __contains__(self, name: str) -> bool:
        return name in self.by_name

    def find(self, key: str | int) -> ClassDescriptor:
        table: dict = self.by_id if isinstance(key, int) else self.by_name
        try:
            return table[key]
        except KeyError:
            label = f"0x{key:08x}" if isinstance(key, int) else f"'{key}'"
            raise UnknownClassError(f"unknown class {label}") from None

    def linearization(self, name: str) -> tuple[ClassDescriptor, ...]:
        """Ancestors-first order: depth-first along declared bases,
        left-to-right, keeping only the first visit of each class."""
        cached = self._linearized.get(name)
        if cached is not None:
            return cached
        seen: set[str] = set()
        order: list[ClassDescriptor] = []

        def visit(qualified: str) -> None:
            if qualified in seen:
                return
            seen.add(qualified)
            desc = self.find(qualified)
            for base in desc.bases:
                visit(base)
            order.append(desc)

        visit(name)
        result = tuple(order)
        self._linearized[name] = result
        return result

    def flattened_attributes(self, name: str) -> tuple[AttributeDescriptor, ...]:
        return tuple(a for cls in self.linearization(name) for a in cls.attributes)

    def flattened_relationships(self, name: str) -> tuple[RelationshipDescriptor, ...]:
        return tuple(r for cls in self.linearization(name) for r in cls.relationships)

    def find_relationship(self, class_name: str, rel_name: str) -> RelationshipDescriptor | None:
        for rel in self.flattened_relationships(class_name):
            if rel.name == rel_name:
                return rel
        return None

    def is_kind_of(self, class_name: str, ancestor: str) -> bool:
        """Reflexive ancestry test; ``ancestor`` may be a qualified name, an
        unqualified class name, or a category name such as ``DataObject``."""
        simple = "::" not in ancestor
        for desc in self.linearization(class_name):
            if desc.qualified_name == ancestor:
                return True
            if simple and (desc.name == ancestor or desc.category == ancestor):
                return True
        return False

    # -- manifest round trip --

    def to_manifest_document(self) -> dict[str, Any]:
        return {
            "schemaVersion": manifest_mod.SCHEMA_VERSION,
            "classes": [
                {
                    "qualifiedName": desc.qualified_name,
                    "classId": desc.class_id,
                    "category": desc.category,
                    "bases": list(desc.bases),
                    "attributes": [
                        {
                            "name": a.name,
                            "type": a.type_text,
                            "visibility": "private" if a.private else "public",
                            "persistent": a.persistent,
                        }
                        for a in desc.attributes
                    ],
                    "relationships": [
                        {
                            "name": r.name,
                            "cardinality": r.cardinality,
                            "target": r.target,
                            "inverse": r.inverse,
                        }
                        for r in desc.relationships
                    ],
                    "methods": [
                        {
                            "name": m.name,
                            "returns": m.returns,
                            "params": [{"name": n, "type": t} for n, t in m.params],
                            "const": m.const,
                        }
                        for m in desc.methods
                    ],
                }
                for desc in sorted(self.by_name.values(), key=lambda d: d.qualified_name)
            ],
            "enums": [
                {"qualifiedName": name, "enumerators": list(values)}
                for name, values in sorted(self.enums.items())
            ],
        }

    def to_manifest(self) -> str:
        return manifest_mod.canonical_json(self.to_manifest_document())


def load_manifest(document: bytes | str, privileged: bool = False) -> DictionaryService:
    """Build a DictionaryService from a manifest document.

    Raises ManifestError on malformed documents, unsupported schema
    versions, and duplicate names or ids.
    """
    doc = manifest_mod.parse_manifest(document)
    descriptors = [
        ClassDescriptor(
            qualified_name=entry["qualifiedName"],
            class_id=entry["classId"],
            category=entry["category"],
            bases=tuple(entry["bases"]),
            attributes=tuple(_attribute_from_entry(a) for a in entry["attributes"]),
            relationships=tuple(
                RelationshipDescriptor(r["name"], r["cardinality"], r["target"], r["inverse"])
                for r in entry["relationships"]
            ),
            methods=tuple(
                MethodDescriptor(
                    m["name"],
                    m["returns"],
                    tuple((p["name"], p["type"]) for p in m["params"]),
                    m["const"],
                )
                for m in entry["methods"]
            ),
        )
        for entry in doc["classes"]
    ]
    enums = {entry["qualifiedName"]: tuple(entry["enumerators"]) for entry in doc["enums"]}
    return DictionaryService(descriptors, enums, privileged=privileged)
