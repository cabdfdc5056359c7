"""Self-describing payload codec.

A payload is a single byte stream that carries everything needed to read it
back: magic and version, an embedded schema for every class present in the
object table (plus every plain struct those classes embed by value), and
the object records themselves.  Deserialization relies only on the embedded
schema, never on a loaded manifest.

Layout (all integers little-endian, strings length-prefixed UTF-8):

    payload   := "ADD1" u16 version u16 flags schema table
    schema    := u32 classCount classEntry*
    classEntry:= str qualifiedName, u32 classId, u8 category,
                 u32 attrCount  (str name, str typeDescriptor, u8 flags)*,
                 u32 relCount   (str name, u8 cardinality, str target, str inverse)*
    table     := u32 objectCount record*
    record    := u32 recordLen   -- length of the rest of the record
                 u32 classId, str storeKey,
                 persistent attribute values in schema order,
                 link slots per relationship in schema order

Attribute flag bits: 0x01 persistent, 0x02 private.  Cardinality: 0 one,
1 many.  A `one` link slot is one u32 object-table index (0xFFFFFFFF when
unset); a `many` slot is u32 count + that many indices.  Value encodings
per type descriptor: boolean u8, octet u8, short i16, long i32,
longlong i64, float f32, double f64, string str, enum i32 ordinal,
sequence u32 count + elements, embedded struct = all of its attributes in
schema order, extern = u32 length + opaque bytes.

The class entries are flattened views: inherited attributes and
relationships are listed in full, in wire order, and `bases` are not
recorded.  Schema entries are sorted by qualified name; the object table
holds the serialization roots in argument order followed by the
breadth-first closure of their links.
"""

from __future__ import annotations

import struct
from collections import deque
from dataclasses import dataclass

from ..errors import PayloadError, StoreError
from ..typedesc import TypeDesc, parse as parse_typedesc, render as render_typedesc
from .dictionary import (
    AttributeDescriptor,
    ClassDescriptor,
    DictionaryService,
    RelationshipDescriptor,
)
from .objects import DynamicObject
from .store import TransientStore

MAGIC = b"ADD1"
VERSION = 1
NO_LINK = 0xFFFFFFFF

FLAG_PERSISTENT = 0x01
FLAG_PRIVATE = 0x02

_CATEGORY_CODES = {
    "plain": 0,
    "DataObject": 1,
    "ContainedObject": 2,
    "CollectionObject": 3,
    "extern": 4,
}
_CATEGORY_NAMES = {code: name for name, code in _CATEGORY_CODES.items()}


class _Writer:
    def __init__(self) -> None:
        self._parts: list[bytes] = []

    def raw(self, data: bytes) -> None:
        self._parts.append(data)

    def u8(self, value: int) -> None:
        self._parts.append(struct.pack("<B", value))

    def u16(self, value: int) -> None:
        self._parts.append(struct.pack("<H", value))

    def u32(self, value: int) -> None:
        self._parts.append(struct.pack("<I", value))

    def i16(self, value: int) -> None:
        self._parts.append(struct.pack("<h", value))

    def i32(self, value: int) -> None:
        self._parts.append(struct.pack("<i", value))

    def i64(self, value: int) -> None:
        self._parts.append(struct.pack("<q", value))

    def f32(self, value: float) -> None:
        self._parts.append(struct.pack("<f", value))

    def f64(self, value: float) -> None:
        self._parts.append(struct.pack("<d", value))

    def string(self, value: str) -> None:
        data = value.encode("utf-8")
        self.u32(len(data))
        self.raw(data)

    def blob(self, value: bytes) -> None:
        self.u32(len(value))
        self.raw(value)

    def getvalue(self) -> bytes:
        return b"".join(self._parts)


class _Reader:
    def __init__(self, data: bytes) -> None:
        self.data = data
        self.offset = 0

    def take(self, count: int, what: str) -> bytes:
        end = self.offset + count
        if end > len(self.data):
            raise PayloadError(f"truncated payload: expected {count} bytes of {what}")
        chunk = self.data[self.offset : end]
        self.offset = end
        return chunk

    def _unpack(self, fmt: str, size: int, what: str):
        return struct.unpack(fmt, self.take(size, what))[0]

    def u8(self, what: str = "u8") -> int:
        return self._unpack("<B", 1, what)

    def u16(self, what: str = "u16") -> int:
        return self._unpack("<H", 2, what)

    def u32(self, what: str = "u32") -> int:
        return self._unpack("<I", 4, what)

    def i16(self) -> int:
        return self._unpack("<h", 2, "i16")

    def i32(self) -> int:
        return self._unpack("<i", 4, "i32")

    def i64(self) -> int:
        return self._unpack("<q", 8, "i64")

    def f32(self) -> float:
        return self._unpack("<f", 4, "f32")

    def f64(self) -> float:
        return self._unpack("<d", 8, "f64")

    def string(self, what: str = "string") -> str:
        length = self.u32(f"{what} length")
        data = self.take(length, what)
        try:
            return data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise PayloadError(f"bad UTF-8 in {what}: {exc}") from None

    def blob(self) -> bytes:
        return bytes(self.take(self.u32("blob length"), "blob"))

    def done(self) -> bool:
        return self.offset == len(self.data)


# --- schema embedding ------------------------------------------------------------


def _schema_closure(service: DictionaryService, table_classes: set[str]) -> list[str]:
    """Classes whose descriptions the payload must embed: every class with a
    record, plus every plain struct reachable through `class:` descriptors."""
    include: set[str] = set()
    pending = list(table_classes)
    while pending:
        name = pending.pop()
        if name in include:
            continue
        include.add(name)
        for attr in service.flattened_attributes(name):
            desc = attr.type
            while desc.kind == "sequence":
                desc = desc.element
            if desc.kind == "class" and desc.name not in include:
                pending.append(desc.name)
    return sorted(include)


def _write_schema(out: _Writer, service: DictionaryService, class_names: list[str]) -> None:
    out.u32(len(class_names))
    for name in class_names:
        cls = service.find(name)
        out.string(cls.qualified_name)
        out.u32(cls.class_id)
        out.u8(_CATEGORY_CODES[cls.category])
        attrs = service.flattened_attributes(name)
        out.u32(len(attrs))
        for attr in attrs:
            out.string(attr.name)
            out.string(render_typedesc(attr.type))
            out.u8((FLAG_PERSISTENT if attr.persistent else 0) | (FLAG_PRIVATE if attr.private else 0))
        rels = service.flattened_relationships(name)
        out.u32(len(rels))
        for rel in rels:
            out.string(rel.name)
            out.u8(1 if rel.many else 0)
            out.string(rel.target)
            out.string(rel.inverse)


def _read_schema(reader: _Reader) -> DictionaryService:
    count = reader.u32("schema class count")
    descriptors = []
    for _ in range(count):
        qualified_name = reader.string("class name")
        class_id = reader.u32("classId")
        category_code = reader.u8("category")
        if category_code not in _CATEGORY_NAMES:
            raise PayloadError(f"unknown category code {category_code}")
        attr_count = reader.u32("attribute count")
        attributes = []
        for _ in range(attr_count):
            name = reader.string("attribute name")
            type_text = reader.string("type descriptor")
            try:
                type_desc = parse_typedesc(type_text)
            except ValueError as exc:
                raise PayloadError(f"bad type descriptor {type_text!r}: {exc}") from None
            flags = reader.u8("attribute flags")
            attributes.append(
                AttributeDescriptor(
                    name=name,
                    type=type_desc,
                    type_text=type_text,
                    private=bool(flags & FLAG_PRIVATE),
                    persistent=bool(flags & FLAG_PERSISTENT),
                )
            )
        rel_count = reader.u32("relationship count")
        relationships = []
        for _ in range(rel_count):
            name = reader.string("relationship name")
            cardinality_code = reader.u8("cardinality")
            if cardinality_code not in (0, 1):
                raise PayloadError(f"unknown cardinality code {cardinality_code}")
            target = reader.string("relationship target")
            inverse = reader.string("relationship inverse")
            relationships.append(
                RelationshipDescriptor(
                    name=name,
                    cardinality="many" if cardinality_code else "one",
                    target=target,
                    inverse=inverse,
                )
            )
        descriptors.append(
            ClassDescriptor(
                qualified_name=qualified_name,
                class_id=class_id,
                category=_CATEGORY_NAMES[category_code],
                bases=(),
                attributes=tuple(attributes),
                relationships=tuple(relationships),
                methods=(),
            )
        )
    return DictionaryService(descriptors)


# --- values ----------------------------------------------------------------------


def _write_value(out: _Writer, desc: TypeDesc, value, service: DictionaryService) -> None:
    kind = desc.kind
    if kind == "boolean":
        out.u8(1 if value else 0)
    elif kind == "octet":
        out.u8(value)
    elif kind == "short":
        out.i16(value)
    elif kind == "long":
        out.i32(value)
    elif kind == "longlong":
        out.i64(value)
    elif kind == "float":
        out.f32(value)
    elif kind == "double":
        out.f64(value)
    elif kind == "string":
        out.string(value)
    elif kind == "enum":
        out.i32(value)
    elif kind == "sequence":
        out.u32(len(value))
        for item in value:
            _write_value(out, desc.element, item, service)
    elif kind == "extern":
        out.blob(value)
    else:
        assert kind == "class"
        for attr in service.flattened_attributes(desc.name):
            _write_value(out, attr.type, value[attr.name], service)


def _read_value(reader: _Reader, desc: TypeDesc, service: DictionaryService):
    kind = desc.kind
    if kind == "boolean":
        raw = reader.u8("boolean")
        if raw not in (0, 1):
            raise PayloadError(f"bad boolean byte {raw}")
        return raw == 1
    if kind == "octet":
        return reader.u8("octet")
    if kind == "short":
        return reader.i16()
    if kind == "long":
        return reader.i32()
    if kind == "longlong":
        return reader.i64()
    if kind == "float":
        return reader.f32()
    if kind == "double":
        return reader.f64()
    if kind == "string":
        return reader.string()
    if kind == "enum":
        ordinal = reader.i32()
        if ordinal < 0:
            raise PayloadError(f"negative enum ordinal {ordinal}")
        return ordinal
    if kind == "sequence":
        count = reader.u32("sequence length")
        return [_read_value(reader, desc.element, service) for _ in range(count)]
    if kind == "extern":
        return reader.blob()
    assert kind == "class"
    return {
        attr.name: _read_value(reader, attr.type, service)
        for attr in service.flattened_attributes(desc.name)
    }


# --- serialize -------------------------------------------------------------------


def _closure(store: TransientStore, roots: list[str]) -> list[str]:
    """Root keys in argument order, then their link closure breadth-first.
    Every reachable key must be recorded."""
    order: list[str] = []
    seen: set[str] = set()
    queue: deque[str] = deque()
    for key in roots:
        if store.retrieve(key) is None:
            raise StoreError(f"root key '{key}' is not recorded in the store")
        if key not in seen:
            seen.add(key)
            queue.append(key)
    while queue:
        key = queue.popleft()
        order.append(key)
        obj = store.retrieve(key)
        assert obj is not None
        for rel in store.service.flattened_relationships(obj.qualified_name):
            slot = obj.links[rel.name]
            partners = slot if isinstance(slot, list) else ([] if slot is None else [slot])
            for partner in partners:
                if partner in seen:
                    continue
                if store.retrieve(partner) is None:
                    raise StoreError(
                        f"'{key}' links to '{partner}', which is not recorded in the store"
                    )
                seen.add(partner)
                queue.append(partner)
    return order


def serialize(service: DictionaryService, roots: list[str], store: TransientStore) -> bytes:
    """Write the given roots and every object they reach into one
    self-describing payload.  Byte-deterministic for a given store state."""
    order = _closure(store, list(roots))
    index = {key: i for i, key in enumerate(order)}
    table_classes = {store.retrieve(key).qualified_name for key in order}  # type: ignore[union-attr]

    out = _Writer()
    out.raw(MAGIC)
    out.u16(VERSION)
    out.u16(0)
    _write_schema(out, service, _schema_closure(service, table_classes))
    out.u32(len(order))
    for key in order:
        obj = store.retrieve(key)
        assert obj is not None
        record = _Writer()
        record.u32(obj.class_id)
        record.string(key)
        for attr in service.flattened_attributes(obj.qualified_name):
            if attr.persistent:
                _write_value(record, attr.type, obj.fields[attr.name], service)
        for rel in service.flattened_relationships(obj.qualified_name):
            slot = obj.links[rel.name]
            if rel.many:
                assert isinstance(slot, list)
                record.u32(len(slot))
                for partner in slot:
                    record.u32(index[partner])
            else:
                record.u32(NO_LINK if slot is None else index[slot])
        body = record.getvalue()
        out.u32(len(body))
        out.raw(body)
    return out.getvalue()


# --- deserialize -----------------------------------------------------------------


def _read_header(reader: _Reader) -> DictionaryService:
    if reader.take(4, "magic") != MAGIC:
        raise PayloadError("bad magic: not a payload")
    version = reader.u16("version")
    if version != VERSION:
        raise PayloadError(f"unsupported payload version {version}")
    reader.u16("flags")
    return _read_schema(reader)


def deserialize(data: bytes) -> TransientStore:
    """Rebuild a transient store from payload bytes using only the embedded
    schema.  Transient attributes come back as zero values; links are
    restored symmetrically."""
    reader = _Reader(data)
    service = _read_header(reader)
    count = reader.u32("object count")
    keys: list[str] = []
    objects: list[DynamicObject] = []
    raw_links: list[dict[str, int | list[int] | None]] = []
    for position in range(count):
        record_len = reader.u32("record length")
        record_end = reader.offset + record_len
        if record_end > len(reader.data):
            raise PayloadError(f"truncated payload: record {position} overruns the data")
        class_id = reader.u32("record classId")
        try:
            cls = service.find(class_id)
        except Exception:
            raise PayloadError(f"record {position} names unknown classId 0x{class_id:08x}") from None
        key = reader.string("store key")
        obj = DynamicObject(cls, service)
        for attr in service.flattened_attributes(cls.qualified_name):
            if attr.persistent:
                obj.fields[attr.name] = _read_value(reader, attr.type, service)
        links: dict[str, int | list[int] | None] = {}
        for rel in service.flattened_relationships(cls.qualified_name):
            if rel.many:
                n = reader.u32("link count")
                links[rel.name] = [reader.u32("link index") for _ in range(n)]
            else:
                raw = reader.u32("link index")
                links[rel.name] = None if raw == NO_LINK else raw
        if reader.offset != record_end:
            raise PayloadError(
                f"record {position} length mismatch: declared {record_len}, "
                f"read {record_len + reader.offset - record_end}"
            )
        keys.append(key)
        objects.append(obj)
        raw_links.append(links)
    if not reader.done():
        raise PayloadError(f"trailing bytes after object table ({len(reader.data) - reader.offset})")

    def key_at(position: int) -> str:
        if not 0 <= position < len(keys):
            raise PayloadError(f"link index {position} out of range")
        return keys[position]

    store = TransientStore(service)
    for key, obj, links in zip(keys, objects, raw_links):
        for rel_name, slot in links.items():
            if isinstance(slot, list):
                obj.links[rel_name] = [key_at(i) for i in slot]
            elif slot is not None:
                obj.links[rel_name] = key_at(slot)
        store.record(key, obj)
    return store


# --- describe --------------------------------------------------------------------


@dataclass(frozen=True)
class ClassSummary:
    qualified_name: str
    class_id: int
    category: str
    field_names: tuple[str, ...]
    persistent_fields: tuple[str, ...]
    count: int


@dataclass(frozen=True)
class PayloadSummary:
    version: int
    classes: tuple[ClassSummary, ...]

    @property
    def counts(self) -> dict[str, int]:
        return {c.qualified_name: c.count for c in self.classes if c.count}

    @property
    def total_objects(self) -> int:
        return sum(c.count for c in self.classes)


def describe_payload(data: bytes) -> PayloadSummary:
    """Summarize a payload from its header and object table alone: classes,
    per-class instance counts, and field names.  No object is materialized;
    record bodies are skipped by their length prefix."""
    reader = _Reader(data)
    service = _read_header(reader)
    count = reader.u32("object count")
    tally: dict[int, int] = {}
    for position in range(count):
        record_len = reader.u32("record length")
        if record_len < 4:
            raise PayloadError(f"record {position} too short for a classId")
        body_start = reader.offset
        class_id = reader.u32("record classId")
        tally[class_id] = tally.get(class_id, 0) + 1
        reader.offset = body_start
        reader.take(record_len, f"record {position}")
    if not reader.done():
        raise PayloadError(f"trailing bytes after object table ({len(reader.data) - reader.offset})")
    summaries = []
    for name in sorted(service.by_name):
        cls = service.find(name)
        summaries.append(
            ClassSummary(
                qualified_name=cls.qualified_name,
                class_id=cls.class_id,
                category=cls.category,
                field_names=tuple(a.name for a in cls.attributes),
                persistent_fields=tuple(a.name for a in cls.attributes if a.persistent),
                count=tally.get(cls.class_id, 0),
            )
        )
    unknown = set(tally) - {s.class_id for s in summaries}
    if unknown:
        worst = sorted(unknown)[0]
        raise PayloadError(f"object table names classId 0x{worst:08x} missing from the schema")
    return PayloadSummary(version=VERSION, classes=tuple(summaries))
