/** Payload reader for the self-describing binary object format.
 *
 * Layout (all integers little-endian):
 *
 *     magic "ADD1" | version u16 (= 1) | flags u16 (= 0)
 *     schema: u32 class count, then per class
 *         name, classId u32, category u8,
 *         u32 × (attr name, type descriptor, flags u8),
 *         u32 × (rel name, cardinality u8, target, inverse)
 *     object table: u32 record count, then per record
 *         u32 record length | u32 classId | store key
 *         persistent values in schema order | link slots in schema order
 *
 * Strings are u32 length + UTF-8 bytes.  The embedded schema is already
 * flattened, so the registry it yields has empty base lists.  Transient
 * attributes appear in the schema but contribute no record bytes; they come
 * back as zero values.  Link slots hold object-table indices on the wire
 * (0xFFFFFFFF for an unset to-one slot) and are resolved to store keys.
 *
 * This module only reads.  Writing stays with the generating toolchain so
 * the wire format has a single producer.
 */

import { ShimObject } from "./objects.js";
import { Registry, type RegistryOptions, type ShimAttribute, type ShimClass, type ShimRelationship } from "./registry.js";
import { parseTypeDescriptor, type TypeDesc } from "./typedesc.js";
import type { ShimStruct, ShimValue } from "./values.js";
import { emptyStruct } from "./values.js";

export class PayloadError extends Error {
  override name = "PayloadError";
}

export const MAGIC = new Uint8Array([0x41, 0x44, 0x44, 0x31]); // "ADD1"
export const VERSION = 1;
export const NO_LINK = 0xffffffff;

export const FLAG_PERSISTENT = 0x01;
export const FLAG_PRIVATE = 0x02;

const CATEGORY_NAMES: Record<number, string> = {
  0: "plain",
  1: "DataObject",
  2: "ContainedObject",
  3: "CollectionObject",
  4: "extern",
};

const utf8 = new TextDecoder("utf-8", { fatal: true });

class Reader {
  readonly data: Uint8Array;
  private readonly view: DataView;
  offset = 0;

  constructor(data: Uint8Array) {
    this.data = data;
    this.view = new DataView(data.buffer, data.byteOffset, data.byteLength);
  }

  private need(count: number, what: string): number {
    const start = this.offset;
    if (start + count > this.data.length) {
      throw new PayloadError(`truncated payload: expected ${count} bytes of ${what}`);
    }
    this.offset = start + count;
    return start;
  }

  take(count: number, what: string): Uint8Array {
    const start = this.need(count, what);
    return this.data.subarray(start, start + count);
  }

  u8(what = "u8"): number {
    return this.view.getUint8(this.need(1, what));
  }

  u16(what = "u16"): number {
    return this.view.getUint16(this.need(2, what), true);
  }

  u32(what = "u32"): number {
    return this.view.getUint32(this.need(4, what), true);
  }

  i16(): number {
    return this.view.getInt16(this.need(2, "i16"), true);
  }

  i32(): number {
    return this.view.getInt32(this.need(4, "i32"), true);
  }

  i64(): bigint {
    return this.view.getBigInt64(this.need(8, "i64"), true);
  }

  f32(): number {
    return this.view.getFloat32(this.need(4, "f32"), true);
  }

  f64(): number {
    return this.view.getFloat64(this.need(8, "f64"), true);
  }

  string(what = "string"): string {
    const length = this.u32(`${what} length`);
    const bytes = this.take(length, what);
    try {
      return utf8.decode(bytes);
    } catch (err) {
      throw new PayloadError(`bad UTF-8 in ${what}: ${(err as Error).message}`);
    }
  }

  blob(): Uint8Array {
    const length = this.u32("blob length");
    return new Uint8Array(this.take(length, "blob"));
  }

  done(): boolean {
    return this.offset === this.data.length;
  }
}

function readSchema(reader: Reader, options: RegistryOptions): Registry {
  const count = reader.u32("schema class count");
  const classes: ShimClass[] = [];
  for (let i = 0; i < count; i += 1) {
    const qualifiedName = reader.string("class name");
    const classId = reader.u32("classId");
    const categoryCode = reader.u8("category");
    const category = CATEGORY_NAMES[categoryCode];
    if (category === undefined) {
      throw new PayloadError(`unknown category code ${categoryCode}`);
    }
    const attrCount = reader.u32("attribute count");
    const attributes: ShimAttribute[] = [];
    for (let a = 0; a < attrCount; a += 1) {
      const name = reader.string("attribute name");
      const typeText = reader.string("type descriptor");
      let type: TypeDesc;
      try {
        type = parseTypeDescriptor(typeText);
      } catch (err) {
        throw new PayloadError(
          `bad type descriptor ${JSON.stringify(typeText)}: ${(err as Error).message}`,
        );
      }
      const flags = reader.u8("attribute flags");
      attributes.push({
        name,
        type,
        typeText,
        private: (flags & FLAG_PRIVATE) !== 0,
        persistent: (flags & FLAG_PERSISTENT) !== 0,
      });
    }
    const relCount = reader.u32("relationship count");
    const relationships: ShimRelationship[] = [];
    for (let r = 0; r < relCount; r += 1) {
      const name = reader.string("relationship name");
      const cardinalityCode = reader.u8("cardinality");
      if (cardinalityCode !== 0 && cardinalityCode !== 1) {
        throw new PayloadError(`unknown cardinality code ${cardinalityCode}`);
      }
      const target = reader.string("relationship target");
      const inverse = reader.string("relationship inverse");
      relationships.push({
        name,
        cardinality: cardinalityCode === 1 ? "many" : "one",
        target,
        inverse,
      });
    }
    classes.push({ qualifiedName, classId, category, bases: [], attributes, relationships });
  }
  return new Registry(classes, [], options);
}

function readValue(reader: Reader, desc: TypeDesc, registry: Registry): ShimValue {
  if (desc.kind === "boolean") {
    const raw = reader.u8("boolean");
    if (raw !== 0 && raw !== 1) throw new PayloadError(`bad boolean byte ${raw}`);
    return raw === 1;
  }
  if (desc.kind === "octet") return reader.u8("octet");
  if (desc.kind === "short") return reader.i16();
  if (desc.kind === "long") return reader.i32();
  if (desc.kind === "longlong") return reader.i64();
  if (desc.kind === "float") return reader.f32();
  if (desc.kind === "double") return reader.f64();
  if (desc.kind === "string") return reader.string();
  if (desc.kind === "enum") {
    const ordinal = reader.i32();
    if (ordinal < 0) throw new PayloadError(`negative enum ordinal ${ordinal}`);
    return ordinal;
  }
  if (desc.kind === "sequence") {
    const count = reader.u32("sequence length");
    const items: ShimValue[] = [];
    for (let i = 0; i < count; i += 1) items.push(readValue(reader, desc.element, registry));
    return items;
  }
  if (desc.kind === "extern") return reader.blob();
  if (desc.kind !== "class") {
    throw new PayloadError(`unknown type kind ${(desc as { kind: string }).kind}`);
  }
  // Every flattened member is inline, transient or not.
  const value: ShimStruct = emptyStruct();
  for (const attr of registry.flattenedAttributes(desc.name)) {
    value[attr.name] = readValue(reader, attr.type, registry);
  }
  return value;
}

function readHeader(reader: Reader, options: RegistryOptions): { version: number; registry: Registry } {
  const magic = reader.take(4, "magic");
  for (let i = 0; i < 4; i += 1) {
    if (magic[i] !== MAGIC[i]) throw new PayloadError("bad magic: not a payload");
  }
  const version = reader.u16("version");
  if (version !== VERSION) throw new PayloadError(`unsupported payload version ${version}`);
  reader.u16("flags");
  return { version, registry: readSchema(reader, options) };
}

/** A fully materialized payload: its registry, and the decoded objects in
 * object-table order, also indexed by store key. */
export interface PayloadStore {
  readonly version: number;
  readonly registry: Registry;
  readonly objects: readonly ShimObject[];
  readonly byKey: ReadonlyMap<string, ShimObject>;
}

type RawLinks = Record<string, number | number[] | null>;

/** Decode one payload.  Persistent attributes come from the wire, transient
 * ones are zeroed, and link slots are resolved to store keys on both sides. */
export function readPayload(data: Uint8Array, options: RegistryOptions = {}): PayloadStore {
  const reader = new Reader(data);
  const { version, registry } = readHeader(reader, options);
  const count = reader.u32("object count");
  const keys: string[] = [];
  const objects: ShimObject[] = [];
  const rawLinks: RawLinks[] = [];
  for (let position = 0; position < count; position += 1) {
    const recordLen = reader.u32("record length");
    const recordEnd = reader.offset + recordLen;
    if (recordEnd > reader.data.length) {
      throw new PayloadError(`truncated payload: record ${position} overruns the data`);
    }
    const classId = reader.u32("record classId");
    const cls = registry.byId.get(classId);
    if (cls === undefined) {
      throw new PayloadError(
        `record ${position} names unknown classId 0x${classId.toString(16).padStart(8, "0")}`,
      );
    }
    const key = reader.string("store key");
    const obj = new ShimObject(registry, cls, key);
    for (const attr of registry.flattenedAttributes(cls.qualifiedName)) {
      if (attr.persistent) {
        obj.fields[attr.name] = readValue(reader, attr.type, registry);
      }
    }
    const links: RawLinks = {};
    for (const rel of registry.flattenedRelationships(cls.qualifiedName)) {
      if (rel.cardinality === "many") {
        const n = reader.u32("link count");
        const indices: number[] = [];
        for (let i = 0; i < n; i += 1) indices.push(reader.u32("link index"));
        links[rel.name] = indices;
      } else {
        const raw = reader.u32("link index");
        links[rel.name] = raw === NO_LINK ? null : raw;
      }
    }
    if (reader.offset !== recordEnd) {
      throw new PayloadError(
        `record ${position} length mismatch: declared ${recordLen}, ` +
          `read ${recordLen + reader.offset - recordEnd}`,
      );
    }
    keys.push(key);
    objects.push(obj);
    rawLinks.push(links);
  }
  if (!reader.done()) {
    throw new PayloadError(`trailing bytes after object table (${reader.data.length - reader.offset})`);
  }

  const keyAt = (position: number): string => {
    if (position < 0 || position >= keys.length) {
      throw new PayloadError(`link index ${position} out of range`);
    }
    return keys[position]!;
  };

  const byKey = new Map<string, ShimObject>();
  for (let i = 0; i < objects.length; i += 1) {
    const obj = objects[i]!;
    const links = rawLinks[i]!;
    for (const [relName, slot] of Object.entries(links)) {
      if (Array.isArray(slot)) {
        obj.links[relName] = slot.map(keyAt);
      } else if (slot !== null) {
        obj.links[relName] = keyAt(slot);
      }
    }
    const key = keys[i]!;
    if (key === "") throw new PayloadError("store key must be a non-empty string");
    if (byKey.has(key)) throw new PayloadError(`key '${key}' is already recorded`);
    byKey.set(key, obj);
  }
  return { version, registry, objects, byKey };
}
