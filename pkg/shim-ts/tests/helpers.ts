/** Shared test plumbing: fixture paths, an independent classId oracle, and
 * a little-endian byte writer for crafting synthetic payloads. */

import { readdirSync, readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

const here = dirname(fileURLToPath(import.meta.url));

/** Repository root (this package sits one level below it). */
export const REPO_ROOT = join(here, "..", "..");
export const FIXTURES_DIR = join(REPO_ROOT, "tests", "fixtures");
export const CORPUS_GOLDENS_DIR = join(REPO_ROOT, "tests", "goldens", "corpus");
export const EMITTED_SHIM_PATH = join(CORPUS_GOLDENS_DIR, "shim", "adl_shim.mjs");

export function readText(path: string): string {
  return readFileSync(path, "utf-8");
}

export function readBytes(path: string): Uint8Array {
  return new Uint8Array(readFileSync(path));
}

/** Every payload fixture paired with its golden dump. */
export function fixturePayloadPairs(): { name: string; add: string; dump: string }[] {
  return readdirSync(FIXTURES_DIR)
    .filter((name) => name.endsWith(".add"))
    .sort()
    .map((name) => ({
      name,
      add: join(FIXTURES_DIR, name),
      dump: join(FIXTURES_DIR, name.replace(/\.add$/, ".dump.txt")),
    }));
}

/** Independent 32-bit FNV-1a over UTF-8 bytes — written from the published
 * parameters (offset basis 2166136261, prime 16777619), not imported from
 * the code under test. */
export function fnv1a32(text: string): number {
  const bytes = new TextEncoder().encode(text);
  let hash = 0x811c9dc5;
  for (const byte of bytes) {
    hash = Math.imul(hash ^ byte, 0x01000193) >>> 0;
  }
  return hash >>> 0;
}

/** Little-endian byte writer mirroring the wire conventions. */
export class ByteWriter {
  private chunks: number[] = [];

  raw(bytes: Iterable<number>): this {
    for (const b of bytes) this.chunks.push(b & 0xff);
    return this;
  }

  ascii(text: string): this {
    for (let i = 0; i < text.length; i += 1) this.chunks.push(text.charCodeAt(i) & 0xff);
    return this;
  }

  u8(value: number): this {
    this.chunks.push(value & 0xff);
    return this;
  }

  u16(value: number): this {
    return this.u8(value).u8(value >>> 8);
  }

  u32(value: number): this {
    return this.u8(value).u8(value >>> 8).u8(value >>> 16).u8(value >>> 24);
  }

  i32(value: number): this {
    return this.u32(value >>> 0);
  }

  /** u32 length prefix + UTF-8 bytes. */
  string(text: string): this {
    const bytes = new TextEncoder().encode(text);
    this.u32(bytes.length);
    return this.raw(bytes);
  }

  bytes(): Uint8Array {
    return new Uint8Array(this.chunks);
  }
}

/** Payload header: magic, version 1, flags 0. */
export function header(writer = new ByteWriter()): ByteWriter {
  return writer.ascii("ADD1").u16(1).u16(0);
}

/** A complete payload with an empty schema and empty object table. */
export function emptyPayload(): Uint8Array {
  return header().u32(0).u32(0).bytes();
}

/** Schema entry for one flattened class with no attributes/relationships
 * unless appended by the caller through the returned writer. */
export interface SchemaAttribute {
  name: string;
  type: string;
  flags: number;
}

export interface SchemaRelationship {
  name: string;
  cardinality: number;
  target: string;
  inverse: string;
}

export function schemaClass(
  writer: ByteWriter,
  qualifiedName: string,
  classId: number,
  category: number,
  attributes: SchemaAttribute[] = [],
  relationships: SchemaRelationship[] = [],
): ByteWriter {
  writer.string(qualifiedName).u32(classId).u8(category);
  writer.u32(attributes.length);
  for (const attr of attributes) {
    writer.string(attr.name).string(attr.type).u8(attr.flags);
  }
  writer.u32(relationships.length);
  for (const rel of relationships) {
    writer.string(rel.name).u8(rel.cardinality).string(rel.target).string(rel.inverse);
  }
  return writer;
}

/** Wrap a record body in its length prefix. */
export function record(writer: ByteWriter, body: ByteWriter): ByteWriter {
  const bytes = body.bytes();
  writer.u32(bytes.length);
  return writer.raw(bytes);
}

/** Deep equality that understands bigint and Uint8Array, for comparing
 * values produced by this package and by the reference implementation. */
export function sameValue(a: unknown, b: unknown): boolean {
  if (typeof a === "bigint" || typeof b === "bigint") return a === b;
  if (a instanceof Uint8Array || b instanceof Uint8Array) {
    if (!(a instanceof Uint8Array) || !(b instanceof Uint8Array)) return false;
    if (a.length !== b.length) return false;
    for (let i = 0; i < a.length; i += 1) if (a[i] !== b[i]) return false;
    return true;
  }
  if (Array.isArray(a) || Array.isArray(b)) {
    if (!Array.isArray(a) || !Array.isArray(b) || a.length !== b.length) return false;
    return a.every((item, i) => sameValue(item, b[i]));
  }
  if (typeof a === "object" && a !== null && typeof b === "object" && b !== null) {
    const keysA = Object.keys(a).sort();
    const keysB = Object.keys(b).sort();
    if (!sameValue(keysA, keysB)) return false;
    return keysA.every((key) =>
      sameValue((a as Record<string, unknown>)[key], (b as Record<string, unknown>)[key]),
    );
  }
  return Object.is(a, b);
}
