/** Canonical text dump, byte-identical across language runtimes.
 *
 * One line per field and per relationship, sorted:
 *
 *     <qualifiedName>.<key>.<field>=<value>
 *     <qualifiedName>.<key>.@<relationship>=<key | null | [k1,k2]>
 *
 * Every encoding avoids representations that differ between runtimes:
 * floats print as the hex of their IEEE 754 bit pattern (big-endian,
 * `f32:` 8 digits / `f64:` 16) instead of decimal text; strings are
 * JSON-quoted; enums print as ordinals; sequences as comma-joined
 * brackets; embedded structs as `{name=value;...}` in field order; opaque
 * payloads as `hex:` plus lowercase hex.  Lines sort by code point (not by
 * UTF-16 code unit, which would order some astral characters differently).
 */

import type { PayloadStore } from "./payload.js";
import type { Registry } from "./registry.js";
import type { TypeDesc } from "./typedesc.js";
import type { ShimStruct, ShimValue } from "./values.js";

const floatBits = new DataView(new ArrayBuffer(8));

function f32Hex(value: number): string {
  floatBits.setFloat32(0, value, false);
  let out = "";
  for (let i = 0; i < 4; i += 1) out += floatBits.getUint8(i).toString(16).padStart(2, "0");
  return out;
}

function f64Hex(value: number): string {
  floatBits.setFloat64(0, value, false);
  let out = "";
  for (let i = 0; i < 8; i += 1) out += floatBits.getUint8(i).toString(16).padStart(2, "0");
  return out;
}

function bytesHex(value: Uint8Array): string {
  let out = "";
  for (const byte of value) out += byte.toString(16).padStart(2, "0");
  return out;
}

/** Compare by Unicode code point, the order `sort()` uses in languages
 * whose strings are code-point sequences. */
export function compareCodePoints(a: string, b: string): number {
  let i = 0;
  let j = 0;
  while (i < a.length && j < b.length) {
    const ca = a.codePointAt(i)!;
    const cb = b.codePointAt(j)!;
    if (ca !== cb) return ca - cb;
    i += ca > 0xffff ? 2 : 1;
    j += cb > 0xffff ? 2 : 1;
  }
  return (a.length - i) - (b.length - j);
}

export function encodeValue(registry: Registry, desc: TypeDesc, value: ShimValue): string {
  if (desc.kind === "boolean") return value ? "true" : "false";
  if (desc.kind === "octet" || desc.kind === "short" || desc.kind === "long" || desc.kind === "longlong" || desc.kind === "enum") {
    return String(value);
  }
  if (desc.kind === "float") return "f32:" + f32Hex(value as number);
  if (desc.kind === "double") return "f64:" + f64Hex(value as number);
  if (desc.kind === "string") return JSON.stringify(value);
  if (desc.kind === "sequence") {
    const items = (value as ShimValue[]).map((item) => encodeValue(registry, desc.element, item));
    return "[" + items.join(",") + "]";
  }
  if (desc.kind === "extern") return "hex:" + bytesHex(value as Uint8Array);
  if (desc.kind !== "class") {
    throw new Error(`unknown type kind ${(desc as { kind: string }).kind}`);
  }
  const fields = value as ShimStruct;
  const parts = registry
    .flattenedAttributes(desc.name)
    .map((attr) => `${attr.name}=${encodeValue(registry, attr.type, fields[attr.name]!)}`);
  return "{" + parts.join(";") + "}";
}

/** The store's full observable state as sorted text, one line per field and
 * per relationship, with a trailing newline when non-empty. */
export function canonicalDump(store: PayloadStore): string {
  const registry = store.registry;
  const lines: string[] = [];
  for (const obj of store.objects) {
    const prefix = `${obj.qualifiedName}.${obj.key}`;
    for (const attr of registry.flattenedAttributes(obj.qualifiedName)) {
      const encoded = encodeValue(registry, attr.type, obj.fields[attr.name]!);
      lines.push(`${prefix}.${attr.name}=${encoded}`);
    }
    for (const rel of registry.flattenedRelationships(obj.qualifiedName)) {
      const slot = obj.links[rel.name]!;
      let encoded: string;
      if (Array.isArray(slot)) {
        encoded = "[" + slot.join(",") + "]";
      } else {
        encoded = slot === null ? "null" : slot;
      }
      lines.push(`${prefix}.@${rel.name}=${encoded}`);
    }
  }
  lines.sort(compareCodePoints);
  return lines.join("\n") + (lines.length > 0 ? "\n" : "");
}
