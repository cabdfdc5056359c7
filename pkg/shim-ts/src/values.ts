/** Attribute values: the JavaScript representation of each descriptor kind,
 * zero values, and assignment checking.
 *
 * Wrong-kind assignments are rejected rather than coerced.  Integer kinds
 * accept integral numbers or bigints within range; `longlong` values are
 * carried as bigint (the only lossless carrier for the full 64-bit range)
 * while the narrower kinds come back as number.  `float` values round to
 * IEEE 754 binary32 on assignment, so reading back returns exactly what a
 * round trip through storage would.
 */

import type { Registry } from "./registry.js";
import type { TypeDesc } from "./typedesc.js";

export type ShimValue =
  | boolean
  | number
  | bigint
  | string
  | Uint8Array
  | ShimValue[]
  | ShimStruct;

export interface ShimStruct {
  [field: string]: ShimValue;
}

export class FieldTypeError extends TypeError {
  override name = "FieldTypeError";
}

const INT_RANGES: Record<string, readonly [bigint, bigint]> = {
  octet: [0n, 255n],
  short: [-32768n, 32767n],
  long: [-2147483648n, 2147483647n],
  longlong: [-9223372036854775808n, 9223372036854775807n],
};

/** Field maps use null prototypes so wire-supplied names such as
 * "__proto__" become plain own properties. */
export function emptyStruct(): ShimStruct {
  return Object.create(null) as ShimStruct;
}

export function zeroValue(registry: Registry, desc: TypeDesc): ShimValue {
  switch (desc.kind) {
    case "boolean":
      return false;
    case "octet":
    case "short":
    case "long":
    case "enum":
      return 0;
    case "longlong":
      return 0n;
    case "float":
    case "double":
      return 0;
    case "string":
      return "";
    case "sequence":
      return [];
    case "extern":
      return new Uint8Array(0);
    case "class": {
      const value = emptyStruct();
      for (const attr of registry.flattenedAttributes(desc.name)) {
        value[attr.name] = zeroValue(registry, attr.type);
      }
      return value;
    }
  }
}

/** Validate a value against a descriptor and return the normalized value to
 * store.  Throws FieldTypeError on any mismatch. */
export function checkValue(registry: Registry, desc: TypeDesc, value: unknown): ShimValue {
  if (desc.kind === "boolean") {
    if (typeof value !== "boolean") throw new FieldTypeError("expected boolean");
    return value;
  }
  if (desc.kind in INT_RANGES) {
    let big: bigint;
    if (typeof value === "bigint") {
      big = value;
    } else if (typeof value === "number" && Number.isInteger(value)) {
      big = BigInt(value);
    } else {
      throw new FieldTypeError(`expected ${desc.kind} integer`);
    }
    const [low, high] = INT_RANGES[desc.kind]!;
    if (big < low || big > high) {
      throw new FieldTypeError(`value ${big} out of range for ${desc.kind}`);
    }
    return desc.kind === "longlong" ? big : Number(big);
  }
  if (desc.kind === "float" || desc.kind === "double") {
    if (typeof value !== "number") throw new FieldTypeError(`expected ${desc.kind}`);
    return desc.kind === "float" ? Math.fround(value) : value;
  }
  if (desc.kind === "string") {
    if (typeof value !== "string") throw new FieldTypeError("expected string");
    return value;
  }
  if (desc.kind === "sequence") {
    if (!Array.isArray(value)) throw new FieldTypeError("expected sequence");
    return value.map((item) => checkValue(registry, desc.element, item));
  }
  if (desc.kind === "enum") {
    const enumerators = registry.enums.get(desc.name);
    if (typeof value === "string") {
      const ordinal = enumerators === undefined ? -1 : enumerators.indexOf(value);
      if (ordinal < 0) throw new FieldTypeError(`${value} is not an enumerator of ${desc.name}`);
      return ordinal;
    }
    if (
      typeof value !== "number" ||
      !Number.isInteger(value) ||
      value < 0 ||
      (enumerators !== undefined && value >= enumerators.length)
    ) {
      throw new FieldTypeError(`bad ordinal for enum ${desc.name}`);
    }
    return value;
  }
  if (desc.kind === "extern") {
    if (!(value instanceof Uint8Array)) throw new FieldTypeError("expected Uint8Array");
    return new Uint8Array(value);
  }
  if (desc.kind !== "class") {
    throw new FieldTypeError(`unknown type kind ${(desc as { kind: string }).kind}`);
  }
  if (typeof value !== "object" || value === null || Array.isArray(value)) {
    throw new FieldTypeError(`expected ${desc.name} field map`);
  }
  const members = registry.flattenedAttributes(desc.name);
  const expected = new Set(members.map((m) => m.name));
  for (const key of Object.keys(value)) {
    if (!expected.has(key)) throw new FieldTypeError(`${desc.name} has no field ${key}`);
  }
  const normalized = emptyStruct();
  const fields = value as Record<string, unknown>;
  for (const member of members) {
    if (!Object.hasOwn(fields, member.name)) {
      throw new FieldTypeError(`missing field ${member.name}`);
    }
    normalized[member.name] = checkValue(registry, member.type, fields[member.name]);
  }
  return normalized;
}
