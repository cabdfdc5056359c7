/** Dynamic objects: instances of registered classes with typed attribute
 * access by dotted path and named link slots.
 *
 * Objects are created zeroed.  Reads are unrestricted; writing a private
 * attribute (or through one) requires a privileged registry.  Link slots
 * hold store keys — `null` or a key for to-one relationships, an array of
 * keys for to-many — and are filled by the payload reader; this package
 * never writes payloads, so links are plain data here, not managed pairs.
 */

import type { Registry, ShimAttribute, ShimClass } from "./registry.js";
import { checkValue, emptyStruct, zeroValue, type ShimStruct, type ShimValue } from "./values.js";

export class UnknownFieldError extends Error {
  override name = "UnknownFieldError";
}

export class PrivateAccessError extends Error {
  override name = "PrivateAccessError";
}

export class NotInstantiableError extends Error {
  override name = "NotInstantiableError";
}

export type LinkSlot = string | string[] | null;

export interface LinkMap {
  [relationship: string]: LinkSlot;
}

interface WalkResult {
  container: ShimStruct;
  key: string;
  attr: ShimAttribute;
  traversed: ShimAttribute[];
}

export class ShimObject {
  readonly registry: Registry;
  readonly cls: ShimClass;
  /** Store key, set by the payload reader; null for fresh instances. */
  key: string | null;
  readonly fields: ShimStruct;
  readonly links: LinkMap;

  constructor(registry: Registry, cls: ShimClass, key: string | null = null) {
    this.registry = registry;
    this.cls = cls;
    this.key = key;
    this.fields = emptyStruct();
    this.links = Object.create(null) as LinkMap;
    for (const attr of registry.flattenedAttributes(cls.qualifiedName)) {
      this.fields[attr.name] = zeroValue(registry, attr.type);
    }
    for (const rel of registry.flattenedRelationships(cls.qualifiedName)) {
      this.links[rel.name] = rel.cardinality === "many" ? [] : null;
    }
  }

  get qualifiedName(): string {
    return this.cls.qualifiedName;
  }

  get classId(): number {
    return this.cls.classId;
  }

  private walk(path: string): WalkResult {
    const segments = path.split(".");
    let attrs = this.registry.flattenedAttributes(this.cls.qualifiedName);
    let container = this.fields;
    let className = this.cls.qualifiedName;
    const traversed: ShimAttribute[] = [];
    for (let i = 0; i < segments.length; i += 1) {
      const segment = segments[i]!;
      const attr = attrs.find((a) => a.name === segment);
      if (attr === undefined) {
        throw new UnknownFieldError(`${className} has no field ${segment} (path ${path})`);
      }
      traversed.push(attr);
      if (i === segments.length - 1) {
        return { container, key: segment, attr, traversed };
      }
      if (attr.type.kind !== "class") {
        throw new UnknownFieldError(`field ${segment} of ${className} is not a struct`);
      }
      container = container[segment] as ShimStruct;
      className = attr.type.name;
      attrs = this.registry.flattenedAttributes(className);
    }
    throw new Error("unreachable");
  }

  get(path: string): ShimValue {
    const { container, key } = this.walk(path);
    return container[key]!;
  }

  set(path: string, value: unknown): void {
    const { container, key, attr, traversed } = this.walk(path);
    if (!this.registry.privileged) {
      for (const seen of traversed) {
        if (seen.private) {
          throw new PrivateAccessError(
            `attribute ${seen.name} is private; writing requires privileged access`,
          );
        }
      }
    }
    container[key] = checkValue(this.registry, attr.type, value);
  }
}

/** Instantiate a registered class with zero-valued fields and empty links.
 * Opaque (extern) classes are not instantiable. */
export function createInstance(registry: Registry, name: string): ShimObject {
  const cls = registry.find(name);
  if (cls.category === "extern") {
    throw new NotInstantiableError(`${name} is an opaque type and cannot be instantiated`);
  }
  return new ShimObject(registry, cls);
}
