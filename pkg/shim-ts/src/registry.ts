/** Class registry: the in-memory reflection database.
 *
 * A registry is built either from a reflection manifest (JSON, with base
 * classes recorded and inheritance left to the consumer) or from the schema
 * embedded in a payload (already flattened, bases empty).  Lookup is by
 * qualified name or by numeric classId.
 */

import { parseTypeDescriptor, type TypeDesc } from "./typedesc.js";

export class ManifestError extends Error {
  override name = "ManifestError";
}

export interface ShimAttribute {
  readonly name: string;
  readonly type: TypeDesc;
  readonly typeText: string;
  readonly private: boolean;
  readonly persistent: boolean;
}

export interface ShimRelationship {
  readonly name: string;
  readonly cardinality: "one" | "many";
  readonly target: string;
  readonly inverse: string;
}

export interface ShimClass {
  readonly qualifiedName: string;
  readonly classId: number;
  readonly category: string;
  readonly bases: readonly string[];
  readonly attributes: readonly ShimAttribute[];
  readonly relationships: readonly ShimRelationship[];
}

export interface RegistryOptions {
  /** Allow writes to private attributes through dynamic objects. */
  privileged?: boolean;
}

export class Registry {
  readonly classes = new Map<string, ShimClass>();
  readonly byId = new Map<number, ShimClass>();
  readonly enums = new Map<string, readonly string[]>();
  readonly privileged: boolean;

  constructor(
    classes: Iterable<ShimClass>,
    enums: Iterable<readonly [string, readonly string[]]> = [],
    options: RegistryOptions = {},
  ) {
    this.privileged = Boolean(options.privileged);
    for (const cls of classes) {
      if (this.classes.has(cls.qualifiedName)) {
        throw new ManifestError(`duplicate class ${cls.qualifiedName}`);
      }
      if (this.byId.has(cls.classId)) {
        throw new ManifestError(`duplicate classId ${cls.classId}`);
      }
      this.classes.set(cls.qualifiedName, cls);
      this.byId.set(cls.classId, cls);
    }
    for (const [name, enumerators] of enums) {
      this.enums.set(name, [...enumerators]);
    }
  }

  get size(): number {
    return this.classes.size;
  }

  find(name: string): ShimClass {
    const cls = this.classes.get(name);
    if (cls === undefined) throw new ManifestError(`unknown class ${name}`);
    return cls;
  }

  findById(classId: number): ShimClass {
    const cls = this.byId.get(classId);
    if (cls === undefined) {
      throw new ManifestError(`unknown classId 0x${classId.toString(16).padStart(8, "0")}`);
    }
    return cls;
  }

  /** Base classes before derived ones, depth-first, first visit wins. */
  linearization(name: string): ShimClass[] {
    const seen = new Set<string>();
    const order: ShimClass[] = [];
    const visit = (qualified: string): void => {
      if (seen.has(qualified)) return;
      seen.add(qualified);
      const cls = this.classes.get(qualified);
      if (cls === undefined) throw new ManifestError(`unknown class ${qualified}`);
      for (const base of cls.bases) visit(base);
      order.push(cls);
    };
    visit(name);
    return order;
  }

  flattenedAttributes(name: string): ShimAttribute[] {
    return this.linearization(name).flatMap((cls) => [...cls.attributes]);
  }

  flattenedRelationships(name: string): ShimRelationship[] {
    return this.linearization(name).flatMap((cls) => [...cls.relationships]);
  }
}

interface ManifestAttribute {
  name: string;
  type: string;
  visibility: string;
  persistent: boolean;
}

interface ManifestRelationship {
  name: string;
  cardinality: "one" | "many";
  target: string;
  inverse: string;
}

interface ManifestClass {
  qualifiedName: string;
  classId: number;
  category: string;
  bases: string[];
  attributes: ManifestAttribute[];
  relationships: ManifestRelationship[];
}

interface ManifestDocument {
  schemaVersion: number;
  classes: ManifestClass[];
  enums: { qualifiedName: string; enumerators: string[] }[];
}

/** Build a registry from reflection-manifest JSON text. */
export function loadManifest(text: string, options: RegistryOptions = {}): Registry {
  let doc: ManifestDocument;
  try {
    doc = JSON.parse(text) as ManifestDocument;
  } catch (err) {
    throw new ManifestError(`manifest is not valid JSON: ${(err as Error).message}`);
  }
  if (typeof doc !== "object" || doc === null || doc.schemaVersion !== 1) {
    throw new ManifestError("unsupported or missing manifest schemaVersion");
  }
  const classes: ShimClass[] = doc.classes.map((entry) => ({
    qualifiedName: entry.qualifiedName,
    classId: entry.classId,
    category: entry.category,
    bases: [...entry.bases],
    attributes: entry.attributes.map((a) => ({
      name: a.name,
      type: parseTypeDescriptor(a.type),
      typeText: a.type,
      private: a.visibility === "private",
      persistent: a.persistent,
    })),
    relationships: entry.relationships.map((r) => ({ ...r })),
  }));
  const enums: [string, string[]][] = doc.enums.map((e) => [e.qualifiedName, e.enumerators]);
  return new Registry(classes, enums, options);
}
