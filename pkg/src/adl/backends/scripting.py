"""Scripting back end: emits the reflection manifest document and, on
request, a self-contained ECMAScript module giving scripting-side code
dynamic, type-checked attribute access to described objects.

The shim is static text: all model knowledge reaches it through the
manifest it is handed at load time, so the module's bytes never vary with
the model.
"""

from __future__ import annotations

from .. import manifest
from ..metamodel import MetaModel
from .fileset import EmitterConfig, FileSet

MANIFEST_PATH = "reflection.manifest.json"
SHIM_PATH = "shim/adl_shim.mjs"


def emit_manifest(model: MetaModel, config: EmitterConfig) -> FileSet:
    """FileSet holding the canonical manifest and, when
    config.scripting_shim is set, the scripting shim module."""
    if not model.resolved:
        raise ValueError("model must be resolved before emission")
    files = FileSet()
    files.add(MANIFEST_PATH, manifest.render_manifest(model))
    if config.scripting_shim:
        banner = "".join(f"// {line}".rstrip() + "\n" for line in config.header_banner.splitlines())
        files.add(SHIM_PATH, banner + _SHIM_MODULE)
    return files


_SHIM_MODULE = """\
// Dynamic, manifest-driven access to described objects: load a reflection
// manifest, instantiate classes by name, and get/set attributes by dotted
// path with the same type checks the generating toolchain applies.

const INT_RANGES = {
  octet: [0n, 255n],
  short: [-32768n, 32767n],
  long: [-2147483648n, 2147483647n],
  longlong: [-9223372036854775808n, 9223372036854775807n],
};

const PRIMITIVES = new Set([
  "boolean", "octet", "short", "long", "longlong", "float", "double", "string",
]);

export function parseTypeDescriptor(text) {
  const [desc, rest] = parseDesc(text);
  if (rest !== "") {
    throw new Error(`trailing text in type descriptor: ${JSON.stringify(text)}`);
  }
  return desc;
}

function parseDesc(text) {
  if (text.startsWith("sequence<")) {
    const [element, rest] = parseDesc(text.slice("sequence<".length));
    if (!rest.startsWith(">")) {
      throw new Error(`unterminated sequence in type descriptor: ${JSON.stringify(text)}`);
    }
    return [{ kind: "sequence", element }, rest.slice(1)];
  }
  for (const prefix of ["enum:", "class:", "extern:"]) {
    if (text.startsWith(prefix)) {
      const body = text.slice(prefix.length);
      let end = body.indexOf(">");
      if (end < 0) end = body.length;
      const name = body.slice(0, end);
      if (name === "") throw new Error(`empty name in type descriptor: ${JSON.stringify(text)}`);
      return [{ kind: prefix.slice(0, -1), name }, body.slice(end)];
    }
  }
  // "longlong" shares a prefix with "long"; try longer names first
  const names = [...PRIMITIVES].sort((a, b) => b.length - a.length);
  for (const name of names) {
    if (text.startsWith(name)) {
      return [{ kind: name }, text.slice(name.length)];
    }
  }
  throw new Error(`bad type descriptor: ${JSON.stringify(text)}`);
}

export function loadManifest(text, options = {}) {
  let doc;
  try {
    doc = JSON.parse(text);
  } catch (err) {
    throw new Error(`manifest is not valid JSON: ${err.message}`);
  }
  if (typeof doc !== "object" || doc === null || doc.schemaVersion !== 1) {
    throw new Error("unsupported or missing manifest schemaVersion");
  }
  const registry = {
    classes: new Map(),
    byId: new Map(),
    enums: new Map(),
    privileged: Boolean(options.privileged),
  };
  for (const entry of doc.classes) {
    if (registry.classes.has(entry.qualifiedName)) {
      throw new Error(`duplicate class ${entry.qualifiedName}`);
    }
    if (registry.byId.has(entry.classId)) {
      throw new Error(`duplicate classId ${entry.classId}`);
    }
    const cls = {
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
      methods: entry.methods.map((m) => ({ ...m })),
    };
    registry.classes.set(cls.qualifiedName, cls);
    registry.byId.set(cls.classId, cls);
  }
  for (const entry of doc.enums) {
    registry.enums.set(entry.qualifiedName, [...entry.enumerators]);
  }
  return registry;
}

export function linearization(registry, name) {
  const seen = new Set();
  const order = [];
  const visit = (qualified) => {
    if (seen.has(qualified)) return;
    seen.add(qualified);
    const cls = registry.classes.get(qualified);
    if (cls === undefined) throw new Error(`unknown class ${qualified}`);
    for (const base of cls.bases) visit(base);
    order.push(cls);
  };
  visit(name);
  return order;
}

export function flattenedAttributes(registry, name) {
  return linearization(registry, name).flatMap((cls) => cls.attributes);
}

export function flattenedRelationships(registry, name) {
  return linearization(registry, name).flatMap((cls) => cls.relationships);
}

export function zeroValue(registry, desc) {
  switch (desc.kind) {
    case "boolean": return false;
    case "octet": case "short": case "long": case "enum": return 0;
    case "longlong": return 0n;
    case "float": case "double": return 0;
    case "string": return "";
    case "sequence": return [];
    case "extern": return new Uint8Array(0);
    case "class": {
      const value = {};
      for (const attr of flattenedAttributes(registry, desc.name)) {
        value[attr.name] = zeroValue(registry, attr.type);
      }
      return value;
    }
    default:
      throw new Error(`unknown type kind ${desc.kind}`);
  }
}

export function checkValue(registry, desc, value) {
  const kind = desc.kind;
  if (kind === "boolean") {
    if (typeof value !== "boolean") throw new TypeError("expected boolean");
    return value;
  }
  if (kind in INT_RANGES) {
    let big;
    if (typeof value === "bigint") {
      big = value;
    } else if (typeof value === "number" && Number.isInteger(value)) {
      big = BigInt(value);
    } else {
      throw new TypeError(`expected ${kind} integer`);
    }
    const [low, high] = INT_RANGES[kind];
    if (big < low || big > high) throw new TypeError(`value ${big} out of range for ${kind}`);
    return kind === "longlong" ? big : Number(big);
  }
  if (kind === "float" || kind === "double") {
    if (typeof value !== "number") throw new TypeError(`expected ${kind}`);
    return kind === "float" ? Math.fround(value) : value;
  }
  if (kind === "string") {
    if (typeof value !== "string") throw new TypeError("expected string");
    return value;
  }
  if (kind === "sequence") {
    if (!Array.isArray(value)) throw new TypeError("expected sequence");
    return value.map((item) => checkValue(registry, desc.element, item));
  }
  if (kind === "enum") {
    const enumerators = registry.enums.get(desc.name);
    if (typeof value === "string") {
      const ordinal = enumerators === undefined ? -1 : enumerators.indexOf(value);
      if (ordinal < 0) throw new TypeError(`${value} is not an enumerator of ${desc.name}`);
      return ordinal;
    }
    if (!Number.isInteger(value) || value < 0 ||
        (enumerators !== undefined && value >= enumerators.length)) {
      throw new TypeError(`bad ordinal for enum ${desc.name}`);
    }
    return value;
  }
  if (kind === "extern") {
    if (!(value instanceof Uint8Array)) throw new TypeError("expected Uint8Array");
    return new Uint8Array(value);
  }
  if (kind === "class") {
    if (typeof value !== "object" || value === null || Array.isArray(value)) {
      throw new TypeError(`expected ${desc.name} field map`);
    }
    const members = flattenedAttributes(registry, desc.name);
    const expected = new Set(members.map((m) => m.name));
    for (const key of Object.keys(value)) {
      if (!expected.has(key)) throw new TypeError(`${desc.name} has no field ${key}`);
    }
    const normalized = {};
    for (const member of members) {
      if (!(member.name in value)) throw new TypeError(`missing field ${member.name}`);
      normalized[member.name] = checkValue(registry, member.type, value[member.name]);
    }
    return normalized;
  }
  throw new Error(`unknown type kind ${kind}`);
}

export class ShimObject {
  constructor(registry, cls) {
    this.registry = registry;
    this.cls = cls;
    this.fields = {};
    this.links = {};
    for (const attr of flattenedAttributes(registry, cls.qualifiedName)) {
      this.fields[attr.name] = zeroValue(registry, attr.type);
    }
    for (const rel of flattenedRelationships(registry, cls.qualifiedName)) {
      this.links[rel.name] = rel.cardinality === "many" ? [] : null;
    }
  }

  walk(path) {
    const segments = path.split(".");
    let attrs = flattenedAttributes(this.registry, this.cls.qualifiedName);
    let container = this.fields;
    let className = this.cls.qualifiedName;
    const traversed = [];
    for (let i = 0; i < segments.length; i += 1) {
      const attr = attrs.find((a) => a.name === segments[i]);
      if (attr === undefined) {
        throw new Error(`${className} has no field ${segments[i]} (path ${path})`);
      }
      traversed.push(attr);
      if (i === segments.length - 1) {
        return { container, key: segments[i], attr, traversed };
      }
      if (attr.type.kind !== "class") {
        throw new Error(`field ${segments[i]} of ${className} is not a struct`);
      }
      container = container[segments[i]];
      className = attr.type.name;
      attrs = flattenedAttributes(this.registry, className);
    }
    throw new Error("unreachable");
  }

  get(path) {
    const { container, key } = this.walk(path);
    return container[key];
  }

  set(path, value) {
    const { container, key, attr, traversed } = this.walk(path);
    if (!this.registry.privileged) {
      for (const seen of traversed) {
        if (seen.private) {
          throw new Error(`attribute ${seen.name} is private; writing requires privileged access`);
        }
      }
    }
    container[key] = checkValue(this.registry, attr.type, value);
  }
}

export function createInstance(registry, name) {
  const cls = registry.classes.get(name);
  if (cls === undefined) throw new Error(`unknown class ${name}`);
  if (cls.category === "extern") throw new Error(`${name} is an opaque type and cannot be instantiated`);
  return new ShimObject(registry, cls);
}
"""
