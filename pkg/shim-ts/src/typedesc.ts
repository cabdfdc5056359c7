/** Type descriptors: the small grammar that manifests and payload schemas
 * use to describe attribute types.
 *
 *     boolean octet short long longlong float double string
 *     sequence<D>
 *     enum:Qualified::Name  class:Qualified::Name  extern:Qualified::Name
 */

export type PrimitiveKind =
  | "boolean"
  | "octet"
  | "short"
  | "long"
  | "longlong"
  | "float"
  | "double"
  | "string";

export type TypeDesc =
  | { kind: PrimitiveKind }
  | { kind: "sequence"; element: TypeDesc }
  | { kind: "enum"; name: string }
  | { kind: "class"; name: string }
  | { kind: "extern"; name: string };

export const PRIMITIVES: ReadonlySet<string> = new Set([
  "boolean",
  "octet",
  "short",
  "long",
  "longlong",
  "float",
  "double",
  "string",
]);

/** Parse a full descriptor; trailing text is an error. */
export function parseTypeDescriptor(text: string): TypeDesc {
  const [desc, rest] = parseDesc(text);
  if (rest !== "") {
    throw new Error(`trailing text in type descriptor: ${JSON.stringify(text)}`);
  }
  return desc;
}

function parseDesc(text: string): [TypeDesc, string] {
  if (text.startsWith("sequence<")) {
    const [element, rest] = parseDesc(text.slice("sequence<".length));
    if (!rest.startsWith(">")) {
      throw new Error(`unterminated sequence in type descriptor: ${JSON.stringify(text)}`);
    }
    return [{ kind: "sequence", element }, rest.slice(1)];
  }
  for (const prefix of ["enum:", "class:", "extern:"] as const) {
    if (text.startsWith(prefix)) {
      const body = text.slice(prefix.length);
      let end = body.indexOf(">");
      if (end < 0) end = body.length;
      const name = body.slice(0, end);
      if (name === "") {
        throw new Error(`empty name in type descriptor: ${JSON.stringify(text)}`);
      }
      return [{ kind: prefix.slice(0, -1) as "enum" | "class" | "extern", name }, body.slice(end)];
    }
  }
  // "longlong" shares a prefix with "long"; try longer names first.
  const names = [...PRIMITIVES].sort((a, b) => b.length - a.length);
  for (const name of names) {
    if (text.startsWith(name)) {
      return [{ kind: name as PrimitiveKind }, text.slice(name.length)];
    }
  }
  throw new Error(`bad type descriptor: ${JSON.stringify(text)}`);
}
