/** Scripting-side reader for generated reflection manifests and binary
 * object payloads.
 *
 *   - `loadManifest` builds a class registry from manifest JSON.
 *   - `readPayload` decodes a self-describing payload into dynamic objects
 *     with resolved link slots (read-only with respect to the wire: this
 *     package never writes payloads).
 *   - `canonicalDump` prints a store as sorted text that is byte-identical
 *     to the generating toolchain's dump of the same objects.
 */

export { parseTypeDescriptor, PRIMITIVES, type PrimitiveKind, type TypeDesc } from "./typedesc.js";
export {
  loadManifest,
  ManifestError,
  Registry,
  type RegistryOptions,
  type ShimAttribute,
  type ShimClass,
  type ShimRelationship,
} from "./registry.js";
export {
  checkValue,
  FieldTypeError,
  zeroValue,
  type ShimStruct,
  type ShimValue,
} from "./values.js";
export {
  createInstance,
  NotInstantiableError,
  PrivateAccessError,
  ShimObject,
  UnknownFieldError,
  type LinkMap,
  type LinkSlot,
} from "./objects.js";
export {
  FLAG_PERSISTENT,
  FLAG_PRIVATE,
  MAGIC,
  NO_LINK,
  PayloadError,
  readPayload,
  VERSION,
  type PayloadStore,
} from "./payload.js";
export { canonicalDump, compareCodePoints, encodeValue } from "./dump.js";
export { main as dumpMain } from "./cli.js";
