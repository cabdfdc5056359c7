#!/usr/bin/env node
/** Dump entry point: print the canonical text form of one payload file.
 *
 *     adl-dump <payload.add>
 *
 * Exit status: 0 on success, 1 when the payload is malformed, 2 on usage or
 * file-system errors — the same contract as the generating toolchain's
 * `inspect` command, so scripts can treat the two uniformly.
 */

import { readFileSync } from "node:fs";
import { pathToFileURL } from "node:url";
import { canonicalDump } from "./dump.js";
import { PayloadError, readPayload } from "./payload.js";

export function main(argv: readonly string[]): number {
  if (argv.length !== 1 || argv[0] === "-h" || argv[0] === "--help") {
    const usage = "usage: adl-dump <payload.add>\nPrint a payload's canonical text dump to stdout.\n";
    if (argv[0] === "-h" || argv[0] === "--help") {
      process.stdout.write(usage);
      return 0;
    }
    process.stderr.write(usage);
    return 2;
  }
  const path = argv[0]!;
  let data: Uint8Array;
  try {
    data = new Uint8Array(readFileSync(path));
  } catch (err) {
    process.stderr.write(`adl-dump: cannot read ${path}: ${(err as Error).message}\n`);
    return 2;
  }
  try {
    process.stdout.write(canonicalDump(readPayload(data)));
    return 0;
  } catch (err) {
    if (err instanceof PayloadError) {
      process.stderr.write(`adl-dump: ${path}: ${err.message}\n`);
      return 1;
    }
    throw err;
  }
}

const invokedDirectly =
  process.argv[1] !== undefined && import.meta.url === pathToFileURL(process.argv[1]).href;
if (invokedDirectly) {
  process.exitCode = main(process.argv.slice(2));
}
