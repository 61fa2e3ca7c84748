#!/usr/bin/env node
/**
 * corpus-prep --manifest manifest.json
 *
 * Runs the corpus pipeline; prints the report as JSON on stdout and one
 * line per skipped sentence on stderr. Exit 0 on success (skips allowed),
 * 1 on fatal errors, 2 on usage errors.
 */

import { pathToFileURL } from "node:url";

import { loadManifest } from "./manifest.js";
import { prepareCorpus } from "./prepare.js";

function usage(): never {
  process.stderr.write("usage: corpus-prep --manifest <manifest.json>\n");
  process.exit(2);
}

export async function main(argv: string[]): Promise<number> {
  let manifestPath: string | undefined;
  for (let i = 0; i < argv.length; i++) {
    if (argv[i] === "--manifest") {
      manifestPath = argv[++i];
    } else {
      usage();
    }
  }
  if (!manifestPath) {
    usage();
  }
  try {
    const manifest = loadManifest(manifestPath);
    const report = await prepareCorpus(manifest);
    for (const skip of report.skipped) {
      process.stderr.write(
        `skipped ${skip.id} (line ${skip.line}): ${skip.reason}\n`,
      );
    }
    process.stdout.write(JSON.stringify(report) + "\n");
    return 0;
  } catch (err) {
    process.stderr.write(`error: ${(err as Error).message}\n`);
    return 1;
  }
}

const invokedDirectly =
  process.argv[1] !== undefined &&
  import.meta.url === pathToFileURL(process.argv[1]).href;

if (invokedDirectly) {
  main(process.argv.slice(2)).then((code) => process.exit(code));
}
