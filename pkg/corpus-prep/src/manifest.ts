import { readFileSync } from "node:fs";
import { dirname, resolve } from "node:path";

import type { EmbedderSpec, Manifest, ParserSpec } from "./types.js";

export const DEFAULT_MODEL = "bert-base-uncased";
export const DEFAULT_CWE_DIM = 768;

function fail(message: string): never {
  throw new Error(`manifest: ${message}`);
}

function asString(raw: Record<string, unknown>, field: string): string {
  const value = raw[field];
  if (typeof value !== "string" || value.length === 0) {
    fail(`${field} must be a non-empty string`);
  }
  return value;
}

function parserSpec(raw: unknown): ParserSpec {
  if (raw === undefined) {
    return { kind: "fixture" };
  }
  const spec = raw as Record<string, unknown>;
  switch (spec.kind) {
    case "fixture":
      return { kind: "fixture" };
    case "command":
      return { kind: "command", command: asString(spec, "command") };
    case "http":
      return { kind: "http", url: asString(spec, "url") };
    default:
      fail('parser.kind must be "fixture", "command", or "http"');
  }
}

function embedderSpec(raw: unknown): EmbedderSpec {
  const spec = (raw ?? {}) as Record<string, unknown>;
  const model =
    spec.model === undefined ? DEFAULT_MODEL : asString(spec, "model");
  const dim = spec.dim === undefined ? DEFAULT_CWE_DIM : Number(spec.dim);
  if (!Number.isInteger(dim) || dim < 1) {
    fail("embedder.dim must be a positive integer");
  }
  switch (spec.kind ?? "fixture") {
    case "fixture":
      return { kind: "fixture", model, dim };
    case "http":
      return { kind: "http", url: asString(spec, "url"), model, dim };
    default:
      fail('embedder.kind must be "fixture" or "http"');
  }
}

/** Load and validate a manifest; relative paths resolve beside the file. */
export function loadManifest(path: string): Manifest {
  let raw: Record<string, unknown>;
  try {
    raw = JSON.parse(readFileSync(path, "utf-8"));
  } catch (err) {
    fail(`cannot read ${path}: ${(err as Error).message}`);
  }
  const base = dirname(resolve(path));
  const relative = (field: string) => resolve(base, asString(raw, field));
  const idPrefix =
    raw.idPrefix === undefined ? "s" : asString(raw, "idPrefix");
  return {
    sentences: relative("sentences"),
    acoustics: relative("acoustics"),
    output: relative("output"),
    idPrefix,
    parser: parserSpec(raw.parser),
    embedder: embedderSpec(raw.embedder),
  };
}
