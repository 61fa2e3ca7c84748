/**
 * The pipeline: sentences + acoustic sidecar -> selection-corpus JSONL.
 *
 * Each sentence gets a line-order id, a constituency tree, and a sentence
 * embedding; rows pair with the sidecar's acoustic vector by id. A failed
 * parse or a missing acoustic row skips that sentence and lands in the
 * report; output keeps input order and is byte-stable across reruns.
 */

import { readFileSync, writeFileSync } from "node:fs";

import { loadAcoustics } from "./acoustics.js";
import { makeEmbedder } from "./embedder.js";
import { makeTreeProvider } from "./parser.js";
import type { CorpusRow, Manifest, PrepReport, Skip } from "./types.js";

export function sentenceId(prefix: string, line: number): string {
  return `${prefix}${String(line).padStart(4, "0")}`;
}

export function readSentences(path: string): Array<{ line: number; text: string }> {
  const out: Array<{ line: number; text: string }> = [];
  const lines = readFileSync(path, "utf-8").split(/\r?\n/);
  for (let i = 0; i < lines.length; i++) {
    const text = lines[i].trim();
    if (text.length > 0) {
      out.push({ line: i + 1, text });
    }
  }
  if (out.length === 0) {
    throw new Error(`no sentences in ${path}`);
  }
  return out;
}

export async function prepareCorpus(manifest: Manifest): Promise<PrepReport> {
  const sentences = readSentences(manifest.sentences);
  const acoustics = loadAcoustics(manifest.acoustics);
  const parse = makeTreeProvider(manifest.parser);
  const embed = makeEmbedder(manifest.embedder);

  const rows: CorpusRow[] = [];
  const skipped: Skip[] = [];
  for (const sentence of sentences) {
    const id = sentenceId(manifest.idPrefix, sentence.line);
    const acoustic = acoustics.get(id);
    if (acoustic === undefined) {
      skipped.push({
        id,
        line: sentence.line,
        reason: "no acoustic row for id",
      });
      continue;
    }
    let tree: string;
    try {
      tree = await parse(sentence.text);
    } catch (err) {
      skipped.push({
        id,
        line: sentence.line,
        reason: `parser failure: ${(err as Error).message}`,
      });
      continue;
    }
    rows.push({
      id,
      text: sentence.text,
      tree,
      cwe: await embed(sentence.text),
      acoustic,
    });
  }

  const jsonl = rows.map((row) => JSON.stringify(row)).join("\n");
  writeFileSync(manifest.output, jsonl.length > 0 ? jsonl + "\n" : "");
  return { written: rows.length, skipped, output: manifest.output };
}
