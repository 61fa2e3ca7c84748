/**
 * Acoustic sidecar table: CSV lines of `id,f1,...,fN`, one row per
 * utterance, uniform dimension. Exported by the TTS system's VAE
 * reference encoder (or fabricated by the fixture generator).
 */

import { readFileSync } from "node:fs";

export function parseAcousticCsv(text: string): Map<string, number[]> {
  const table = new Map<string, number[]>();
  let dim: number | null = null;
  const lines = text.split(/\r?\n/);
  for (let i = 0; i < lines.length; i++) {
    const line = lines[i].trim();
    if (!line) {
      continue;
    }
    const cells = line.split(",");
    if (cells.length < 2) {
      throw new Error(`acoustics line ${i + 1}: expected id,values...`);
    }
    const id = cells[0].trim();
    if (!id) {
      throw new Error(`acoustics line ${i + 1}: empty id`);
    }
    if (table.has(id)) {
      throw new Error(`acoustics line ${i + 1}: duplicate id "${id}"`);
    }
    const values = cells.slice(1).map((cell, j) => {
      const value = Number(cell);
      if (!Number.isFinite(value)) {
        throw new Error(
          `acoustics line ${i + 1}: value ${j + 1} is not a finite number`,
        );
      }
      return value;
    });
    if (dim === null) {
      dim = values.length;
    } else if (values.length !== dim) {
      throw new Error(
        `acoustics line ${i + 1}: expected ${dim} values, found ${values.length}`,
      );
    }
    table.set(id, values);
  }
  if (table.size === 0) {
    throw new Error("acoustics table is empty");
  }
  return table;
}

export function loadAcoustics(path: string): Map<string, number[]> {
  return parseAcousticCsv(readFileSync(path, "utf-8"));
}
