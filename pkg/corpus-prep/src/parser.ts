/**
 * Constituency-tree providers. Real corpora use an external parser via
 * a shell command (sentence on stdin, bracketed tree on stdout) or an
 * HTTP endpoint; fixture mode builds deterministic right-branching
 * trees so tests need no parser installation.
 */

import { spawnSync } from "node:child_process";

import { fixtureTree } from "./fixtures.js";
import type { ParserSpec } from "./types.js";

export type TreeProvider = (sentence: string) => Promise<string>;

function checkBracketed(tree: string, source: string): string {
  const trimmed = tree.trim();
  if (!trimmed.startsWith("(") || !trimmed.endsWith(")")) {
    throw new Error(`${source} did not return a bracketed tree`);
  }
  return trimmed;
}

export function makeTreeProvider(spec: ParserSpec): TreeProvider {
  switch (spec.kind) {
    case "fixture":
      return async (sentence) => fixtureTree(sentence);
    case "command":
      return async (sentence) => {
        const run = spawnSync(spec.command, {
          input: sentence + "\n",
          shell: true,
          encoding: "utf-8",
        });
        if (run.status !== 0) {
          throw new Error(
            `parser command failed (exit ${run.status ?? "signal"})`,
          );
        }
        return checkBracketed(run.stdout, "parser command");
      };
    case "http":
      return async (sentence) => {
        const response = await fetch(spec.url, {
          method: "POST",
          headers: { "content-type": "application/json" },
          body: JSON.stringify({ sentence }),
        });
        if (!response.ok) {
          throw new Error(`parser endpoint returned ${response.status}`);
        }
        const body = (await response.json()) as { tree?: string };
        if (typeof body.tree !== "string") {
          throw new Error("parser endpoint response has no tree field");
        }
        return checkBracketed(body.tree, "parser endpoint");
      };
  }
}
