export type CorpusRow = {
  id: string;
  text: string;
  tree: string;
  cwe: number[];
  acoustic: number[];
};

export type ParserSpec =
  | { kind: "fixture" }
  | { kind: "command"; command: string }
  | { kind: "http"; url: string };

export type EmbedderSpec =
  | { kind: "fixture"; model: string; dim: number }
  | { kind: "http"; url: string; model: string; dim: number };

export type Manifest = {
  sentences: string;
  acoustics: string;
  output: string;
  idPrefix: string;
  parser: ParserSpec;
  embedder: EmbedderSpec;
};

export type Skip = { id: string; line: number; reason: string };

export type PrepReport = {
  written: number;
  skipped: Skip[];
  output: string;
};
