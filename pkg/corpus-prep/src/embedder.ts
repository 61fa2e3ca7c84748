/**
 * Sentence-embedding providers. The HTTP provider asks a model server
 * for the mean over token states of the model's second-to-last hidden
 * layer, classifier token excluded (the aggregate-classification token
 * makes a poor sentence vector); fixture mode fabricates deterministic
 * pseudo-embeddings of the same shape.
 */

import { pseudoEmbedding } from "./fixtures.js";
import type { EmbedderSpec } from "./types.js";

export type Embedder = (text: string) => Promise<number[]>;

export function makeEmbedder(spec: EmbedderSpec): Embedder {
  switch (spec.kind) {
    case "fixture":
      return async (text) => pseudoEmbedding(spec.model, text, spec.dim);
    case "http":
      return async (text) => {
        const response = await fetch(spec.url, {
          method: "POST",
          headers: { "content-type": "application/json" },
          body: JSON.stringify({
            model: spec.model,
            text,
            pooling: "mean",
            layer: -2,
            include_classifier_token: false,
          }),
        });
        if (!response.ok) {
          throw new Error(`embedding endpoint returned ${response.status}`);
        }
        const body = (await response.json()) as { vector?: number[] };
        if (!Array.isArray(body.vector) || body.vector.length !== spec.dim) {
          throw new Error(
            `embedding endpoint did not return a ${spec.dim}-dim vector`,
          );
        }
        return body.vector;
      };
  }
}
