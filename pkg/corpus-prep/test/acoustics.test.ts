import { describe, expect, it } from "vitest";

import { parseAcousticCsv } from "../src/acoustics.js";

describe("parseAcousticCsv", () => {
  it("parses id-keyed float rows", () => {
    const table = parseAcousticCsv("a,1.0,2.5\nb,-0.5,0.25\n");
    expect([...table.keys()]).toEqual(["a", "b"]);
    expect(table.get("b")).toEqual([-0.5, 0.25]);
  });

  it("skips blank lines", () => {
    const table = parseAcousticCsv("a,1,2\n\nb,3,4\n");
    expect(table.size).toBe(2);
  });

  it("rejects ragged rows", () => {
    expect(() => parseAcousticCsv("a,1,2\nb,3\n")).toThrow(/expected 2 values/);
  });

  it("rejects non-numbers and duplicates", () => {
    expect(() => parseAcousticCsv("a,1,zz\n")).toThrow(/finite/);
    expect(() => parseAcousticCsv("a,1\na,2\n")).toThrow(/duplicate/);
  });

  it("rejects empty tables", () => {
    expect(() => parseAcousticCsv("\n")).toThrow(/empty/);
  });
});
