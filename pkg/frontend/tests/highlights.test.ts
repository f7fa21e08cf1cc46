import { describe, expect, it } from "vitest";

import { computeSegments, segmentsForKey } from "../src/highlights.js";

const span = (key: string, start: number, end: number, code = "CT-UF") => ({
  key,
  start,
  end,
  code,
});

describe("computeSegments", () => {
  it("covers the whole document with contiguous segments", () => {
    const segments = computeSegments(100, [span("a", 10, 30), span("b", 20, 50)]);
    expect(segments[0]).toEqual({ start: 0, end: 10, keys: [], codes: [] });
    expect(segments.at(-1)).toEqual({ start: 50, end: 100, keys: [], codes: [] });
    for (let i = 0; i + 1 < segments.length; i += 1) {
      expect(segments[i]!.end).toBe(segments[i + 1]!.start);
    }
  });

  it("splits overlapping spans into shared segments", () => {
    const segments = computeSegments(100, [span("a", 10, 30), span("b", 20, 50, "ACK-RI")]);
    const overlap = segments.find((s) => s.start === 20 && s.end === 30);
    expect(overlap?.keys).toEqual(["a", "b"]);
    expect(overlap?.codes).toEqual(["CT-UF", "ACK-RI"]);
    const onlyA = segments.find((s) => s.start === 10 && s.end === 20);
    expect(onlyA?.keys).toEqual(["a"]);
  });

  it("handles nested spans", () => {
    const segments = computeSegments(40, [span("outer", 0, 40), span("inner", 10, 20)]);
    expect(segments.map((s) => s.keys)).toEqual([["outer"], ["outer", "inner"], ["outer"]]);
  });

  it("clamps spans that poke outside the document", () => {
    const segments = computeSegments(10, [span("a", 5, 99)]);
    expect(segments.at(-1)).toMatchObject({ start: 5, end: 10, keys: ["a"] });
  });

  it("returns a single empty segment for an unannotated document", () => {
    expect(computeSegments(12, [])).toEqual([{ start: 0, end: 12, keys: [], codes: [] }]);
  });
});

describe("segmentsForKey", () => {
  it("finds the segments covered by one annotation", () => {
    const segments = computeSegments(100, [span("a", 10, 30), span("b", 20, 50)]);
    const covered = segmentsForKey(segments, "a");
    expect(covered.map((s) => [s.start, s.end])).toEqual([[10, 20], [20, 30]]);
  });
});
