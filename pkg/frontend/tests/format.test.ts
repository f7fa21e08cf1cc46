import { describe, expect, it } from "vitest";

import { fmt2, fmt3 } from "../src/format.js";

describe("fmt2", () => {
  it("rounds to two decimals", () => {
    expect(fmt2(-6.349999)).toBe("-6.35");
    expect(fmt2(55.146)).toBe("55.15");
    expect(fmt2(0)).toBe("0.00");
  });

  it("normalizes negative zero", () => {
    expect(fmt2(-0.0001)).toBe("0.00");
  });

  it("treats undefined values as n/a", () => {
    expect(fmt2(null)).toBe("n/a");
    expect(fmt2(undefined)).toBe("n/a");
  });

  it("rounds exact ties half-to-even, matching the engine", () => {
    expect(fmt2(0.125)).toBe("0.12"); // 1/8 is exact in binary
    expect(fmt2(0.375)).toBe("0.38");
    expect(fmt2(0.625)).toBe("0.62");
    expect(fmt2(-0.125)).toBe("-0.12");
  });
});

describe("fmt3", () => {
  it("renders three decimals or n/a", () => {
    expect(fmt3(0.49)).toBe("0.490");
    expect(fmt3(null)).toBe("n/a");
  });
});
