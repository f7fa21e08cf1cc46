import { describe, expect, it } from "vitest";

import { buildPalette, codeWeight, familySide } from "../src/palette.js";
import type { SchemeFile } from "../src/types.js";

const SCHEME: SchemeFile = {
  name: "tsd",
  version: "1.0.0",
  codes: [
    { id: "ANTI-CT-UF", name: "Anti Utopian Future", description: "", family: "ANTI", anti_of: "CT-UF" },
    { id: "CT-UF", name: "Utopian Future", description: "Expects utopia.", family: "CT" },
    { id: "TG-TF", name: "Technology Framing", description: "", family: "TG" },
    { id: "ACK-RI", name: "Risk", description: "", family: "ACK" },
    { id: "ADD-SN", name: "Non-Tech Solution", description: "", family: "ADD" },
    { id: "MAR-DI", name: "Dismissal", description: "", family: "MAR" },
  ],
  assignments: [
    { code_id: "CT-UF", component: "TCE", weight: 2 },
    { code_id: "TG-TF", component: "TCE", weight: 1 },
    { code_id: "ACK-RI", component: "ANTI_TRR", weight: 1 },
    { code_id: "ADD-SN", component: "ANTI_TRR", weight: 2 },
    { code_id: "MAR-DI", component: "TRR", weight: 2 },
    { code_id: "ANTI-CT-UF", component: "ANTI_TCE", weight: 2 },
  ],
};

describe("buildPalette", () => {
  it("mirrors the scheme exactly: every code appears once", () => {
    const palette = buildPalette(SCHEME);
    const ids = palette.flatMap((group) => group.codes.map((c) => c.id));
    expect(ids.sort()).toEqual(SCHEME.codes.map((c) => c.id).sort());
    expect(new Set(ids).size).toBe(SCHEME.codes.length);
  });

  it("orders core families before response families before anti", () => {
    const palette = buildPalette(SCHEME);
    expect(palette.map((g) => g.family)).toEqual(["TG", "CT", "ACK", "ADD", "MAR", "ANTI"]);
    expect(palette.map((g) => g.side)).toEqual([
      "core", "core", "response", "response", "response", "anti",
    ]);
  });
});

describe("familySide", () => {
  it("splits families into the three visual groups", () => {
    for (const family of ["TG", "SL", "TC", "CT"]) expect(familySide(family)).toBe("core");
    for (const family of ["ACK", "ADD", "MAR"]) expect(familySide(family)).toBe("response");
    expect(familySide("ANTI")).toBe("anti");
  });
});

describe("codeWeight", () => {
  it("reads the assignment weight", () => {
    expect(codeWeight(SCHEME, "CT-UF")).toBe(2);
    expect(codeWeight(SCHEME, "ACK-RI")).toBe(1);
    expect(codeWeight(SCHEME, "UNKNOWN")).toBe(0);
  });
});
