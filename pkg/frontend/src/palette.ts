/**
 * Code palette derived from GET /scheme, grouped by family so the pro/anti
 * structure is visible while coding: core tenet families (TG, SL, TC, CT),
 * response families (ACK, ADD, MAR), and the ANTI-* mirrors.
 */

import type { SchemeCode, SchemeFile } from "./types.js";

export type FamilySide = "core" | "response" | "anti";

export interface PaletteGroup {
  family: string;
  side: FamilySide;
  codes: SchemeCode[];
}

const FAMILY_ORDER = ["TG", "SL", "TC", "CT", "ACK", "ADD", "MAR", "ANTI"];
const CORE_FAMILIES = new Set(["TG", "SL", "TC", "CT"]);
const RESPONSE_FAMILIES = new Set(["ACK", "ADD", "MAR"]);

export function familySide(family: string): FamilySide {
  if (CORE_FAMILIES.has(family)) return "core";
  if (RESPONSE_FAMILIES.has(family)) return "response";
  return "anti";
}

/** Group every scheme code into family groups, preserving scheme order inside a group. */
export function buildPalette(scheme: SchemeFile): PaletteGroup[] {
  const groups = new Map<string, SchemeCode[]>();
  for (const code of scheme.codes) {
    const bucket = groups.get(code.family) ?? [];
    bucket.push(code);
    groups.set(code.family, bucket);
  }
  const ordered = [...groups.keys()].sort((a, b) => {
    const ia = FAMILY_ORDER.indexOf(a);
    const ib = FAMILY_ORDER.indexOf(b);
    return (ia === -1 ? FAMILY_ORDER.length : ia) - (ib === -1 ? FAMILY_ORDER.length : ib);
  });
  return ordered.map((family) => ({
    family,
    side: familySide(family),
    codes: groups.get(family) ?? [],
  }));
}

/** Weight lookup for tooltips; codes without an assignment report 0. */
export function codeWeight(scheme: SchemeFile, codeId: string): number {
  const assignment = scheme.assignments.find((a) => a.code_id === codeId);
  return assignment ? assignment.weight : 0;
}
