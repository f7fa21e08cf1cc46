/** Display formatting that matches the engine's reporting surface. */

/**
 * Two-decimal display string. Ties round half to even, matching the
 * service's CSV/table rounding; negative zero normalizes to "0.00".
 */
export function fmt2(value: number | null | undefined): string {
  if (value === null || value === undefined) return "n/a";
  const scaled = value * 100;
  let text: string;
  if (Number.isInteger(scaled * 2) && !Number.isInteger(scaled)) {
    // Exact .xx5 tie in the binary value: pick the even neighbor.
    const lower = Math.floor(scaled);
    const chosen = lower % 2 === 0 ? lower : lower + 1;
    text = (chosen / 100).toFixed(2);
  } else {
    text = value.toFixed(2);
  }
  return text === "-0.00" ? "0.00" : text;
}

export function fmt3(value: number | null | undefined): string {
  if (value === null || value === undefined) return "n/a";
  return value.toFixed(3);
}
