/**
 * Offset conversions between UTF-16 code units (what the DOM reports) and
 * Unicode scalar values (what the service stores). Stored spans must survive
 * round trips unchanged for documents containing multi-byte characters.
 */

/** Number of Unicode scalar values in a string. */
export function scalarLength(text: string): number {
  let count = 0;
  for (const _ of text) count += 1;
  return count;
}

/**
 * Convert a UTF-16 offset into a scalar-value offset. An offset landing in
 * the middle of a surrogate pair counts the containing scalar once.
 */
export function utf16ToScalar(text: string, utf16: number): number {
  let scalars = 0;
  let i = 0;
  while (i < utf16 && i < text.length) {
    const cp = text.codePointAt(i);
    if (cp === undefined) break;
    i += cp > 0xffff ? 2 : 1;
    scalars += 1;
  }
  return scalars;
}

/** Convert a scalar-value offset into a UTF-16 offset. */
export function scalarToUtf16(text: string, scalar: number): number {
  let i = 0;
  let seen = 0;
  while (seen < scalar && i < text.length) {
    const cp = text.codePointAt(i);
    if (cp === undefined) break;
    i += cp > 0xffff ? 2 : 1;
    seen += 1;
  }
  return i;
}

/** Slice by scalar-value offsets, end exclusive. */
export function scalarSlice(text: string, start: number, end: number): string {
  return text.slice(scalarToUtf16(text, start), scalarToUtf16(text, end));
}
