/**
 * Flatten possibly-overlapping annotation spans into contiguous segments
 * (all offsets in Unicode scalar values). Each segment lists the annotations
 * covering it; the reader renders covered segments as highlights.
 */

export interface SpanLike {
  key: string;
  start: number;
  end: number;
  code: string;
}

export interface Segment {
  start: number;
  end: number;
  keys: string[];
  codes: string[];
}

export function computeSegments(length: number, spans: SpanLike[]): Segment[] {
  const cuts = new Set<number>([0, length]);
  for (const span of spans) {
    cuts.add(Math.max(0, Math.min(span.start, length)));
    cuts.add(Math.max(0, Math.min(span.end, length)));
  }
  const boundaries = [...cuts].sort((a, b) => a - b);
  const segments: Segment[] = [];
  for (let i = 0; i + 1 < boundaries.length; i += 1) {
    const start = boundaries[i]!;
    const end = boundaries[i + 1]!;
    if (start === end) continue;
    const covering = spans.filter((s) => s.start <= start && s.end >= end);
    segments.push({
      start,
      end,
      keys: covering.map((s) => s.key),
      codes: covering.map((s) => s.code),
    });
  }
  return segments;
}

/** The segments covered by one annotation key (for scroll-to-evidence). */
export function segmentsForKey(segments: Segment[], key: string): Segment[] {
  return segments.filter((s) => s.keys.includes(key));
}
