/**
 * SVG chart builders for the spectrum scatter and dynamics lines. Pure
 * string generation so the renderers are testable without a DOM; the app
 * injects the result and attaches delegated event handlers.
 */

import { fmt2 } from "./format.js";
import type { DynamicsPayload, SpectrumPayload } from "./types.js";

export const CHART = {
  width: 720,
  height: 440,
  left: 64,
  right: 20,
  top: 20,
  bottom: 44,
};

const SERIES_COLORS = [
  "#2563eb", "#db2777", "#059669", "#d97706", "#7c3aed", "#0891b2", "#dc2626",
  "#4d7c0f", "#9333ea", "#0f766e",
];

export function clamp(value: number, lo: number, hi: number): number {
  return Math.min(hi, Math.max(lo, value));
}

function escapeXml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export function emptyStateSvg(message: string): string {
  const { width, height } = CHART;
  return (
    `<svg class="chart chart-empty" viewBox="0 0 ${width} ${height}" role="img">` +
    `<text x="${width / 2}" y="${height / 2}" text-anchor="middle" class="empty-label">` +
    `${escapeXml(message)}</text></svg>`
  );
}

interface LinearScale {
  (value: number): number;
  ticks: number[];
}

function linearScale(domain: [number, number], range: [number, number], tickCount = 5): LinearScale {
  const [d0, d1] = domain;
  const [r0, r1] = range;
  const span = d1 - d0 || 1;
  const scale = ((value: number) => r0 + ((value - d0) / span) * (r1 - r0)) as LinearScale;
  const step = span / (tickCount - 1);
  scale.ticks = Array.from({ length: tickCount }, (_, i) => d0 + i * step);
  return scale;
}

/**
 * Spectrum scatter: x = balance (tsdb) clamped to [0, 0.5], y = adherence
 * (tsda). One circle per defined-balance document; excluded documents are
 * not rendered. Hover titles carry doc id and profile.
 */
export function spectrumSvg(payload: SpectrumPayload, activeDocId?: string | null): string {
  if (payload.points.length === 0) {
    return emptyStateSvg("No scored documents yet: annotate a text to see it here.");
  }
  const { width, height, left, right, top, bottom } = CHART;
  const x = linearScale([0, 0.5], [left, width - right], 6);
  const tsdas = payload.points.map((p) => p.tsda);
  const yLo = Math.min(0, ...tsdas) - 2;
  const yHi = Math.max(0, ...tsdas) + 2;
  const y = linearScale([yLo, yHi], [height - bottom, top]);

  const gridX = x.ticks
    .map(
      (t) =>
        `<line class="grid" x1="${x(t)}" y1="${top}" x2="${x(t)}" y2="${height - bottom}"/>` +
        `<text class="tick" x="${x(t)}" y="${height - bottom + 16}" text-anchor="middle">${fmt2(t)}</text>`,
    )
    .join("");
  const gridY = y.ticks
    .map(
      (t) =>
        `<line class="grid" x1="${left}" y1="${y(t)}" x2="${width - right}" y2="${y(t)}"/>` +
        `<text class="tick" x="${left - 8}" y="${y(t) + 4}" text-anchor="end">${fmt2(t)}</text>`,
    )
    .join("");
  const zero = `<line class="zero" x1="${left}" y1="${y(0)}" x2="${width - right}" y2="${y(0)}"/>`;

  const circles = payload.points
    .map((p) => {
      const cx = x(clamp(p.tsdb, 0, 0.5));
      const cy = y(p.tsda);
      const active = p.doc_id === activeDocId ? " active" : "";
      const title = `${p.doc_id} (${p.profile}) tsda=${fmt2(p.tsda)} tsdb=${fmt2(p.tsdb)}`;
      return (
        `<circle class="point profile-${p.profile}${active}" data-doc-id="${escapeXml(p.doc_id)}" ` +
        `cx="${cx.toFixed(1)}" cy="${cy.toFixed(1)}" r="6"><title>${escapeXml(title)}</title></circle>`
      );
    })
    .join("");

  const labels =
    `<text class="axis-label" x="${(left + width - right) / 2}" y="${height - 6}" text-anchor="middle">balance (tsdb)</text>` +
    `<text class="axis-label" transform="rotate(-90)" x="${-(top + (height - bottom)) / 2}" y="16" text-anchor="middle">adherence (tsda)</text>`;

  return (
    `<svg class="chart chart-spectrum" viewBox="0 0 ${width} ${height}" role="img">` +
    gridX + gridY + zero + circles + labels + `</svg>`
  );
}

/**
 * Dynamics lines: per-author adherence over time with configured event
 * markers as labeled vertical lines.
 */
export function dynamicsSvg(payload: DynamicsPayload): string {
  const allPoints = payload.series.flatMap((s) => s.points);
  if (allPoints.length === 0) {
    return emptyStateSvg("No dated documents yet: the dynamics view needs scored texts.");
  }
  const { width, height, left, right, top, bottom } = CHART;
  const times = allPoints.map((p) => Date.parse(p.date));
  const eventTimes = payload.events.map((e) => Date.parse(e.date));
  const tLo = Math.min(...times, ...(eventTimes.length ? eventTimes : times));
  const tHi = Math.max(...times, ...(eventTimes.length ? eventTimes : times));
  const pad = Math.max((tHi - tLo) * 0.04, 1);
  const x = linearScale([tLo - pad, tHi + pad], [left, width - right]);
  const tsdas = allPoints.map((p) => p.tsda);
  const y = linearScale([Math.min(0, ...tsdas) - 2, Math.max(0, ...tsdas) + 2], [height - bottom, top]);

  const zero = `<line class="zero" x1="${left}" y1="${y(0)}" x2="${width - right}" y2="${y(0)}"/>`;
  const yTicks = y.ticks
    .map(
      (t) =>
        `<line class="grid" x1="${left}" y1="${y(t)}" x2="${width - right}" y2="${y(t)}"/>` +
        `<text class="tick" x="${left - 8}" y="${y(t) + 4}" text-anchor="end">${fmt2(t)}</text>`,
    )
    .join("");

  const events = payload.events
    .map((e) => {
      const ex = x(Date.parse(e.date));
      return (
        `<line class="event" x1="${ex}" y1="${top}" x2="${ex}" y2="${height - bottom}"/>` +
        `<text class="event-label" x="${ex + 4}" y="${top + 12}">${escapeXml(e.label)}</text>`
      );
    })
    .join("");

  const series = payload.series
    .map((s, index) => {
      const color = SERIES_COLORS[index % SERIES_COLORS.length];
      const coords = s.points.map((p) => [x(Date.parse(p.date)), y(p.tsda)] as const);
      const path = coords.map(([px, py]) => `${px.toFixed(1)},${py.toFixed(1)}`).join(" ");
      const line =
        coords.length > 1
          ? `<polyline class="series-line" points="${path}" style="stroke:${color}"/>`
          : "";
      const dots = s.points
        .map((p, i) => {
          const [px, py] = coords[i]!;
          const title = `${s.author}: ${p.doc_id} (${p.date}) tsda=${fmt2(p.tsda)}`;
          return (
            `<circle class="series-point" data-doc-id="${escapeXml(p.doc_id)}" cx="${px.toFixed(1)}" ` +
            `cy="${py.toFixed(1)}" r="5" style="fill:${color}"><title>${escapeXml(title)}</title></circle>`
          );
        })
        .join("");
      const label = coords.length
        ? `<text class="series-label" x="${coords[coords.length - 1]![0] + 8}" ` +
          `y="${coords[coords.length - 1]![1] + 4}" style="fill:${color}">${escapeXml(s.author)}</text>`
        : "";
      return line + dots + label;
    })
    .join("");

  const xLabels = x.ticks
    .map((t) => {
      const when = new Date(t).toISOString().slice(0, 10);
      return `<text class="tick" x="${x(t)}" y="${height - bottom + 16}" text-anchor="middle">${when}</text>`;
    })
    .join("");

  return (
    `<svg class="chart chart-dynamics" viewBox="0 0 ${width} ${height}" role="img">` +
    yTicks + zero + events + series + xLabels + `</svg>`
  );
}

/** Count of rendered data circles (test helper; cheap string scan). */
export function countPoints(svg: string, cls: "point" | "series-point" = "point"): number {
  return (svg.match(new RegExp(`class="${cls}[ "]`, "g")) ?? []).length;
}
