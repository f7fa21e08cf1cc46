import { describe, expect, it } from "vitest";

import { CHART, clamp, countPoints, dynamicsSvg, spectrumSvg } from "../src/charts.js";
import type { DynamicsPayload, SpectrumPayload } from "../src/types.js";

const point = (doc_id: string, tsda: number, tsdb: number, profile = "balanced") => ({
  doc_id,
  author: "Author",
  date: "2024-01-01",
  tsda,
  tsdb,
  profile,
});

const spectrum = (points: SpectrumPayload["points"], excluded: string[] = []): SpectrumPayload => ({
  scheme_version: "1.0.0",
  points,
  excluded,
});

describe("spectrumSvg", () => {
  it("renders one circle per defined-balance document", () => {
    const svg = spectrumSvg(spectrum([point("a", 10, 0.1), point("b", -5, 0.4), point("c", 0, 0.5)]));
    expect(countPoints(svg)).toBe(3);
    expect(svg).toContain('data-doc-id="a"');
  });

  it("excluded documents are not rendered as points", () => {
    const svg = spectrumSvg(spectrum([point("a", 10, 0.1)], ["ghost-doc"]));
    expect(countPoints(svg)).toBe(1);
    expect(svg).not.toContain("ghost-doc");
  });

  it("clamps x to the [0, 0.5] balance range", () => {
    const inRange = spectrumSvg(spectrum([point("max", 1, 0.5)]));
    const outOfRange = spectrumSvg(spectrum([point("max", 1, 0.75)]));
    const cx = (svg: string) => /cx="([0-9.]+)"/.exec(svg)?.[1];
    expect(cx(outOfRange)).toBe(cx(inRange));
    const low = spectrumSvg(spectrum([point("min", 1, 0)]));
    expect(Number(cx(low))).toBe(CHART.left);
  });

  it("carries doc id and profile in the hover title", () => {
    const svg = spectrumSvg(spectrum([point("doc-x", 12.346, 0.18, "pro_imbalanced")]));
    expect(svg).toContain("<title>doc-x (pro_imbalanced) tsda=12.35 tsdb=0.18</title>");
  });

  it("highlights the active document", () => {
    const svg = spectrumSvg(spectrum([point("a", 1, 0.1), point("b", 2, 0.2)]), "b");
    expect(svg).toMatch(/class="point profile-balanced active" data-doc-id="b"/);
  });

  it("renders an explicit empty state, never a blank chart", () => {
    const svg = spectrumSvg(spectrum([]));
    expect(svg).toContain("chart-empty");
    expect(svg).toContain("No scored documents yet");
  });
});

const dynamics = (
  series: DynamicsPayload["series"],
  events: DynamicsPayload["events"] = [],
): DynamicsPayload => ({ scheme_version: "1.0.0", series, events });

describe("dynamicsSvg", () => {
  it("renders a polyline per multi-point author and a dot per text", () => {
    const svg = dynamicsSvg(
      dynamics([
        {
          author: "Writer",
          points: [
            { doc_id: "w1", date: "2020-01-01", tsda: -5 },
            { doc_id: "w2", date: "2024-01-01", tsda: 20 },
          ],
        },
        { author: "Solo", points: [{ doc_id: "s1", date: "2022-06-01", tsda: 3 }] },
      ]),
    );
    expect(countPoints(svg, "series-point")).toBe(3);
    expect((svg.match(/<polyline/g) ?? []).length).toBe(1);
    expect(svg).toContain("Writer");
    expect(svg).toContain("Solo");
  });

  it("draws configured event markers verbatim", () => {
    const svg = dynamicsSvg(
      dynamics(
        [{ author: "W", points: [{ doc_id: "a", date: "2022-01-01", tsda: 1 }] }],
        [{ date: "2022-11-30", label: "ChatGPT launch" }],
      ),
    );
    expect(svg).toContain("ChatGPT launch");
    expect(svg).toContain('class="event"');
  });

  it("renders an explicit empty state", () => {
    const svg = dynamicsSvg(dynamics([]));
    expect(svg).toContain("chart-empty");
  });

  it("escapes markup in labels", () => {
    const svg = dynamicsSvg(
      dynamics(
        [{ author: "<script>", points: [{ doc_id: "a", date: "2022-01-01", tsda: 1 }] }],
      ),
    );
    expect(svg).not.toContain("<script>");
    expect(svg).toContain("&lt;script&gt;");
  });
});

describe("clamp", () => {
  it("clamps into the closed interval", () => {
    expect(clamp(0.75, 0, 0.5)).toBe(0.5);
    expect(clamp(-1, 0, 0.5)).toBe(0);
    expect(clamp(0.3, 0, 0.5)).toBe(0.3);
  });
});
