/**
 * Workbench bootstrap and DOM wiring: document list, reader with standoff
 * highlights, code palette, live metrics gauge, and the spectrum, dynamics,
 * and patterns views. Every displayed number comes from a service response.
 */

import { ApiClient, ApiError } from "./api.js";
import { dynamicsSvg, emptyStateSvg, spectrumSvg } from "./charts.js";
import { fmt2, fmt3 } from "./format.js";
import { computeSegments, segmentsForKey, type Segment } from "./highlights.js";
import { scalarSlice, utf16ToScalar } from "./offsets.js";
import { buildPalette, codeWeight, familySide } from "./palette.js";
import {
  applyAnnotationCreated,
  applyAnnotationDeleted,
  checkRevision,
  initialState,
  type View,
  type WorkbenchState,
} from "./state.js";
import type { DocumentInfo, PatternsPayload, SchemeFile } from "./types.js";

const client = new ApiClient("");
let scheme: SchemeFile;
let documents: DocumentInfo[] = [];
let activeBody = "";
let segments: Segment[] = [];
let state: WorkbenchState = initialState();
const annotator = "workbench";

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

function toast(message: string, kind: "info" | "error" = "info"): void {
  const box = el<HTMLDivElement>("toast");
  box.textContent = message;
  box.className = `toast ${kind} visible`;
  window.setTimeout(() => box.classList.remove("visible"), 3200);
}

// ---------------------------------------------------------------------------
// Document list

function renderDocumentList(): void {
  const list = el<HTMLUListElement>("doc-list");
  list.innerHTML = "";
  for (const doc of documents) {
    const item = document.createElement("li");
    item.dataset.docId = doc.id;
    item.className = doc.id === state.activeDocId ? "active" : "";
    item.innerHTML =
      `<span class="doc-id">${doc.id}</span>` +
      `<span class="doc-meta">${doc.author} · ${doc.date} · ${doc.word_count} words</span>`;
    item.addEventListener("click", () => void openDocument(doc.id));
    list.appendChild(item);
  }
}

// ---------------------------------------------------------------------------
// Reader and highlights

function renderReader(): void {
  const reader = el<HTMLDivElement>("reader");
  reader.innerHTML = "";
  segments = computeSegments([...activeBody].length, state.annotations);
  for (const segment of segments) {
    const span = document.createElement("span");
    span.textContent = scalarSlice(activeBody, segment.start, segment.end);
    span.dataset.start = String(segment.start);
    if (segment.keys.length > 0) {
      const sides = new Set(segment.codes.map(codeFamilySide));
      span.className = `hl depth-${Math.min(segment.keys.length, 3)} ${[...sides].join(" ")}`;
      span.title = segment.codes.join(", ");
    }
    reader.appendChild(span);
  }
}

function codeFamilySide(codeId: string): string {
  const code = scheme.codes.find((c) => c.id === codeId);
  return `side-${code ? familySide(code.family) : "core"}`;
}

function selectionToSpan(): { start: number; end: number } | null {
  const selection = window.getSelection();
  if (!selection || selection.rangeCount === 0 || selection.isCollapsed) return null;
  const range = selection.getRangeAt(0);
  const reader = el<HTMLDivElement>("reader");
  if (!reader.contains(range.startContainer) || !reader.contains(range.endContainer)) return null;
  const resolve = (node: Node, offset: number): number | null => {
    const host = node instanceof Text ? node.parentElement : (node as HTMLElement);
    if (!host || host.dataset.start === undefined) return null;
    const segmentStart = Number(host.dataset.start);
    const text = host.textContent ?? "";
    return segmentStart + utf16ToScalar(text, offset);
  };
  const a = resolve(range.startContainer, range.startOffset);
  const b = resolve(range.endContainer, range.endOffset);
  if (a === null || b === null || a === b) return null;
  return { start: Math.min(a, b), end: Math.max(a, b) };
}

function renderSelectionBar(): void {
  const bar = el<HTMLDivElement>("selection-bar");
  if (!state.selection) {
    bar.textContent = "Select a span in the text, then pick a code.";
    return;
  }
  const { start, end } = state.selection;
  const excerpt = scalarSlice(activeBody, start, Math.min(end, start + 60));
  bar.textContent = `[${start}, ${end}) “${excerpt}${end - start > 60 ? "…" : ""}”`;
}

// ---------------------------------------------------------------------------
// Palette and annotation list

function renderPalette(): void {
  const host = el<HTMLDivElement>("palette");
  host.innerHTML = "";
  for (const group of buildPalette(scheme)) {
    const section = document.createElement("div");
    section.className = `palette-group side-${group.side}`;
    const heading = document.createElement("h3");
    heading.textContent = group.family;
    section.appendChild(heading);
    for (const code of group.codes) {
      const button = document.createElement("button");
      button.className = `code side-${group.side}`;
      button.textContent = code.id;
      button.title = `${code.name} (w=${codeWeight(scheme, code.id)}): ${code.description}`;
      button.addEventListener("click", () => void annotateSelection(code.id));
      section.appendChild(button);
    }
    host.appendChild(section);
  }
}

function renderAnnotationList(): void {
  const list = el<HTMLUListElement>("annotation-list");
  list.innerHTML = "";
  for (const ann of state.annotations) {
    const item = document.createElement("li");
    const label = document.createElement("span");
    label.textContent = `${ann.code} [${ann.start}, ${ann.end}) ${ann.annotator}`;
    label.className = "ann-label";
    label.addEventListener("click", () => scrollToKey(ann.key));
    const remove = document.createElement("button");
    remove.textContent = "×";
    remove.title = "delete annotation";
    remove.addEventListener("click", () => void deleteAnnotation(ann.key));
    item.append(label, remove);
    list.appendChild(item);
  }
  el<HTMLSpanElement>("annotation-count").textContent = String(state.annotations.length);
}

function scrollToKey(key: string): void {
  const covered = segmentsForKey(segments, key);
  const first = covered[0];
  if (!first) return;
  const reader = el<HTMLDivElement>("reader");
  const target = [...reader.children].find(
    (node) => (node as HTMLElement).dataset.start === String(first.start),
  ) as HTMLElement | undefined;
  if (target) {
    target.scrollIntoView({ behavior: "smooth", block: "center" });
    target.classList.add("flash");
    window.setTimeout(() => target.classList.remove("flash"), 1600);
  }
}

// ---------------------------------------------------------------------------
// Gauge

function renderGauge(): void {
  const m = state.metrics;
  el<HTMLSpanElement>("gauge-tsda").textContent = m ? fmt2(m.tsda) : "n/a";
  el<HTMLSpanElement>("gauge-tsdb").textContent = m ? fmt2(m.tsdb) : "n/a";
  const detail = el<HTMLDivElement>("gauge-components");
  if (!m) {
    detail.textContent = "";
    return;
  }
  detail.innerHTML =
    `<span>TCE ${fmt2(m.components.tce)}</span><span>TRR ${fmt2(m.components.trr)}</span>` +
    `<span>ANTI_TCE ${fmt2(m.components.anti_tce)}</span><span>ANTI_TRR ${fmt2(m.components.anti_trr)}</span>`;
  el<HTMLSpanElement>("gauge-revision").textContent = String(state.revision);
}

// ---------------------------------------------------------------------------
// Mutations

async function openDocument(docId: string): Promise<void> {
  const doc = await client.document(docId);
  const annotations = await client.annotations(docId);
  const metrics = await client.metrics(docId);
  activeBody = doc.body.body ?? "";
  state = {
    ...state,
    activeDocId: docId,
    selection: null,
    annotations: annotations.body,
    metrics: metrics.body,
    revision: metrics.revision,
    view: "reader",
  };
  renderDocumentList();
  renderReader();
  renderAnnotationList();
  renderGauge();
  renderSelectionBar();
  switchView("reader");
}

async function annotateSelection(codeId: string): Promise<void> {
  if (!state.activeDocId || !state.selection) {
    toast("Select a span first.", "error");
    return;
  }
  try {
    const response = await client.createAnnotation({
      doc_id: state.activeDocId,
      start: state.selection.start,
      end: state.selection.end,
      code: codeId,
      annotator,
    });
    const stale = checkRevision(state.revision, response.revision, true) === "refetch";
    state = applyAnnotationCreated(state, response.body.annotation, response.body.metrics, response.revision);
    if (stale) await refetchActive();
    renderReader();
    renderAnnotationList();
    renderGauge();
    renderSelectionBar();
    window.getSelection()?.removeAllRanges();
  } catch (error) {
    if (error instanceof ApiError) {
      // Keep the selection so the coder can retry with another code.
      const detail = error.violations.length ? `: ${error.violations.join("; ")}` : "";
      toast(
        error.status === 409 ? "Duplicate annotation." : `${error.message}${detail}`,
        "error",
      );
    } else {
      toast(String(error), "error");
    }
  }
}

async function deleteAnnotation(key: string): Promise<void> {
  try {
    const response = await client.deleteAnnotation(key);
    const stale = checkRevision(state.revision, response.revision, true) === "refetch";
    state = applyAnnotationDeleted(state, key, response.body.metrics, response.revision);
    if (stale) await refetchActive();
    renderReader();
    renderAnnotationList();
    renderGauge();
  } catch (error) {
    toast(error instanceof ApiError ? error.message : String(error), "error");
  }
}

async function refetchActive(): Promise<void> {
  if (!state.activeDocId) return;
  const annotations = await client.annotations(state.activeDocId);
  const metrics = await client.metrics(state.activeDocId);
  state = { ...state, annotations: annotations.body, metrics: metrics.body, revision: metrics.revision };
}

// ---------------------------------------------------------------------------
// Analysis views

async function renderView(view: View): Promise<void> {
  if (view === "spectrum") {
    const spectrum = await client.spectrum();
    el<HTMLDivElement>("view-spectrum").innerHTML =
      spectrumSvg(spectrum.body, state.activeDocId) +
      (spectrum.body.excluded.length
        ? `<p class="excluded">excluded (undefined balance): ${spectrum.body.excluded.join(", ")}</p>`
        : "");
    attachPointNavigation("view-spectrum");
  } else if (view === "dynamics") {
    const dynamics = await client.dynamics();
    el<HTMLDivElement>("view-dynamics").innerHTML = dynamicsSvg(dynamics.body);
    attachPointNavigation("view-dynamics");
  } else if (view === "patterns") {
    const patterns = await client.patterns();
    renderPatterns(patterns.body);
  }
}

function attachPointNavigation(hostId: string): void {
  el<HTMLDivElement>(hostId)
    .querySelectorAll<SVGCircleElement>("[data-doc-id]")
    .forEach((circle) => {
      circle.addEventListener("click", () => {
        const docId = circle.dataset.docId;
        if (docId) void openDocument(docId);
      });
    });
}

function renderPatterns(payload: PatternsPayload): void {
  const host = el<HTMLDivElement>("view-patterns");
  host.innerHTML = "";
  if (!payload.bto.length && !payload.ack_pivot.length) {
    host.innerHTML = emptyStateSvg("No patterns yet.");
    return;
  }

  const cooc = document.createElement("p");
  cooc.textContent =
    `${payload.co_occurrence.codes.join(" + ")} co-occur in ` +
    `${payload.co_occurrence.count} documents: ${payload.co_occurrence.doc_ids.join(", ") || "none"}`;
  host.appendChild(cooc);

  const btoHeading = document.createElement("h3");
  btoHeading.textContent = `Benign techno-optimism (${payload.bto.length})`;
  host.appendChild(btoHeading);
  for (const hit of payload.bto) {
    const row = document.createElement("p");
    const facts = hit.evidence
      .map((e) => `${String(e.code ?? e.component)}=${fmt3(Number(e.value))}`)
      .join(", ");
    row.innerHTML = `<a data-doc-id="${hit.doc_id}" href="#">${hit.doc_id}</a> ${facts}`;
    host.appendChild(row);
  }

  const pivotHeading = document.createElement("h3");
  pivotHeading.textContent = "Risk-acknowledgment pivots";
  host.appendChild(pivotHeading);
  for (const result of payload.ack_pivot) {
    const row = document.createElement("p");
    if (result.status !== "pivot") {
      row.textContent = `${result.doc_id}: ${result.status.replace("_", " ")}`;
    } else {
      const first = result.evidence[0];
      row.innerHTML =
        `<a data-doc-id="${result.doc_id}" data-key="${first?.ack.key ?? ""}" href="#">${result.doc_id}</a>: ` +
        result.evidence
          .map((e) => `${e.ack.code}@${e.ack.start} → ${e.response.code}@${e.response.start}`)
          .join("; ");
    }
    host.appendChild(row);
  }

  host.querySelectorAll<HTMLAnchorElement>("a[data-doc-id]").forEach((link) => {
    link.addEventListener("click", (event) => {
      event.preventDefault();
      const docId = link.dataset.docId;
      const key = link.dataset.key;
      if (!docId) return;
      void openDocument(docId).then(() => {
        if (key) scrollToKey(key);
      });
    });
  });
}

function switchView(view: View): void {
  state = { ...state, view };
  document.querySelectorAll<HTMLElement>(".view").forEach((panel) => {
    panel.classList.toggle("visible", panel.id === `view-${view}`);
  });
  document.querySelectorAll<HTMLButtonElement>("#tabs button").forEach((tab) => {
    tab.classList.toggle("active", tab.dataset.view === view);
  });
  if (view !== "reader") void renderView(view);
}

// ---------------------------------------------------------------------------
// Boot

async function boot(): Promise<void> {
  scheme = await client.scheme();
  const listing = await client.documents();
  documents = listing.body;
  state = { ...state, revision: listing.revision };
  renderPalette();
  renderDocumentList();
  el<HTMLDivElement>("reader").addEventListener("mouseup", () => {
    const span = selectionToSpan();
    if (span) {
      state = { ...state, selection: span };
      renderSelectionBar();
    }
  });
  document.querySelectorAll<HTMLButtonElement>("#tabs button").forEach((tab) => {
    tab.addEventListener("click", () => switchView((tab.dataset.view ?? "reader") as View));
  });
  if (documents[0]) await openDocument(documents[0].id);
}

void boot().catch((error) => {
  document.body.innerHTML = `<p class="boot-error">Cannot reach the tsdlab service: ${String(error)}</p>`;
});
