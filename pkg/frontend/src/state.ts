/**
 * Client-side session state. The UI never computes metrics itself: every
 * number displayed comes from a service response, and the revision header
 * tells us when our snapshot went stale.
 */

import type { AnnotationRecord, DocMetrics } from "./types.js";

export type View = "reader" | "spectrum" | "dynamics" | "patterns";

export interface Selection {
  start: number; // scalar offsets
  end: number;
}

export interface WorkbenchState {
  revision: number;
  activeDocId: string | null;
  selection: Selection | null;
  annotations: AnnotationRecord[];
  metrics: DocMetrics | null;
  view: View;
}

export function initialState(): WorkbenchState {
  return {
    revision: 0,
    activeDocId: null,
    selection: null,
    annotations: [],
    metrics: null,
    view: "reader",
  };
}

export type RevisionCheck = "in-sync" | "refetch";

/**
 * Reconcile a response revision with ours. A read should come back at our
 * revision; a mutation should come back at exactly ours + 1. Anything else
 * means another writer got in between and we must refetch.
 */
export function checkRevision(local: number, server: number, mutated: boolean): RevisionCheck {
  const expected = mutated ? local + 1 : local;
  return server === expected ? "in-sync" : "refetch";
}

export function applyAnnotationCreated(
  state: WorkbenchState,
  annotation: AnnotationRecord,
  metrics: DocMetrics,
  revision: number,
): WorkbenchState {
  const annotations =
    annotation.doc_id === state.activeDocId
      ? [...state.annotations, annotation].sort(
          (a, b) => a.start - b.start || a.end - b.end || a.code.localeCompare(b.code),
        )
      : state.annotations;
  return { ...state, annotations, metrics, revision, selection: null };
}

export function applyAnnotationDeleted(
  state: WorkbenchState,
  key: string,
  metrics: DocMetrics,
  revision: number,
): WorkbenchState {
  return {
    ...state,
    annotations: state.annotations.filter((a) => a.key !== key),
    metrics,
    revision,
  };
}
