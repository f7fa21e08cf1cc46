/** Payload shapes served by the tsdlab HTTP API. */

export interface SchemeCode {
  id: string;
  name: string;
  description: string;
  family: string;
  anti_of?: string;
}

export interface SchemeAssignment {
  code_id: string;
  component: "TCE" | "TRR" | "ANTI_TCE" | "ANTI_TRR";
  weight: number;
}

export interface SchemeFile {
  name: string;
  version: string;
  codes: SchemeCode[];
  assignments: SchemeAssignment[];
}

export interface DocumentInfo {
  id: string;
  author: string;
  title: string;
  date: string;
  text_type: string;
  topic: string;
  word_count: number;
  body?: string;
}

export interface AnnotationRecord {
  key: string;
  doc_id: string;
  start: number;
  end: number;
  code: string;
  annotator: string;
  created_at: string;
  note: string | null;
}

export interface AnnotationPayload {
  doc_id: string;
  start: number;
  end: number;
  code: string;
  annotator: string;
  created_at?: string;
  note?: string | null;
}

export interface DocMetrics {
  doc_id: string;
  scheme_version: string;
  tsda: number;
  tsdb: number | null;
  components: {
    tce: number;
    trr: number;
    anti_tce: number;
    anti_trr: number;
    pro: number;
    anti: number;
  };
  frequencies: Record<string, number>;
}

export interface SpectrumPoint {
  doc_id: string;
  author: string;
  date: string;
  tsdb: number;
  tsda: number;
  profile: string;
}

export interface SpectrumPayload {
  scheme_version: string;
  points: SpectrumPoint[];
  excluded: string[];
}

export interface DynamicsPayload {
  scheme_version: string;
  series: {
    author: string;
    points: { doc_id: string; date: string; tsda: number }[];
  }[];
  events: { date: string; label: string }[];
}

export interface EvidenceRef {
  key: string;
  code: string;
  start: number;
  end: number;
}

export interface PatternsPayload {
  scheme_version: string;
  bto: { doc_id: string; evidence: Record<string, unknown>[] }[];
  ack_pivot: {
    doc_id: string;
    status: "pivot" | "no_pivot" | "not_applicable";
    evidence: { ack: EvidenceRef; response: EvidenceRef }[];
  }[];
  co_occurrence: { codes: string[]; count: number; doc_ids: string[] };
}

export interface StatsPayload {
  scheme_version: string;
  n: number;
  n_tsdb: number;
  tsda: { mean: number; sd: number; min: number; max: number };
  tsdb: {
    mean: number | null;
    sd: number | null;
    min: number | null;
    max: number | null;
  };
}
