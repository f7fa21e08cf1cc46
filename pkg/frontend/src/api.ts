/** Typed client for the tsdlab HTTP API. */

import type {
  AnnotationPayload,
  AnnotationRecord,
  DocMetrics,
  DocumentInfo,
  DynamicsPayload,
  PatternsPayload,
  SchemeFile,
  SpectrumPayload,
  StatsPayload,
} from "./types.js";

export class ApiError extends Error {
  status: number;
  violations: string[];

  constructor(status: number, message: string, violations: string[] = []) {
    super(message);
    this.status = status;
    this.violations = violations;
  }
}

export interface ApiResponse<T> {
  body: T;
  revision: number;
}

export class ApiClient {
  constructor(private baseUrl: string = "") {}

  private async request<T>(path: string, init?: RequestInit): Promise<ApiResponse<T>> {
    const response = await fetch(this.baseUrl + path, init);
    const revision = Number(response.headers.get("X-Revision") ?? "0");
    const text = await response.text();
    let parsed: unknown = null;
    try {
      parsed = text ? JSON.parse(text) : null;
    } catch {
      parsed = null;
    }
    if (!response.ok) {
      const body = (parsed ?? {}) as { error?: string; violations?: string[] };
      throw new ApiError(
        response.status,
        body.error ?? `request failed with status ${response.status}`,
        body.violations ?? [],
      );
    }
    return { body: parsed as T, revision };
  }

  async documents(): Promise<ApiResponse<DocumentInfo[]>> {
    const r = await this.request<{ documents: DocumentInfo[] }>("/documents");
    return { body: r.body.documents, revision: r.revision };
  }

  async document(id: string): Promise<ApiResponse<DocumentInfo>> {
    const r = await this.request<{ document: DocumentInfo }>(`/documents/${encodeURIComponent(id)}`);
    return { body: r.body.document, revision: r.revision };
  }

  async annotations(docId: string): Promise<ApiResponse<AnnotationRecord[]>> {
    const r = await this.request<{ annotations: AnnotationRecord[] }>(
      `/documents/${encodeURIComponent(docId)}/annotations`,
    );
    return { body: r.body.annotations, revision: r.revision };
  }

  async metrics(docId: string): Promise<ApiResponse<DocMetrics>> {
    const r = await this.request<{ metrics: DocMetrics }>(
      `/documents/${encodeURIComponent(docId)}/metrics`,
    );
    return { body: r.body.metrics, revision: r.revision };
  }

  async scheme(): Promise<SchemeFile> {
    const r = await this.request<SchemeFile>("/scheme");
    return r.body;
  }

  async spectrum(): Promise<ApiResponse<SpectrumPayload>> {
    return this.request<SpectrumPayload>("/analysis/spectrum");
  }

  async dynamics(): Promise<ApiResponse<DynamicsPayload>> {
    return this.request<DynamicsPayload>("/analysis/dynamics");
  }

  async patterns(): Promise<ApiResponse<PatternsPayload>> {
    return this.request<PatternsPayload>("/analysis/patterns");
  }

  async stats(): Promise<ApiResponse<StatsPayload>> {
    return this.request<StatsPayload>("/analysis/stats");
  }

  async createAnnotation(
    payload: AnnotationPayload,
  ): Promise<ApiResponse<{ annotation: AnnotationRecord; metrics: DocMetrics }>> {
    const r = await this.request<{
      revision: number;
      annotation: AnnotationRecord;
      metrics: DocMetrics;
    }>("/annotations", {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(payload),
    });
    return { body: { annotation: r.body.annotation, metrics: r.body.metrics }, revision: r.revision };
  }

  async deleteAnnotation(key: string): Promise<ApiResponse<{ metrics: DocMetrics }>> {
    const r = await this.request<{ revision: number; metrics: DocMetrics }>(
      `/annotations/${encodeURIComponent(key)}`,
      { method: "DELETE" },
    );
    return { body: { metrics: r.body.metrics }, revision: r.revision };
  }
}
