"""Local HTTP API for the annotation workbench.

Single-writer semantics: mutations are serialized behind a lock and bump a
revision counter; reads work off the last committed snapshot. Analysis views
are served as the exact bytes the CLI would write for the same data.
"""

from __future__ import annotations

import datetime
import threading
from pathlib import Path

from fastapi import FastAPI, Request, Response

from . import analysis, report
from .annotation import (
    Annotation,
    AnnotationSet,
    add_annotation,
    annotations_for,
    remove_annotation,
    save_annotations,
)
from .errors import (
    AnnotationError,
    DuplicateAnnotationError,
    SpanOutOfBoundsError,
    UnknownCodeError,
    UnknownDocumentError,
)
from .metrics import text_metrics
from .schema import serialize_scheme

ANALYSIS_VIEWS = ("spectrum", "dynamics", "patterns", "stats")


class Session:
    """Loaded corpus + annotation set with a monotonically increasing revision."""

    def __init__(self, corpus, scheme, aset: AnnotationSet, annotations_path: Path | None):
        self.corpus = corpus
        self.scheme = scheme
        self.annotations_path = annotations_path
        self._lock = threading.Lock()
        self._state: tuple[AnnotationSet, int] = (aset, 0)

    def snapshot(self) -> tuple[AnnotationSet, int]:
        return self._state

    @property
    def lock(self) -> threading.Lock:
        return self._lock

    def commit(self, aset: AnnotationSet) -> int:
        # Caller must hold the lock.
        revision = self._state[1] + 1
        if self.annotations_path is not None:
            save_annotations(aset, self.annotations_path)
        self._state = (aset, revision)
        return revision


def _annotation_record(ann: Annotation) -> dict:
    return {
        "key": ann.key,
        "doc_id": ann.doc_id,
        "start": ann.start,
        "end": ann.end,
        "code": ann.code,
        "annotator": ann.annotator,
        "created_at": ann.created_at.isoformat(),
        "note": ann.note,
    }


def _document_record(doc, with_body: bool = False) -> dict:
    record = {
        "id": doc.id,
        "author": doc.author,
        "title": doc.title,
        "date": doc.date.isoformat(),
        "text_type": doc.text_type,
        "topic": doc.topic,
        "word_count": doc.word_count,
    }
    if with_body:
        record["body"] = doc.body
    return record


def create_app(
    corpus,
    scheme,
    aset: AnnotationSet,
    *,
    annotations_path: str | Path | None = None,
    thresholds: analysis.ProfileThresholds = analysis.DEFAULT_THRESHOLDS,
    optimism_threshold: float = analysis.DEFAULT_OPTIMISM_THRESHOLD,
    counter_threshold: float = analysis.DEFAULT_COUNTER_THRESHOLD,
    events=(),
    ui_dir: str | Path | None = None,
) -> FastAPI:
    session = Session(
        corpus,
        scheme,
        aset,
        Path(annotations_path) if annotations_path is not None else None,
    )
    app = FastAPI(title="tsdlab service", docs_url=None, redoc_url=None)
    app.state.session = session
    scheme_bytes = serialize_scheme(scheme).encode("utf-8")

    def json_response(payload: dict, revision: int, status_code: int = 200) -> Response:
        return Response(
            content=report.to_json_bytes(payload),
            status_code=status_code,
            media_type="application/json",
            headers={"X-Revision": str(revision)},
        )

    def error_response(status_code: int, message: str, revision: int, violations=()) -> Response:
        payload = {"error": message}
        if violations:
            payload["violations"] = list(violations)
        return json_response(payload, revision, status_code)

    @app.get("/documents")
    def list_documents() -> Response:
        _, revision = session.snapshot()
        payload = {
            "revision": revision,
            "documents": [_document_record(d) for d in corpus.documents],
        }
        return json_response(payload, revision)

    @app.get("/documents/{doc_id}")
    def get_document(doc_id: str) -> Response:
        _, revision = session.snapshot()
        if doc_id not in corpus:
            return error_response(404, f"unknown document {doc_id!r}", revision)
        payload = {
            "revision": revision,
            "document": _document_record(corpus.document(doc_id), with_body=True),
        }
        return json_response(payload, revision)

    @app.get("/documents/{doc_id}/annotations")
    def get_document_annotations(doc_id: str) -> Response:
        current, revision = session.snapshot()
        if doc_id not in corpus:
            return error_response(404, f"unknown document {doc_id!r}", revision)
        payload = {
            "revision": revision,
            "annotations": [_annotation_record(a) for a in annotations_for(current, doc_id)],
        }
        return json_response(payload, revision)

    @app.get("/documents/{doc_id}/metrics")
    def get_document_metrics(doc_id: str) -> Response:
        current, revision = session.snapshot()
        if doc_id not in corpus:
            return error_response(404, f"unknown document {doc_id!r}", revision)
        m = text_metrics(corpus.document(doc_id), current, scheme)
        payload = {"revision": revision, "metrics": report.document_metrics_payload(m, scheme.version)}
        return json_response(payload, revision)

    @app.get("/scheme")
    def get_scheme() -> Response:
        _, revision = session.snapshot()
        return Response(
            content=scheme_bytes,
            media_type="application/json",
            headers={"X-Revision": str(revision)},
        )

    @app.post("/annotations")
    async def post_annotation(request: Request) -> Response:
        try:
            payload = await request.json()
        except Exception:
            _, revision = session.snapshot()
            return error_response(400, "request body is not valid JSON", revision)
        if not isinstance(payload, dict):
            _, revision = session.snapshot()
            return error_response(400, "request body must be a JSON object", revision)

        missing = [k for k in ("doc_id", "start", "end", "code", "annotator") if k not in payload]
        if missing:
            _, revision = session.snapshot()
            return error_response(
                400, "annotation payload is incomplete", revision,
                violations=[f"missing field {name!r}" for name in missing],
            )
        if not (isinstance(payload["start"], int) and isinstance(payload["end"], int)):
            _, revision = session.snapshot()
            return error_response(400, "start and end must be integers", revision)
        created_raw = payload.get("created_at")
        if created_raw is None:
            created_at = datetime.datetime.now(datetime.timezone.utc).replace(microsecond=0)
        else:
            try:
                created_at = datetime.datetime.fromisoformat(created_raw)
            except (TypeError, ValueError):
                _, revision = session.snapshot()
                return error_response(400, f"invalid created_at {created_raw!r}", revision)

        ann = Annotation(
            doc_id=payload["doc_id"],
            start=payload["start"],
            end=payload["end"],
            code=payload["code"],
            annotator=payload["annotator"],
            created_at=created_at,
            note=payload.get("note"),
        )
        with session.lock:
            current, revision = session.snapshot()
            try:
                updated = add_annotation(current, ann, corpus, scheme)
            except UnknownDocumentError as exc:
                return error_response(404, str(exc), revision)
            except DuplicateAnnotationError as exc:
                return error_response(409, str(exc), revision)
            except (SpanOutOfBoundsError, UnknownCodeError) as exc:
                return error_response(400, "annotation failed validation", revision, violations=[str(exc)])
            revision = session.commit(updated)
        m = text_metrics(corpus.document(ann.doc_id), updated, scheme)
        body = {
            "revision": revision,
            "annotation": _annotation_record(ann),
            "metrics": report.document_metrics_payload(m, scheme.version),
        }
        return json_response(body, revision)

    @app.delete("/annotations/{key}")
    def delete_annotation(key: str) -> Response:
        with session.lock:
            current, revision = session.snapshot()
            try:
                updated, removed = remove_annotation(current, key)
            except AnnotationError as exc:
                return error_response(404, str(exc), revision)
            revision = session.commit(updated)
        m = text_metrics(corpus.document(removed.doc_id), updated, scheme)
        body = {
            "revision": revision,
            "deleted": key,
            "metrics": report.document_metrics_payload(m, scheme.version),
        }
        return json_response(body, revision)

    @app.get("/analysis/{view}")
    def get_analysis(view: str) -> Response:
        current, revision = session.snapshot()
        if view not in ANALYSIS_VIEWS:
            return error_response(404, f"unknown view {view!r}", revision)
        ms = [text_metrics(doc, current, scheme) for doc in corpus.documents]
        if view == "spectrum":
            dataset = report.spectrum_data(ms, corpus, scheme.version, thresholds)
            payload = report.spectrum_payload(dataset)
        elif view == "dynamics":
            dataset = report.dynamics_data(ms, corpus, scheme.version, events)
            payload = report.dynamics_payload(dataset)
        elif view == "stats":
            payload = report.stats_payload(analysis.corpus_stats(ms), scheme.version)
        else:
            bto_hits = [
                hit
                for m in ms
                if (hit := analysis.detect_bto(m, scheme, optimism_threshold, counter_threshold))
            ]
            pivots = analysis.ack_pivot_scan(current, corpus, scheme)
            count, doc_ids = analysis.co_occurrence(current, corpus, scheme, "CT-UF", "TC-PD")
            payload = report.patterns_payload(
                bto_hits, pivots, ("CT-UF", "TC-PD", count, doc_ids), scheme.version
            )
        return json_response(payload, revision)

    if ui_dir is not None:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=str(ui_dir), html=True), name="ui")

    return app
