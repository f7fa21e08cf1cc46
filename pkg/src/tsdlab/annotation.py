"""Standoff annotations: spans + codes over documents, with JSONL persistence.

Offsets count Unicode scalar values (Python string indices), 0-based, end
exclusive, so spans mean the same thing in every consumer including the
browser workbench. Overlapping and nested spans are allowed; each annotation
counts once.
"""

from __future__ import annotations

import datetime
import hashlib
import json
from collections import Counter
from dataclasses import dataclass
from pathlib import Path

from .errors import (
    AnnotationError,
    DuplicateAnnotationError,
    SpanOutOfBoundsError,
    UnknownCodeError,
    UnknownDocumentError,
)

_EXPORT_KEYS = ("doc_id", "start", "end", "code", "annotator", "created_at", "note")


@dataclass(frozen=True)
class Annotation:
    doc_id: str
    start: int
    end: int
    code: str
    annotator: str
    created_at: datetime.datetime
    note: str | None = None

    @property
    def identity(self) -> tuple:
        # Duplicate detection ignores created_at and note.
        return (self.doc_id, self.start, self.end, self.code, self.annotator)

    @property
    def key(self) -> str:
        """Stable addressable key derived from the identity tuple."""
        blob = "\x00".join(str(part) for part in self.identity).encode("utf-8")
        return hashlib.sha256(blob).hexdigest()[:16]


@dataclass(frozen=True)
class AnnotationViolation:
    kind: str
    annotation: Annotation
    message: str


@dataclass(frozen=True)
class AnnotationSet:
    scheme_version: str
    annotations: tuple[Annotation, ...] = ()

    def __post_init__(self):
        identities = set()
        for ann in self.annotations:
            if ann.identity in identities:
                raise DuplicateAnnotationError(
                    f"duplicate annotation {ann.code} on {ann.doc_id} "
                    f"[{ann.start}, {ann.end}) by {ann.annotator}"
                )
            identities.add(ann.identity)
        object.__setattr__(self, "_identities", frozenset(identities))

    def __len__(self) -> int:
        return len(self.annotations)

    def __contains__(self, ann: Annotation) -> bool:
        return ann.identity in self._identities

    def by_key(self, key: str) -> Annotation | None:
        for ann in self.annotations:
            if ann.key == key:
                return ann
        return None


def _span_sort_key(ann: Annotation):
    return (ann.doc_id, ann.start, ann.end, ann.code, ann.annotator, ann.created_at.isoformat())


def check_annotation(ann: Annotation, corpus, scheme) -> None:
    """Raise if the annotation does not fit the corpus and scheme."""
    if ann.doc_id not in corpus:
        raise UnknownDocumentError(f"unknown document {ann.doc_id!r}")
    if not scheme.has_code(ann.code):
        raise UnknownCodeError(f"unknown code {ann.code!r}")
    body_len = len(corpus.document(ann.doc_id).body)
    if not (0 <= ann.start < ann.end <= body_len):
        raise SpanOutOfBoundsError(
            f"out-of-bounds span [{ann.start}, {ann.end}) for document "
            f"{ann.doc_id!r} of length {body_len}"
        )


def add_annotation(aset: AnnotationSet, ann: Annotation, corpus, scheme) -> AnnotationSet:
    """Return a new set including ``ann``; the input set is left untouched."""
    check_annotation(ann, corpus, scheme)
    if ann in aset:
        raise DuplicateAnnotationError(
            f"duplicate annotation {ann.code} on {ann.doc_id} [{ann.start}, {ann.end})"
        )
    return AnnotationSet(aset.scheme_version, aset.annotations + (ann,))


def remove_annotation(aset: AnnotationSet, key: str) -> tuple[AnnotationSet, Annotation]:
    """Return (set without the keyed annotation, the removed annotation)."""
    ann = aset.by_key(key)
    if ann is None:
        raise AnnotationError(f"no annotation with key {key!r}")
    rest = tuple(a for a in aset.annotations if a.key != key)
    return AnnotationSet(aset.scheme_version, rest), ann


def annotations_for(aset: AnnotationSet, doc_id: str, annotators=None) -> tuple[Annotation, ...]:
    """Annotations on one document, optionally restricted to some annotators."""
    selected = (a for a in aset.annotations if a.doc_id == doc_id)
    if annotators is not None:
        allowed = set(annotators)
        selected = (a for a in selected if a.annotator in allowed)
    return tuple(sorted(selected, key=_span_sort_key))


def code_counts(aset: AnnotationSet, doc_id: str, *, corpus=None, annotators=None) -> dict[str, int]:
    """Raw per-code annotation counts for one document.

    Codes without annotations are simply absent; treat missing keys as zero.
    """
    if corpus is not None and doc_id not in corpus:
        raise UnknownDocumentError(f"unknown document {doc_id!r}")
    counts = Counter(a.code for a in annotations_for(aset, doc_id, annotators))
    return dict(sorted(counts.items()))


def validate_annotations(aset: AnnotationSet, corpus, scheme) -> list[AnnotationViolation]:
    """List every annotation with a bad span, unknown code, or unknown document."""
    violations: list[AnnotationViolation] = []
    for ann in sorted(aset.annotations, key=_span_sort_key):
        if ann.doc_id not in corpus:
            violations.append(
                AnnotationViolation("unknown-document", ann, f"unknown document {ann.doc_id!r}")
            )
            continue
        if not scheme.has_code(ann.code):
            violations.append(AnnotationViolation("unknown-code", ann, f"unknown code {ann.code!r}"))
        body_len = len(corpus.document(ann.doc_id).body)
        if not (0 <= ann.start < ann.end <= body_len):
            violations.append(
                AnnotationViolation(
                    "out-of-bounds",
                    ann,
                    f"span [{ann.start}, {ann.end}) outside document of length {body_len}",
                )
            )
    return violations


def _annotation_to_record(ann: Annotation) -> dict:
    return {
        "doc_id": ann.doc_id,
        "start": ann.start,
        "end": ann.end,
        "code": ann.code,
        "annotator": ann.annotator,
        "created_at": ann.created_at.isoformat(),
        "note": ann.note,
    }


def _annotation_from_record(record: dict, where: str) -> Annotation:
    missing = [k for k in _EXPORT_KEYS[:-1] if k not in record]
    if missing:
        raise AnnotationError(f"{where}: annotation record missing fields {missing}")
    try:
        created_at = datetime.datetime.fromisoformat(record["created_at"])
    except (TypeError, ValueError):
        raise AnnotationError(
            f"{where}: invalid created_at {record['created_at']!r}"
        ) from None
    start, end = record["start"], record["end"]
    if not (isinstance(start, int) and isinstance(end, int)):
        raise AnnotationError(f"{where}: start/end must be integers")
    return Annotation(
        doc_id=record["doc_id"],
        start=start,
        end=end,
        code=record["code"],
        annotator=record["annotator"],
        created_at=created_at,
        note=record.get("note"),
    )


def parse_annotations(text: str, scheme_version: str, source: str = "<memory>") -> AnnotationSet:
    """Parse a JSON Lines annotations file; errors carry file and line."""
    annotations: list[Annotation] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        where = f"{source}:{lineno}"
        try:
            record = json.loads(line)
        except json.JSONDecodeError as exc:
            raise AnnotationError(f"{where}: invalid JSON: {exc}") from exc
        if not isinstance(record, dict):
            raise AnnotationError(f"{where}: expected a JSON object per line")
        annotations.append(_annotation_from_record(record, where))
    return AnnotationSet(scheme_version, tuple(annotations))


def load_annotations(path: str | Path, scheme) -> AnnotationSet:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise AnnotationError(f"cannot read annotations file {path}: {exc}") from exc
    return parse_annotations(text, scheme.version, source=str(path))


def serialize_annotations(aset: AnnotationSet) -> str:
    """Render the set as JSON Lines, ordered by (doc, start, end, code)."""
    lines = [
        json.dumps(_annotation_to_record(ann), ensure_ascii=False, separators=(",", ":"))
        for ann in sorted(aset.annotations, key=_span_sort_key)
    ]
    return "".join(line + "\n" for line in lines)


def save_annotations(aset: AnnotationSet, path: str | Path) -> None:
    """Write the annotations file atomically (temp file + rename)."""
    path = Path(path)
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_text(serialize_annotations(aset), encoding="utf-8")
    tmp.replace(path)
