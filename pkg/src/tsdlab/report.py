"""Chart datasets and exports: spectrum, dynamics, stats, patterns.

Every consumer (CLI, HTTP service) renders through the payload builders and
byte-serializers here, so identical inputs always produce identical bytes.
JSON keeps full precision; CSV rounds to two decimals and is the only lossy
surface.
"""

from __future__ import annotations

import csv
import datetime
import io
import json
from dataclasses import dataclass
from pathlib import Path

from .analysis import (
    CorpusStats,
    DynamicsSummary,
    PatternHit,
    PivotResult,
    ProfileLabel,
    ProfileThresholds,
    DEFAULT_THRESHOLDS,
    classify_profile,
)
from .errors import ReportError
from .metrics import TextMetrics


@dataclass(frozen=True)
class SpectrumPoint:
    doc_id: str
    author: str
    date: datetime.date
    tsdb: float
    tsda: float
    profile: str


@dataclass(frozen=True)
class SpectrumDataset:
    scheme_version: str
    points: tuple[SpectrumPoint, ...]
    excluded: tuple[str, ...]


@dataclass(frozen=True)
class EventMarker:
    date: datetime.date
    label: str


@dataclass(frozen=True)
class DynamicsSeriesPoint:
    doc_id: str
    date: datetime.date
    tsda: float


@dataclass(frozen=True)
class DynamicsSeries:
    author: str
    points: tuple[DynamicsSeriesPoint, ...]


@dataclass(frozen=True)
class DynamicsDataset:
    scheme_version: str
    series: tuple[DynamicsSeries, ...]
    events: tuple[EventMarker, ...]


def spectrum_data(
    metrics: list[TextMetrics],
    corpus,
    scheme_version: str,
    thresholds: ProfileThresholds = DEFAULT_THRESHOLDS,
) -> SpectrumDataset:
    """One (tsdb, tsda, profile) point per defined-TSDB document."""
    points: list[SpectrumPoint] = []
    excluded: list[str] = []
    for m in metrics:
        if m.tsdb is None:
            excluded.append(m.doc_id)
            continue
        doc = corpus.document(m.doc_id)
        label = classify_profile(m, thresholds)
        points.append(
            SpectrumPoint(
                doc_id=m.doc_id,
                author=doc.author,
                date=doc.date,
                tsdb=m.tsdb,
                tsda=m.tsda,
                profile=label.profile,
            )
        )
    points.sort(key=lambda p: p.doc_id)
    excluded.sort()
    return SpectrumDataset(scheme_version, tuple(points), tuple(excluded))


def dynamics_data(
    metrics: list[TextMetrics],
    corpus,
    scheme_version: str,
    events=(),
) -> DynamicsDataset:
    """Per-author date-ordered TSDA series plus pass-through event markers."""
    by_author: dict[str, list[DynamicsSeriesPoint]] = {}
    for m in metrics:
        doc = corpus.document(m.doc_id)
        by_author.setdefault(doc.author, []).append(
            DynamicsSeriesPoint(doc_id=m.doc_id, date=doc.date, tsda=m.tsda)
        )
    series = tuple(
        DynamicsSeries(author, tuple(sorted(points, key=lambda p: (p.date, p.doc_id))))
        for author, points in sorted(by_author.items())
    )
    return DynamicsDataset(scheme_version, series, tuple(events))


def load_events(path: str | Path) -> tuple[EventMarker, ...]:
    """Read the events config: a JSON list of {date, label} objects."""
    path = Path(path)
    try:
        raw = json.loads(path.read_text(encoding="utf-8"))
    except OSError as exc:
        raise ReportError(f"cannot read events file {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ReportError(f"events file {path} is not valid JSON: {exc}") from exc
    if not isinstance(raw, list):
        raise ReportError(f"events file {path} must contain a JSON list")
    events = []
    for entry in raw:
        try:
            when = datetime.date.fromisoformat(entry["date"])
        except (KeyError, TypeError, ValueError):
            raise ReportError(f"events file {path}: malformed event date in {entry!r}") from None
        label = entry.get("label", "")
        events.append(EventMarker(date=when, label=label))
    return tuple(events)


# ---------------------------------------------------------------------------
# Display helpers


def fmt2(value: float | None) -> str:
    """Two-decimal display string; negative zero normalizes to 0.00."""
    if value is None:
        return "n/a"
    text = f"{value:.2f}"
    return "0.00" if text == "-0.00" else text


# ---------------------------------------------------------------------------
# Canonical payloads (dict form of each view, stable key order)


def spectrum_payload(dataset: SpectrumDataset) -> dict:
    return {
        "scheme_version": dataset.scheme_version,
        "points": [
            {
                "doc_id": p.doc_id,
                "author": p.author,
                "date": p.date.isoformat(),
                "tsdb": p.tsdb,
                "tsda": p.tsda,
                "profile": p.profile,
            }
            for p in dataset.points
        ],
        "excluded": list(dataset.excluded),
    }


def dynamics_payload(dataset: DynamicsDataset) -> dict:
    return {
        "scheme_version": dataset.scheme_version,
        "series": [
            {
                "author": s.author,
                "points": [
                    {"doc_id": p.doc_id, "date": p.date.isoformat(), "tsda": p.tsda}
                    for p in s.points
                ],
            }
            for s in dataset.series
        ],
        "events": [{"date": e.date.isoformat(), "label": e.label} for e in dataset.events],
    }


def stats_payload(stats: CorpusStats, scheme_version: str) -> dict:
    return {
        "scheme_version": scheme_version,
        "n": stats.n,
        "n_tsdb": stats.n_tsdb,
        "tsda": {
            "mean": stats.mean_tsda,
            "sd": stats.sd_tsda,
            "min": stats.min_tsda,
            "max": stats.max_tsda,
        },
        "tsdb": {
            "mean": stats.mean_tsdb,
            "sd": stats.sd_tsdb,
            "min": stats.min_tsdb,
            "max": stats.max_tsdb,
        },
    }


def profiles_payload(labels: list[ProfileLabel], unclassified: list[str], scheme_version: str) -> dict:
    return {
        "scheme_version": scheme_version,
        "profiles": [
            {"doc_id": l.doc_id, "profile": l.profile, "rule_fired": l.rule_fired}
            for l in sorted(labels, key=lambda l: l.doc_id)
        ],
        "unclassified": sorted(unclassified),
    }


def patterns_payload(
    bto_hits: list[PatternHit],
    pivot_results: dict[str, PivotResult],
    cooccurrence: tuple[str, str, int, list[str]],
    scheme_version: str,
) -> dict:
    code_a, code_b, count, doc_ids = cooccurrence
    return {
        "scheme_version": scheme_version,
        "bto": [
            {"doc_id": h.doc_id, "evidence": list(h.evidence)}
            for h in sorted(bto_hits, key=lambda h: h.doc_id)
        ],
        "ack_pivot": [
            {"doc_id": r.doc_id, "status": r.status, "evidence": list(r.evidence)}
            for r in sorted(pivot_results.values(), key=lambda r: r.doc_id)
        ],
        "co_occurrence": {
            "codes": [code_a, code_b],
            "count": count,
            "doc_ids": doc_ids,
        },
    }


def metrics_payload(metrics: list[TextMetrics], scheme_version: str) -> dict:
    return {
        "scheme_version": scheme_version,
        "documents": [
            {"doc_id": m.doc_id, "tsda": m.tsda, "tsdb": m.tsdb}
            for m in sorted(metrics, key=lambda m: m.doc_id)
        ],
    }


def document_metrics_payload(m: TextMetrics, scheme_version: str) -> dict:
    """Full-precision per-document metrics, as served to the workbench."""
    return {
        "doc_id": m.doc_id,
        "scheme_version": scheme_version,
        "tsda": m.tsda,
        "tsdb": m.tsdb,
        "components": {
            "tce": m.components.tce,
            "trr": m.components.trr,
            "anti_tce": m.components.anti_tce,
            "anti_trr": m.components.anti_trr,
            "pro": m.components.pro,
            "anti": m.components.anti,
        },
        "frequencies": {code: freq for code, freq in sorted(m.frequencies.items()) if freq},
    }


def dynamics_summary_payload(summary: DynamicsSummary, scheme_version: str) -> dict:
    def polarization(p):
        return {"n": p.n, "spread": p.spread, "sd": p.sd}

    return {
        "scheme_version": scheme_version,
        "cut_date": summary.cut_date.isoformat(),
        "trajectories": [
            {
                "author": t.author,
                "points": [
                    {
                        "doc_id": p.doc_id,
                        "date": p.date.isoformat(),
                        "tsda": p.tsda,
                        "tsdb": p.tsdb,
                    }
                    for p in t.points
                ],
                "delta_tsda": t.delta_tsda,
                "delta_tsdb": t.delta_tsdb,
            }
            for t in summary.trajectories
        ],
        "n_multi_text": summary.n_multi_text,
        "n_increasing": summary.n_increasing,
        "increase_fraction": summary.increase_fraction,
        "before": polarization(summary.before),
        "after": polarization(summary.after),
    }


# ---------------------------------------------------------------------------
# Byte serializations


def to_json_bytes(payload: dict) -> bytes:
    """Canonical JSON bytes: UTF-8, two-space indent, stable key order."""
    return (json.dumps(payload, ensure_ascii=False, indent=2) + "\n").encode("utf-8")


def spectrum_csv_bytes(dataset: SpectrumDataset) -> bytes:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["doc_id", "author", "date", "tsdb", "tsda", "profile"])
    for p in dataset.points:
        writer.writerow([p.doc_id, p.author, p.date.isoformat(), fmt2(p.tsdb), fmt2(p.tsda), p.profile])
    return buffer.getvalue().encode("utf-8")


def dynamics_csv_bytes(dataset: DynamicsDataset) -> bytes:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["author", "date", "tsda"])
    for series in dataset.series:
        for p in series.points:
            writer.writerow([series.author, p.date.isoformat(), fmt2(p.tsda)])
    return buffer.getvalue().encode("utf-8")


def metrics_csv_bytes(metrics: list[TextMetrics]) -> bytes:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["doc_id", "tsda", "tsdb"])
    for m in sorted(metrics, key=lambda m: m.doc_id):
        writer.writerow([m.doc_id, fmt2(m.tsda), "" if m.tsdb is None else fmt2(m.tsdb)])
    return buffer.getvalue().encode("utf-8")


def export(dataset, format: str, destination: str | Path) -> Path:
    """Write a dataset to ``destination`` as csv or json; returns the path."""
    if isinstance(dataset, SpectrumDataset):
        writers = {"csv": spectrum_csv_bytes, "json": lambda d: to_json_bytes(spectrum_payload(d))}
    elif isinstance(dataset, DynamicsDataset):
        writers = {"csv": dynamics_csv_bytes, "json": lambda d: to_json_bytes(dynamics_payload(d))}
    else:
        raise ReportError(f"cannot export {type(dataset).__name__}")
    if format not in writers:
        raise ReportError(f"unknown export format {format!r}: expected csv or json")
    destination = Path(destination)
    destination.write_bytes(writers[format](dataset))
    return destination
