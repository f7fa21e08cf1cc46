"""Corpus-level analysis: statistics, profiles, discursive patterns, dynamics."""

from __future__ import annotations

import datetime
import statistics
from dataclasses import dataclass

from .annotation import AnnotationSet, annotations_for
from .errors import MetricsError, UnknownCodeError
from .metrics import TextMetrics
from .schema import CodingScheme

PROFILES = ("pro_imbalanced", "critical", "balanced")

# Launch of ChatGPT; default boundary for the before/after polarization split.
DEFAULT_CUT_DATE = datetime.date(2022, 11, 30)

DEFAULT_OPTIMISM_THRESHOLD = 2.0  # combined CT-UF + CT-MP frequency per 1,000 words
DEFAULT_COUNTER_THRESHOLD = 1.0   # ADD-SN frequency per 1,000 words


@dataclass(frozen=True)
class CorpusStats:
    """Corpus aggregates; TSDB fields cover only defined-TSDB documents."""

    n: int
    n_tsdb: int
    mean_tsda: float
    sd_tsda: float
    min_tsda: float
    max_tsda: float
    mean_tsdb: float | None
    sd_tsdb: float | None
    min_tsdb: float | None
    max_tsdb: float | None


@dataclass(frozen=True)
class ProfileThresholds:
    balanced_tsdb: float = 0.4
    critical_tsda: float = 0.0


DEFAULT_THRESHOLDS = ProfileThresholds()


@dataclass(frozen=True)
class ProfileLabel:
    doc_id: str
    profile: str
    rule_fired: str


@dataclass(frozen=True)
class PatternHit:
    kind: str
    doc_id: str
    evidence: tuple[dict, ...]


@dataclass(frozen=True)
class PivotResult:
    """Per-document outcome of the risk-acknowledgment pivot scan."""

    doc_id: str
    status: str  # not_applicable | pivot | no_pivot
    evidence: tuple[dict, ...] = ()


@dataclass(frozen=True)
class TrajectoryPoint:
    doc_id: str
    date: datetime.date
    tsda: float
    tsdb: float | None


@dataclass(frozen=True)
class Trajectory:
    author: str
    points: tuple[TrajectoryPoint, ...]

    @property
    def delta_tsda(self) -> float | None:
        if len(self.points) < 2:
            return None
        return self.points[-1].tsda - self.points[0].tsda

    @property
    def delta_tsdb(self) -> float | None:
        if len(self.points) < 2:
            return None
        first, last = self.points[0].tsdb, self.points[-1].tsdb
        if first is None or last is None:
            return None
        return last - first


@dataclass(frozen=True)
class Polarization:
    n: int
    spread: float | None
    sd: float | None


@dataclass(frozen=True)
class DynamicsSummary:
    cut_date: datetime.date
    trajectories: tuple[Trajectory, ...]
    n_multi_text: int
    n_increasing: int
    before: Polarization
    after: Polarization

    @property
    def increase_fraction(self) -> float | None:
        if self.n_multi_text == 0:
            return None
        return self.n_increasing / self.n_multi_text


def corpus_stats(metrics: list[TextMetrics]) -> CorpusStats:
    """Means and population standard deviations over all documents."""
    if not metrics:
        raise MetricsError("cannot compute statistics of an empty metrics list")
    tsdas = [m.tsda for m in metrics]
    tsdbs = [m.tsdb for m in metrics if m.tsdb is not None]
    stats = CorpusStats(
        n=len(tsdas),
        n_tsdb=len(tsdbs),
        mean_tsda=statistics.fmean(tsdas),
        sd_tsda=statistics.pstdev(tsdas),
        min_tsda=min(tsdas),
        max_tsda=max(tsdas),
        mean_tsdb=statistics.fmean(tsdbs) if tsdbs else None,
        sd_tsdb=statistics.pstdev(tsdbs) if tsdbs else None,
        min_tsdb=min(tsdbs) if tsdbs else None,
        max_tsdb=max(tsdbs) if tsdbs else None,
    )
    return stats


def classify_profile(
    m: TextMetrics, thresholds: ProfileThresholds = DEFAULT_THRESHOLDS
) -> ProfileLabel | None:
    """Assign a discourse profile; None for documents with undefined TSDB.

    Rules fire in order: balance first, then the adherence sign.
    """
    if m.tsdb is None:
        return None
    t = thresholds
    if m.tsdb >= t.balanced_tsdb:
        return ProfileLabel(m.doc_id, "balanced", f"tsdb>={t.balanced_tsdb:g}")
    if m.tsda < t.critical_tsda:
        return ProfileLabel(m.doc_id, "critical", f"tsda<{t.critical_tsda:g}")
    if m.tsda > t.critical_tsda:
        return ProfileLabel(
            m.doc_id, "pro_imbalanced", f"tsda>{t.critical_tsda:g} and tsdb<{t.balanced_tsdb:g}"
        )
    return ProfileLabel(m.doc_id, "balanced", f"tsda={t.critical_tsda:g}")


def detect_bto(
    m: TextMetrics,
    scheme: CodingScheme,
    optimism_threshold: float = DEFAULT_OPTIMISM_THRESHOLD,
    counter_threshold: float = DEFAULT_COUNTER_THRESHOLD,
) -> PatternHit | None:
    """Flag benign techno-optimism: strong utopian/magical-power discourse
    tempered by tenet contradictions or non-technological solutions."""
    uf = m.frequencies.frequency("CT-UF")
    mp = m.frequencies.frequency("CT-MP")
    sn = m.frequencies.frequency("ADD-SN")
    optimism = uf + mp
    if optimism < optimism_threshold:
        return None
    evidence: list[dict] = [
        {"kind": "frequency", "code": "CT-UF", "value": uf},
        {"kind": "frequency", "code": "CT-MP", "value": mp},
    ]
    countered = False
    if m.components.anti_tce > 0:
        countered = True
        evidence.append({"kind": "component", "component": "ANTI_TCE", "value": m.components.anti_tce})
    if sn >= counter_threshold:
        countered = True
        evidence.append({"kind": "frequency", "code": "ADD-SN", "value": sn})
    if not countered:
        return None
    return PatternHit(kind="bto", doc_id=m.doc_id, evidence=tuple(evidence))


def co_occurrence(
    aset: AnnotationSet, corpus, scheme: CodingScheme, code_a: str, code_b: str
) -> tuple[int, list[str]]:
    """Documents where both codes occur at least once.

    With code_a == code_b this degenerates to presence of that code.
    """
    for code in (code_a, code_b):
        if not scheme.has_code(code):
            raise UnknownCodeError(f"unknown code {code!r}")
    doc_ids = []
    for doc in corpus.documents:
        codes = {a.code for a in annotations_for(aset, doc.id)}
        if code_a in codes and code_b in codes:
            doc_ids.append(doc.id)
    doc_ids.sort()
    return len(doc_ids), doc_ids


def _annotation_ref(ann) -> dict:
    return {"key": ann.key, "code": ann.code, "start": ann.start, "end": ann.end}


def ack_pivot_scan(
    aset: AnnotationSet, corpus, scheme: CodingScheme, ack_code: str = "ACK-RI"
) -> dict[str, PivotResult]:
    """Per document: does risk acknowledgment get followed by a reinforcing response?

    "Followed" means a TRR-component annotation whose span starts strictly
    after the acknowledgment's span start, anywhere in the document. Documents
    without the acknowledgment code are not applicable.
    """
    trr_codes = set(scheme.codes_in("TRR"))
    results: dict[str, PivotResult] = {}
    for doc in corpus.documents:
        anns = annotations_for(aset, doc.id)
        acks = [a for a in anns if a.code == ack_code]
        if not acks:
            results[doc.id] = PivotResult(doc.id, "not_applicable")
            continue
        evidence: list[dict] = []
        for ack in acks:
            followers = [a for a in anns if a.code in trr_codes and a.start > ack.start]
            if followers:
                earliest = min(followers, key=lambda a: (a.start, a.end, a.code, a.annotator))
                evidence.append({"ack": _annotation_ref(ack), "response": _annotation_ref(earliest)})
        status = "pivot" if evidence else "no_pivot"
        results[doc.id] = PivotResult(doc.id, status, tuple(evidence))
    return results


def rank_texts(
    metrics: list[TextMetrics], key: str, k: int, scheme: CodingScheme
) -> list[tuple[str, float]]:
    """Top-k documents by a code's frequency or a component score.

    Valid keys: any scheme code id, the four components (TCE, TRR, ANTI_TCE,
    ANTI_TRR), or the two sides (PRO, ANTI). Ties break by document id.
    """
    def value(m: TextMetrics) -> float:
        if key == "PRO":
            return m.components.pro
        if key == "ANTI":
            return m.components.anti
        if key in ("TCE", "TRR", "ANTI_TCE", "ANTI_TRR"):
            return getattr(m.components, key.lower())
        return m.frequencies.frequency(key)

    if key not in ("PRO", "ANTI", "TCE", "TRR", "ANTI_TCE", "ANTI_TRR") and not scheme.has_code(key):
        raise UnknownCodeError(f"unknown ranking key {key!r}")
    ordered = sorted(metrics, key=lambda m: (-value(m), m.doc_id))
    return [(m.doc_id, value(m)) for m in ordered[:k]]


def _polarization(tsdas: list[float]) -> Polarization:
    if not tsdas:
        return Polarization(n=0, spread=None, sd=None)
    return Polarization(
        n=len(tsdas),
        spread=max(tsdas) - min(tsdas),
        sd=statistics.pstdev(tsdas),
    )


def dynamics(
    metrics: list[TextMetrics],
    corpus,
    cut_date: datetime.date = DEFAULT_CUT_DATE,
) -> DynamicsSummary:
    """Per-author trajectories plus the before/after polarization split.

    The increase fraction counts authors with at least two dated texts whose
    adherence rose from first to last.
    """
    by_author: dict[str, list[TrajectoryPoint]] = {}
    all_points: list[tuple[datetime.date, float]] = []
    for m in metrics:
        doc = corpus.document(m.doc_id)
        by_author.setdefault(doc.author, []).append(
            TrajectoryPoint(doc_id=m.doc_id, date=doc.date, tsda=m.tsda, tsdb=m.tsdb)
        )
        all_points.append((doc.date, m.tsda))

    trajectories = tuple(
        Trajectory(author, tuple(sorted(points, key=lambda p: (p.date, p.doc_id))))
        for author, points in sorted(by_author.items())
    )
    multi = [t for t in trajectories if len(t.points) >= 2]
    increasing = [t for t in multi if t.delta_tsda is not None and t.delta_tsda > 0]

    before = _polarization([v for d, v in all_points if d <= cut_date])
    after = _polarization([v for d, v in all_points if d > cut_date])
    return DynamicsSummary(
        cut_date=cut_date,
        trajectories=trajectories,
        n_multi_text=len(multi),
        n_increasing=len(increasing),
        before=before,
        after=after,
    )
