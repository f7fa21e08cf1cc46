"""Per-document metrics: normalized code frequencies, component scores, TSDA/TSDB.

TSDA (adherence) is the pro side minus the anti side; TSDB (balance) is the
smaller side over the sum of both, in [0, 0.5]. A document with no scored
discourse on either side has an undefined TSDB, represented as None (never
NaN, never 0) so downstream views can exclude such documents explicitly.

All arithmetic is full precision; rounding to two decimals happens only in
the reporting layer.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .annotation import AnnotationSet, code_counts
from .corpus import Document
from .errors import MetricsError
from .schema import CodingScheme


@dataclass(frozen=True)
class CodeFrequencies:
    """Code frequencies per 1,000 words for one document."""

    doc_id: str
    values: Mapping[str, float] = field(default_factory=dict)

    def frequency(self, code_id: str) -> float:
        return self.values.get(code_id, 0.0)

    def items(self):
        return self.values.items()


@dataclass(frozen=True)
class ComponentScores:
    tce: float = 0.0
    trr: float = 0.0
    anti_tce: float = 0.0
    anti_trr: float = 0.0

    @property
    def pro(self) -> float:
        return self.tce + self.trr

    @property
    def anti(self) -> float:
        return self.anti_tce + self.anti_trr


@dataclass(frozen=True)
class TextMetrics:
    doc_id: str
    frequencies: CodeFrequencies
    components: ComponentScores
    tsda: float
    tsdb: float | None


def normalized_frequencies(counts: Mapping[str, int], word_count: int, doc_id: str = "") -> CodeFrequencies:
    """Turn raw counts into frequencies per 1,000 words, full precision."""
    if word_count <= 0:
        raise MetricsError(f"empty document {doc_id!r}: word count must be positive")
    values = {code: count * 1000 / word_count for code, count in sorted(counts.items())}
    return CodeFrequencies(doc_id=doc_id, values=values)


def component_scores(freqs: CodeFrequencies | Mapping[str, float], scheme: CodingScheme) -> ComponentScores:
    """Weighted sum of frequencies per component, per the scheme's weight table."""
    values = freqs.values if isinstance(freqs, CodeFrequencies) else freqs
    totals = {"TCE": 0.0, "TRR": 0.0, "ANTI_TCE": 0.0, "ANTI_TRR": 0.0}
    for code_id, freq in values.items():
        assignment = scheme.assignment(code_id)
        if assignment is None:
            if freq != 0:
                raise MetricsError(f"code {code_id!r} has no component assignment")
            continue
        totals[assignment.component] += assignment.weight * freq
    return ComponentScores(
        tce=totals["TCE"],
        trr=totals["TRR"],
        anti_tce=totals["ANTI_TCE"],
        anti_trr=totals["ANTI_TRR"],
    )


def tsda(components: ComponentScores) -> float:
    """Adherence: pro side minus anti side."""
    return components.pro - components.anti


def tsdb(components: ComponentScores) -> float | None:
    """Balance: min(pro, anti) / (pro + anti), or None when both sides are 0.

    Equal nonzero sides give exactly 0.5; a single zero side gives 0.
    """
    pro, anti = components.pro, components.anti
    if pro == 0 and anti == 0:
        return None
    return min(pro, anti) / (pro + anti)


def text_metrics(
    doc: Document,
    aset: AnnotationSet,
    scheme: CodingScheme,
    annotators=None,
) -> TextMetrics:
    """Full metric pipeline for one document: counts -> frequencies -> scores."""
    counts = code_counts(aset, doc.id, annotators=annotators)
    freqs = normalized_frequencies(counts, doc.word_count, doc_id=doc.id)
    components = component_scores(freqs, scheme)
    return TextMetrics(
        doc_id=doc.id,
        frequencies=freqs,
        components=components,
        tsda=tsda(components),
        tsdb=tsdb(components),
    )


def corpus_metrics(corpus, aset: AnnotationSet, scheme: CodingScheme, annotators=None) -> list[TextMetrics]:
    """text_metrics for every document, in corpus order."""
    return [text_metrics(doc, aset, scheme, annotators=annotators) for doc in corpus.documents]
