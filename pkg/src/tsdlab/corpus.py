"""Corpus store: author roster, document ingestion, engagement, text selection.

Documents are immutable once ingested; the corpus itself follows
single-writer, many-reader semantics.
"""

from __future__ import annotations

import datetime
import json
import math
from dataclasses import dataclass
from pathlib import Path

from .errors import (
    CorpusError,
    DuplicateDocumentError,
    UnknownAuthorError,
    UnknownDocumentError,
)

ROLES = ("CEO", "CTO", "MP")
TEXT_TYPES = ("book-chapter", "op-ed", "blog-post")
TOPICS = ("AI", "general-tech")

# Defaults for the optional eligibility filter (length floor, era cutoff).
ELIGIBLE_MIN_WORDS = 750
ELIGIBLE_SINCE = datetime.date(2017, 1, 1)


def word_count(text: str) -> int:
    """Count whitespace-delimited tokens that carry at least one letter or digit.

    Punctuation-only runs (em dashes, ellipses) do not count as words.
    """
    return sum(1 for token in text.split() if any(ch.isalnum() for ch in token))


@dataclass(frozen=True)
class Author:
    name: str
    role: str
    company: str


@dataclass(frozen=True)
class Document:
    id: str
    author: str
    title: str
    date: datetime.date
    text_type: str
    topic: str
    body: str
    word_count: int


@dataclass(frozen=True)
class EngagementScore:
    """Per-author engagement: words written and distinct publication dates.

    ``w_norm`` is the min-max normalization of log(w) across the pool,
    ``d_norm`` the min-max normalization of d, and ``e`` their mean.
    """

    author: str
    w: int
    d: int
    w_norm: float
    d_norm: float
    e: float


@dataclass(frozen=True)
class TextSelection:
    documents: tuple[Document, ...]
    requested: int

    @property
    def short(self) -> bool:
        return len(self.documents) < self.requested


def parse_date(value) -> datetime.date:
    if isinstance(value, datetime.date) and not isinstance(value, datetime.datetime):
        return value
    if isinstance(value, str):
        try:
            return datetime.date.fromisoformat(value)
        except ValueError:
            pass
    raise CorpusError(f"invalid date {value!r}: expected ISO-8601 calendar date")


def _build_document(body, *, id, author, title, date, text_type, topic) -> Document:
    if not id or not isinstance(id, str):
        raise CorpusError(f"invalid document id {id!r}")
    if text_type not in TEXT_TYPES:
        raise CorpusError(f"invalid text_type {text_type!r}: expected one of {TEXT_TYPES}")
    if topic not in TOPICS:
        raise CorpusError(f"invalid topic {topic!r}: expected one of {TOPICS}")
    n_words = word_count(body)
    if n_words == 0:
        raise CorpusError(f"empty body for document {id!r}: no countable words")
    return Document(
        id=id,
        author=author,
        title=title,
        date=parse_date(date),
        text_type=text_type,
        topic=topic,
        body=body,
        word_count=n_words,
    )


class Corpus:
    """Author roster plus ingested documents, in ingestion order."""

    def __init__(self):
        self._authors: dict[str, Author] = {}
        self._documents: dict[str, Document] = {}

    def add_author(self, author: Author) -> Author:
        if author.role not in ROLES:
            raise CorpusError(f"invalid role {author.role!r}: expected one of {ROLES}")
        existing = self._authors.get(author.name)
        if existing is not None and existing != author:
            raise CorpusError(f"author {author.name!r} already declared with different data")
        self._authors[author.name] = author
        return author

    def ingest_document(self, body: str, *, id, author, title, date, text_type, topic) -> Document:
        """Validate and store a document; the body is kept verbatim."""
        if id in self._documents:
            raise DuplicateDocumentError(f"duplicate document {id!r}")
        if author not in self._authors:
            raise UnknownAuthorError(f"unknown author {author!r}: declare it in the roster first")
        doc = _build_document(
            body, id=id, author=author, title=title, date=date, text_type=text_type, topic=topic
        )
        self._documents[doc.id] = doc
        return doc

    def __contains__(self, doc_id: str) -> bool:
        return doc_id in self._documents

    def __len__(self) -> int:
        return len(self._documents)

    def document(self, doc_id: str) -> Document:
        try:
            return self._documents[doc_id]
        except KeyError:
            raise UnknownDocumentError(f"unknown document {doc_id!r}") from None

    @property
    def documents(self) -> tuple[Document, ...]:
        return tuple(self._documents.values())

    @property
    def authors(self) -> tuple[Author, ...]:
        return tuple(self._authors.values())

    def author(self, name: str) -> Author:
        try:
            return self._authors[name]
        except KeyError:
            raise UnknownAuthorError(f"unknown author {name!r}") from None

    def documents_for(self, author: str) -> tuple[Document, ...]:
        return tuple(d for d in self._documents.values() if d.author == author)

    def author_pool(self) -> list[tuple[str, list[Document]]]:
        """Group documents by author, for engagement scoring."""
        pool: dict[str, list[Document]] = {}
        for doc in self._documents.values():
            pool.setdefault(doc.author, []).append(doc)
        return list(pool.items())


def _minmax(values: list[float]) -> list[float]:
    # Degenerate pools (all equal) map to 1.0 so a sole or uniform author is
    # not filtered out by the e > 0.5 engagement threshold.
    lo, hi = min(values), max(values)
    if hi == lo:
        return [1.0 for _ in values]
    return [(v - lo) / (hi - lo) for v in values]


def engagement_scores(pool) -> list[EngagementScore]:
    """Score each author's engagement from total words and distinct dates.

    ``pool`` is a sequence of (author, documents) pairs; every author needs at
    least one document and every document a positive word count.
    """
    pool = list(pool)
    if not pool:
        raise CorpusError("empty author pool")

    authors: list[str] = []
    totals: list[int] = []
    dates: list[int] = []
    for author, docs in pool:
        docs = list(docs)
        if not docs:
            raise CorpusError(f"author {author!r} has no documents")
        if any(d.word_count <= 0 for d in docs):
            raise CorpusError(f"author {author!r} has a document with zero words")
        authors.append(author)
        totals.append(sum(d.word_count for d in docs))
        dates.append(len({d.date for d in docs}))

    w_norms = _minmax([math.log(w) for w in totals])
    d_norms = _minmax([float(d) for d in dates])
    return [
        EngagementScore(author, w, d, w_norm, d_norm, (w_norm + d_norm) / 2)
        for author, w, d, w_norm, d_norm in zip(authors, totals, dates, w_norms, d_norms)
    ]


def engaged_authors(scores, threshold: float = 0.5) -> list[EngagementScore]:
    """Authors whose engagement exceeds the threshold (strictly)."""
    return [s for s in scores if s.e > threshold]


def _preference(doc: Document):
    # Topic specificity, then length, then date/id to break remaining ties.
    return (0 if doc.topic == "AI" else 1, -doc.word_count, doc.date, doc.id)


def select_author_texts(author_docs, k: int = 2) -> TextSelection:
    """Pick k texts for an author: type diversity, then AI topic, then length.

    Deterministic under permutation of the input; a pool smaller than k is
    returned whole and flagged short.
    """
    docs = list(author_docs)
    if not docs:
        raise CorpusError("cannot select texts from an empty pool")
    if k < 1:
        raise CorpusError(f"invalid selection count {k}")

    remaining = sorted(docs, key=_preference)
    chosen: list[Document] = []
    seen_types: set[str] = set()
    while remaining and len(chosen) < k:
        pick = next((d for d in remaining if d.text_type not in seen_types), remaining[0])
        chosen.append(pick)
        seen_types.add(pick.text_type)
        remaining.remove(pick)
    return TextSelection(documents=tuple(chosen), requested=k)


def is_eligible(
    doc: Document,
    min_words: int = ELIGIBLE_MIN_WORDS,
    since: datetime.date = ELIGIBLE_SINCE,
) -> bool:
    """Optional corpus-eligibility filter: length floor and publication cutoff."""
    return doc.word_count >= min_words and doc.date >= since


def load_corpus(manifest_path: str | Path) -> Corpus:
    """Load a corpus manifest (JSON) and the body files it points at.

    Body paths are resolved relative to the manifest's directory.
    """
    manifest_path = Path(manifest_path)
    try:
        raw = json.loads(manifest_path.read_text(encoding="utf-8"))
    except OSError as exc:
        raise CorpusError(f"cannot read corpus manifest {manifest_path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise CorpusError(f"corpus manifest {manifest_path} is not valid JSON: {exc}") from exc

    if not isinstance(raw, dict) or "documents" not in raw:
        raise CorpusError(f"corpus manifest {manifest_path} must be an object with a 'documents' list")

    corpus = Corpus()
    for entry in raw.get("authors", []):
        try:
            corpus.add_author(Author(entry["name"], entry["role"], entry["company"]))
        except (KeyError, TypeError) as exc:
            raise CorpusError(f"corpus manifest {manifest_path}: bad author entry: {exc}") from exc

    base = manifest_path.parent
    for entry in raw["documents"]:
        try:
            body_path = base / entry["path"]
            body = body_path.read_text(encoding="utf-8")
        except KeyError:
            raise CorpusError(
                f"corpus manifest {manifest_path}: document entry missing 'path'"
            ) from None
        except OSError as exc:
            raise CorpusError(f"cannot read document body {exc.filename}: {exc}") from exc
        try:
            corpus.ingest_document(
                body,
                id=entry["id"],
                author=entry["author"],
                title=entry["title"],
                date=entry["date"],
                text_type=entry["text_type"],
                topic=entry["topic"],
            )
        except KeyError as exc:
            raise CorpusError(
                f"corpus manifest {manifest_path}: document entry missing field {exc}"
            ) from None
    return corpus
