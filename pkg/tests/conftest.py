"""Shared fixtures and the acceptance-criteria summary hook."""

from __future__ import annotations

import datetime
from pathlib import Path

import pytest

from tsdlab import annotation, corpus as corpus_mod, schema

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "criterion(num, name): tags a test as one acceptance criterion"
    )


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is not None and rep.when == "call":
        results = getattr(item.config, "_criterion_results", None)
        if results is None:
            results = {}
            item.config._criterion_results = results
        results[marker.args[0]] = (marker.args[1], rep.outcome)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results = getattr(config, "_criterion_results", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(results):
        name, outcome = results[num]
        status = {"passed": "PASS", "failed": "FAIL"}.get(outcome, outcome.upper())
        terminalreporter.write_line(f"criterion {num:>2}  {name}: {status}")


@pytest.fixture(scope="session")
def scheme():
    return schema.builtin_tsd_scheme()


def make_body(n_words: int) -> str:
    """Deterministic filler text with exactly n_words countable words."""
    vocabulary = ("alpha", "beta", "gamma", "delta", "epsilon", "zeta", "eta", "theta")
    words = [vocabulary[i % len(vocabulary)] for i in range(n_words)]
    return " ".join(words)


def make_document(
    doc_id="doc-1",
    author="Ada Analyst",
    date="2023-01-15",
    n_words=1000,
    text_type="blog-post",
    topic="AI",
    body=None,
) -> corpus_mod.Document:
    if body is None:
        body = make_body(n_words)
    return corpus_mod._build_document(
        body,
        id=doc_id,
        author=author,
        title=doc_id,
        date=date,
        text_type=text_type,
        topic=topic,
    )


def make_corpus(*docs: corpus_mod.Document) -> corpus_mod.Corpus:
    corp = corpus_mod.Corpus()
    for name in {d.author for d in docs}:
        corp.add_author(corpus_mod.Author(name, "CEO", "Example Corp"))
    for doc in docs:
        corp.ingest_document(
            doc.body,
            id=doc.id,
            author=doc.author,
            title=doc.title,
            date=doc.date,
            text_type=doc.text_type,
            topic=doc.topic,
        )
    return corp


_TS = datetime.datetime(2025, 3, 15, 9, 0, tzinfo=datetime.timezone.utc)


def make_annotation(doc_id, start, end, code, annotator="analyst", minute=0, note=None):
    return annotation.Annotation(
        doc_id=doc_id,
        start=start,
        end=end,
        code=code,
        annotator=annotator,
        created_at=_TS + datetime.timedelta(minutes=minute),
        note=note,
    )


def make_set(scheme_version: str, *annotations_) -> annotation.AnnotationSet:
    return annotation.AnnotationSet(scheme_version, tuple(annotations_))
