"""Word counting, engagement scoring, text selection, ingestion."""

import datetime
import json
import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tsdlab import corpus as corpus_mod
from tsdlab.corpus import (
    Author,
    Corpus,
    engaged_authors,
    engagement_scores,
    is_eligible,
    load_corpus,
    select_author_texts,
    word_count,
)
from tsdlab.errors import CorpusError, DuplicateDocumentError, UnknownAuthorError

from .conftest import make_body, make_document


class TestWordCount:
    def test_empty(self):
        assert word_count("") == 0

    def test_plain_sentence(self):
        assert word_count("AI will save the world") == 5

    def test_punctuation_only_tokens_do_not_count(self):
        # "—" carries no letter or digit, so only two words remain.
        assert word_count("state-of-the-art — yes!") == 2

    def test_digits_count(self):
        # "chapter", "42", "7" count; "—" and "§" carry no letter or digit.
        assert word_count("chapter 42 — § 7") == 3

    @given(st.lists(st.sampled_from(["alpha", "beta", "x1", "...", "—"]), max_size=30))
    def test_whitespace_invariance(self, tokens):
        text = " ".join(tokens)
        padded = "  " + text.replace(" ", "   ") + "\n\t "
        assert word_count(padded) == word_count(text)


def _author_docs(word_counts, dates):
    return [
        make_document(doc_id=f"d{i}", n_words=w, date=d)
        for i, (w, d) in enumerate(zip(word_counts, dates))
    ]


class TestEngagement:
    def test_two_author_pool_hits_both_extremes(self):
        pool = [
            ("low", _author_docs([1000], ["2020-01-01"])),
            ("high", _author_docs([5000, 5000], ["2020-01-01", "2021-06-01"])),
        ]
        scores = {s.author: s for s in engagement_scores(pool)}
        assert scores["low"].e == 0.0
        assert scores["high"].e == 1.0
        assert scores["high"].w == 10000 and scores["high"].d == 2

    def test_log_spaced_middle_author(self):
        # 1000 / 2000 / 4000 are equally spaced in log space, so the middle
        # author lands at 0.5 on both normalized axes.
        pool = [
            ("a", _author_docs([1000], ["2020-01-01"])),
            ("b", _author_docs([1000, 1000], ["2020-01-01", "2020-02-01"])),
            ("c", _author_docs([2000, 1000, 1000], ["2020-01-01", "2020-02-01", "2020-03-01"])),
        ]
        scores = {s.author: s for s in engagement_scores(pool)}
        assert scores["b"].w == 2000 and scores["b"].d == 2
        assert scores["b"].w_norm == pytest.approx(0.5, abs=1e-12)
        assert scores["b"].d_norm == pytest.approx(0.5, abs=1e-12)
        assert scores["b"].e == pytest.approx(0.5, abs=1e-12)

    def test_single_author_pool_degenerates_to_one(self):
        pool = [("only", _author_docs([1234], ["2020-01-01"]))]
        (score,) = engagement_scores(pool)
        assert (score.w_norm, score.d_norm, score.e) == (1.0, 1.0, 1.0)

    def test_log_base_invariance(self):
        pool = [
            ("a", _author_docs([800], ["2020-01-01"])),
            ("b", _author_docs([3200], ["2020-01-01"])),
            ("c", _author_docs([51200], ["2020-01-01"])),
        ]
        scores = engagement_scores(pool)
        logs10 = [math.log10(s.w) for s in scores]
        lo, hi = min(logs10), max(logs10)
        for s, l10 in zip(scores, logs10):
            assert s.w_norm == pytest.approx((l10 - lo) / (hi - lo), abs=1e-12)

    def test_threshold_filter_is_strict(self):
        pool = [
            ("low", _author_docs([1000], ["2020-01-01"])),
            ("high", _author_docs([9000], ["2020-01-01", "2021-01-01"][:1])),
        ]
        scores = engagement_scores(pool)
        kept = engaged_authors(scores, threshold=0.5)
        assert [s.author for s in kept] == ["high"]

    @settings(max_examples=60)
    @given(
        words=st.lists(st.integers(min_value=1, max_value=10_000), min_size=2, max_size=6),
        bump=st.integers(min_value=1, max_value=5_000),
        data=st.data(),
    )
    def test_word_monotonicity(self, words, bump, data):
        target = data.draw(st.integers(min_value=0, max_value=len(words) - 1))
        dates = ["2020-01-01"]

        def score_for(word_list):
            pool = [(f"a{i}", _author_docs([w], dates)) for i, w in enumerate(word_list)]
            return {s.author: s.e for s in engagement_scores(pool)}

        before = score_for(words)[f"a{target}"]
        bumped = list(words)
        bumped[target] += bump
        after = score_for(bumped)[f"a{target}"]
        assert after >= before - 1e-12

    @settings(max_examples=40)
    @given(
        dates_counts=st.lists(st.integers(min_value=1, max_value=6), min_size=2, max_size=5),
        data=st.data(),
    )
    def test_date_monotonicity(self, dates_counts, data):
        target = data.draw(st.integers(min_value=0, max_value=len(dates_counts) - 1))
        base = datetime.date(2020, 1, 1)

        def docs_for(d, total_words=4000):
            # d documents on distinct dates, same total words.
            sizes = [total_words - (d - 1)] + [1] * (d - 1)
            dates = [(base + datetime.timedelta(days=i)).isoformat() for i in range(d)]
            return _author_docs(sizes, dates)

        def score_for(counts):
            pool = [(f"a{i}", docs_for(d)) for i, d in enumerate(counts)]
            return {s.author: s.e for s in engagement_scores(pool)}

        before = score_for(dates_counts)[f"a{target}"]
        bumped = list(dates_counts)
        bumped[target] += 1
        after = score_for(bumped)[f"a{target}"]
        assert after >= before - 1e-12

    def test_empty_pool_rejected(self):
        with pytest.raises(CorpusError):
            engagement_scores([])

    def test_author_without_documents_rejected(self):
        with pytest.raises(CorpusError, match="no documents"):
            engagement_scores([("a", [])])


def _doc(doc_id, text_type, topic, n_words, date="2023-05-01"):
    return make_document(doc_id=doc_id, text_type=text_type, topic=topic, n_words=n_words, date=date)


class TestSelectAuthorTexts:
    def test_type_diversity_beats_length(self):
        docs = [
            _doc("blog-small", "blog-post", "AI", 2000),
            _doc("blog-big", "blog-post", "AI", 3000),
            _doc("oped", "op-ed", "AI", 1000),
        ]
        picked = select_author_texts(docs, k=2)
        assert {d.id for d in picked.documents} == {"blog-big", "oped"}
        assert not picked.short

    def test_pool_of_exactly_k(self):
        docs = [
            _doc("a", "blog-post", "AI", 1000),
            _doc("b", "blog-post", "general-tech", 5000),
        ]
        picked = select_author_texts(docs, k=2)
        assert {d.id for d in picked.documents} == {"a", "b"}

    def test_topic_specificity_then_length(self):
        docs = [
            _doc("ai-small", "blog-post", "AI", 1000),
            _doc("ai-big", "blog-post", "AI", 2000),
            _doc("general-huge", "blog-post", "general-tech", 9000),
        ]
        picked = select_author_texts(docs, k=2)
        assert [d.id for d in picked.documents] == ["ai-big", "ai-small"]

    def test_short_pool_flagged(self):
        picked = select_author_texts([_doc("only", "op-ed", "AI", 900)], k=2)
        assert [d.id for d in picked.documents] == ["only"]
        assert picked.short

    def test_deterministic_under_permutation(self):
        docs = [
            _doc("a", "blog-post", "AI", 1500, "2021-01-01"),
            _doc("b", "op-ed", "general-tech", 4000, "2020-06-01"),
            _doc("c", "blog-post", "general-tech", 4000, "2019-01-01"),
            _doc("d", "book-chapter", "AI", 1500, "2022-01-01"),
            _doc("e", "blog-post", "AI", 1500, "2021-01-01"),
        ]
        rng = random.Random(3)
        baseline = select_author_texts(docs, k=3).documents
        for _ in range(10):
            shuffled = docs[:]
            rng.shuffle(shuffled)
            assert select_author_texts(shuffled, k=3).documents == baseline

    def test_empty_pool_rejected(self):
        with pytest.raises(CorpusError):
            select_author_texts([], k=2)


class TestIngest:
    def _corpus(self):
        corp = Corpus()
        corp.add_author(Author("Ada Analyst", "CEO", "Example Corp"))
        return corp

    def test_word_count_cached(self):
        corp = self._corpus()
        doc = corp.ingest_document(
            make_body(800), id="d1", author="Ada Analyst", title="T",
            date="2023-01-01", text_type="blog-post", topic="AI",
        )
        assert doc.word_count == 800
        assert corp.document("d1") is doc

    def test_duplicate_id(self):
        corp = self._corpus()
        kwargs = dict(id="d1", author="Ada Analyst", title="T", date="2023-01-01",
                      text_type="blog-post", topic="AI")
        corp.ingest_document(make_body(10), **kwargs)
        with pytest.raises(DuplicateDocumentError, match="duplicate document"):
            corp.ingest_document(make_body(10), **kwargs)

    def test_punctuation_only_body(self):
        corp = self._corpus()
        with pytest.raises(CorpusError, match="empty body"):
            corp.ingest_document(
                "... --- !!!", id="d1", author="Ada Analyst", title="T",
                date="2023-01-01", text_type="blog-post", topic="AI",
            )

    def test_invalid_date(self):
        corp = self._corpus()
        with pytest.raises(CorpusError, match="invalid date"):
            corp.ingest_document(
                make_body(10), id="d1", author="Ada Analyst", title="T",
                date="not-a-date", text_type="blog-post", topic="AI",
            )

    def test_unknown_author(self):
        corp = self._corpus()
        with pytest.raises(UnknownAuthorError):
            corp.ingest_document(
                make_body(10), id="d1", author="Nobody", title="T",
                date="2023-01-01", text_type="blog-post", topic="AI",
            )

    def test_body_stored_verbatim(self):
        corp = self._corpus()
        body = "Text with  doubled spaces\nand a newline — plus dash."
        doc = corp.ingest_document(
            body, id="d1", author="Ada Analyst", title="T",
            date="2023-01-01", text_type="blog-post", topic="AI",
        )
        assert doc.body == body


class TestEligibility:
    def test_word_floor(self):
        assert not is_eligible(make_document(n_words=749, date="2020-01-01"))
        assert is_eligible(make_document(n_words=750, date="2020-01-01"))

    def test_date_cutoff(self):
        assert not is_eligible(make_document(n_words=900, date="2016-12-31"))
        assert is_eligible(make_document(n_words=900, date="2017-01-01"))


class TestManifest:
    def test_load_round_trip(self, tmp_path):
        (tmp_path / "bodies").mkdir()
        (tmp_path / "bodies" / "d1.txt").write_text(make_body(120), encoding="utf-8")
        manifest = {
            "authors": [{"name": "Ada Analyst", "role": "CEO", "company": "Example Corp"}],
            "documents": [
                {"id": "d1", "author": "Ada Analyst", "title": "First", "date": "2023-04-01",
                 "text_type": "op-ed", "topic": "AI", "path": "bodies/d1.txt"}
            ],
        }
        path = tmp_path / "corpus.json"
        path.write_text(json.dumps(manifest), encoding="utf-8")
        corp = load_corpus(path)
        assert len(corp) == 1
        assert corp.document("d1").word_count == 120
        assert corp.author("Ada Analyst").company == "Example Corp"

    def test_missing_body_file(self, tmp_path):
        manifest = {
            "authors": [{"name": "Ada Analyst", "role": "CEO", "company": "Example Corp"}],
            "documents": [
                {"id": "d1", "author": "Ada Analyst", "title": "First", "date": "2023-04-01",
                 "text_type": "op-ed", "topic": "AI", "path": "missing.txt"}
            ],
        }
        path = tmp_path / "corpus.json"
        path.write_text(json.dumps(manifest), encoding="utf-8")
        with pytest.raises(CorpusError, match="missing.txt"):
            load_corpus(path)

    def test_manifest_not_json(self, tmp_path):
        path = tmp_path / "corpus.json"
        path.write_text("nope", encoding="utf-8")
        with pytest.raises(CorpusError, match="not valid JSON"):
            load_corpus(path)
