"""Corpus statistics, profiles, pattern miners, rankings, dynamics."""

import datetime
import random
import statistics

import pytest

from tsdlab import analysis, schema
from tsdlab.analysis import (
    ProfileThresholds,
    ack_pivot_scan,
    classify_profile,
    co_occurrence,
    corpus_stats,
    detect_bto,
    dynamics,
    rank_texts,
)
from tsdlab.errors import MetricsError, UnknownCodeError
from tsdlab.metrics import CodeFrequencies, ComponentScores, TextMetrics, tsda, tsdb

from .conftest import make_annotation, make_corpus, make_document, make_set
from .test_metrics import solve_components


def metrics_from_components(doc_id: str, components: ComponentScores, freqs=None) -> TextMetrics:
    return TextMetrics(
        doc_id=doc_id,
        frequencies=CodeFrequencies(doc_id, freqs or {}),
        components=components,
        tsda=tsda(components),
        tsdb=tsdb(components),
    )


def metrics_from_point(doc_id: str, tsda_value: float, tsdb_value: float) -> TextMetrics:
    pro, anti = solve_components(tsda_value, tsdb_value)
    return metrics_from_components(doc_id, ComponentScores(tce=pro, anti_trr=anti))


def metrics_undefined(doc_id: str) -> TextMetrics:
    return metrics_from_components(doc_id, ComponentScores())


class TestCorpusStats:
    def test_hand_computed_population_sd(self):
        ms = [metrics_from_point("a", 1.0, 0.2), metrics_from_point("b", 3.0, 0.2)]
        stats = corpus_stats(ms)
        assert stats.mean_tsda == pytest.approx(2.0)
        assert stats.sd_tsda == pytest.approx(1.0)  # population divisor n

    def test_single_text(self):
        stats = corpus_stats([metrics_from_point("a", 5.0, 0.1)])
        assert stats.sd_tsda == 0.0
        assert stats.n == 1

    def test_undefined_tsdb_excluded_from_tsdb_aggregates(self):
        ms = [metrics_from_point("a", 4.0, 0.25), metrics_undefined("b")]
        stats = corpus_stats(ms)
        assert stats.n == 2
        assert stats.n_tsdb == 1
        assert stats.mean_tsdb == pytest.approx(0.25)
        assert stats.mean_tsda == pytest.approx(2.0)  # undefined-tsdb text still counts for tsda

    def test_all_undefined_tsdb(self):
        stats = corpus_stats([metrics_undefined("a")])
        assert stats.mean_tsdb is None and stats.sd_tsdb is None

    def test_empty_rejected(self):
        with pytest.raises(MetricsError):
            corpus_stats([])


class TestClassifyProfile:
    @pytest.mark.parametrize(
        "tsda_value,tsdb_value,expected",
        [
            (55.15, 0.09, "pro_imbalanced"),
            (-0.94, 0.49, "balanced"),   # balance rule fires before the sign rule
            (-23.0, 0.10, "critical"),
            (32.38, 0.26, "pro_imbalanced"),
            (28.83, 0.18, "pro_imbalanced"),
        ],
    )
    def test_reported_points(self, tsda_value, tsdb_value, expected):
        m = metrics_from_point(f"doc-{tsda_value}", tsda_value, tsdb_value)
        assert m.tsda == pytest.approx(tsda_value, abs=1e-9)
        assert m.tsdb == pytest.approx(tsdb_value, abs=1e-9)
        label = classify_profile(m)
        assert label.profile == expected

    def test_zero_tsda_low_tsdb_is_balanced(self):
        m = metrics_from_components("z", ComponentScores(tce=1.0, anti_tce=1.0))
        assert m.tsda == 0.0 and m.tsdb == 0.5
        squeezed = TextMetrics("z", CodeFrequencies("z", {}), m.components, 0.0, 0.1)
        assert classify_profile(squeezed).profile == "balanced"
        assert classify_profile(squeezed).rule_fired.startswith("tsda=")

    def test_undefined_tsdb_not_classifiable(self):
        assert classify_profile(metrics_undefined("u")) is None

    def test_configurable_threshold(self):
        m = metrics_from_point("d", 10.0, 0.35)
        assert classify_profile(m).profile == "pro_imbalanced"
        assert classify_profile(m, ProfileThresholds(balanced_tsdb=0.3)).profile == "balanced"

    def test_rule_order_lowering_tsdb_never_reaches_critical(self):
        rng = random.Random(5)
        for _ in range(200):
            threshold = rng.uniform(0.05, 0.45)
            thresholds = ProfileThresholds(balanced_tsdb=threshold)
            tsda_value = rng.uniform(0.1, 60.0)
            above = metrics_from_point("d", tsda_value, min(0.49, threshold + 0.02))
            below = metrics_from_point("d", tsda_value, max(0.01, threshold - 0.02))
            assert classify_profile(above, thresholds).profile == "balanced"
            assert classify_profile(below, thresholds).profile == "pro_imbalanced"


class TestDetectBto:
    def _metrics(self, freqs, scheme):
        from tsdlab.metrics import component_scores

        components = component_scores(freqs, scheme)
        return metrics_from_components("doc", components, freqs)

    def test_hit_with_non_tech_solutions(self, scheme):
        m = self._metrics({"CT-UF": 3.0, "CT-MP": 1.0, "ADD-SN": 2.0}, scheme)
        hit = detect_bto(m, scheme)
        assert hit is not None and hit.kind == "bto"
        assert any(e.get("code") == "ADD-SN" for e in hit.evidence)

    def test_hit_with_tenet_contradiction(self, scheme):
        m = self._metrics({"CT-UF": 2.5, "ANTI-TC-PD": 0.5}, scheme)
        hit = detect_bto(m, scheme)
        assert hit is not None
        assert any(e.get("component") == "ANTI_TCE" for e in hit.evidence)

    def test_pure_optimism_is_not_bto(self, scheme):
        m = self._metrics({"CT-UF": 5.0}, scheme)
        assert detect_bto(m, scheme) is None

    def test_critique_without_optimism_is_not_bto(self, scheme):
        m = self._metrics({"ADD-SN": 4.0}, scheme)
        assert detect_bto(m, scheme) is None

    def test_thresholds_configurable(self, scheme):
        m = self._metrics({"CT-UF": 1.5, "ADD-SN": 0.5}, scheme)
        assert detect_bto(m, scheme) is None
        assert detect_bto(m, scheme, optimism_threshold=1.0, counter_threshold=0.5) is not None


def _pattern_fixture(scheme):
    docs = [make_document(doc_id=f"doc-{i}", n_words=500) for i in range(3)]
    corpus = make_corpus(*docs)
    anns = [
        make_annotation("doc-0", 0, 10, "CT-UF"),
        make_annotation("doc-0", 20, 30, "TC-PD"),
        make_annotation("doc-1", 0, 10, "CT-UF"),
    ]
    return corpus, make_set(scheme.version, *anns)


class TestCoOccurrence:
    def test_definitional(self, scheme):
        corpus, aset = _pattern_fixture(scheme)
        count, doc_ids = co_occurrence(aset, corpus, scheme, "CT-UF", "TC-PD")
        assert (count, doc_ids) == (1, ["doc-0"])

    def test_self_co_occurrence_is_presence(self, scheme):
        corpus, aset = _pattern_fixture(scheme)
        count, doc_ids = co_occurrence(aset, corpus, scheme, "CT-UF", "CT-UF")
        assert (count, doc_ids) == (2, ["doc-0", "doc-1"])

    def test_empty_set(self, scheme):
        corpus, _ = _pattern_fixture(scheme)
        count, doc_ids = co_occurrence(make_set(scheme.version), corpus, scheme, "CT-UF", "TC-PD")
        assert (count, doc_ids) == (0, [])

    def test_symmetry(self, scheme):
        corpus, aset = _pattern_fixture(scheme)
        assert co_occurrence(aset, corpus, scheme, "CT-UF", "TC-PD") == co_occurrence(
            aset, corpus, scheme, "TC-PD", "CT-UF"
        )

    def test_unknown_code(self, scheme):
        corpus, aset = _pattern_fixture(scheme)
        with pytest.raises(UnknownCodeError):
            co_occurrence(aset, corpus, scheme, "CT-UF", "NOPE")


class TestAckPivotScan:
    def test_definitional_order(self, scheme):
        doc = make_document(doc_id="d", n_words=500)
        corpus = make_corpus(doc)
        aset = make_set(
            scheme.version,
            make_annotation("d", 10, 50, "ACK-RI"),
            make_annotation("d", 60, 120, "ADD-ST"),
        )
        result = ack_pivot_scan(aset, corpus, scheme)["d"]
        assert result.status == "pivot"
        assert result.evidence[0]["ack"]["start"] == 10
        assert result.evidence[0]["response"]["code"] == "ADD-ST"

    def test_no_ack_means_not_applicable(self, scheme):
        doc = make_document(doc_id="d", n_words=500)
        corpus = make_corpus(doc)
        aset = make_set(scheme.version, make_annotation("d", 0, 9, "CT-UF"))
        assert ack_pivot_scan(aset, corpus, scheme)["d"].status == "not_applicable"

    def test_ack_as_final_move_is_no_pivot(self, scheme):
        doc = make_document(doc_id="d", n_words=500)
        corpus = make_corpus(doc)
        aset = make_set(
            scheme.version,
            make_annotation("d", 60, 120, "ADD-ST"),
            make_annotation("d", 200, 260, "ACK-RI"),
        )
        assert ack_pivot_scan(aset, corpus, scheme)["d"].status == "no_pivot"

    def test_anti_trr_codes_do_not_count_as_responses(self, scheme):
        doc = make_document(doc_id="d", n_words=500)
        corpus = make_corpus(doc)
        aset = make_set(
            scheme.version,
            make_annotation("d", 10, 20, "ACK-RI"),
            make_annotation("d", 30, 40, "ADD-SN"),
        )
        assert ack_pivot_scan(aset, corpus, scheme)["d"].status == "no_pivot"

    def test_matches_brute_force_on_random_sets(self, scheme):
        rng = random.Random(42)
        codes = list(scheme.code_ids)
        trr_codes = set(scheme.codes_in("TRR"))
        for trial in range(120):
            doc = make_document(doc_id=f"d{trial}", n_words=300)
            corpus = make_corpus(doc)
            annotations = []
            seen = set()
            for i in range(rng.randrange(0, 30)):
                start = rng.randrange(0, 900)
                end = start + rng.randrange(1, 60)
                code = rng.choice(codes)
                if (start, end, code) in seen:
                    continue
                seen.add((start, end, code))
                annotations.append(make_annotation(doc.id, start, min(end, 1000), code, minute=i))
            aset = make_set(scheme.version, *annotations)
            got = ack_pivot_scan(aset, corpus, scheme)[doc.id]

            acks = [a for a in annotations if a.code == "ACK-RI"]
            pairs = [
                (a, b)
                for a in acks
                for b in annotations
                if b.code in trr_codes and b.start > a.start
            ]
            if not acks:
                expected = "not_applicable"
            elif pairs:
                expected = "pivot"
            else:
                expected = "no_pivot"
            assert got.status == expected, f"trial {trial}"


class TestRankTexts:
    def _metrics(self):
        return [
            metrics_from_components("a", ComponentScores(tce=8.0), {"CT-MP": 4.0}),
            metrics_from_components("b", ComponentScores(tce=4.0, trr=1.0), {"CT-MP": 2.0}),
            metrics_from_components("c", ComponentScores(trr=2.0), {"CT-MP": 0.0}),
        ]

    def test_code_key(self, scheme):
        top = rank_texts(self._metrics(), "CT-MP", 2, scheme)
        assert top == [("a", 4.0), ("b", 2.0)]

    def test_component_key(self, scheme):
        top = rank_texts(self._metrics(), "TRR", 3, scheme)
        assert [doc for doc, _ in top] == ["c", "b", "a"]

    def test_tie_breaks_by_doc_id(self, scheme):
        ms = [
            metrics_from_components("b", ComponentScores(), {"CT-UF": 1.0}),
            metrics_from_components("a", ComponentScores(), {"CT-UF": 1.0}),
        ]
        assert [doc for doc, _ in rank_texts(ms, "CT-UF", 2, scheme)] == ["a", "b"]

    def test_prefix_property(self, scheme):
        ms = self._metrics()
        for key in ("CT-MP", "TCE", "PRO"):
            full = rank_texts(ms, key, len(ms), scheme)
            for k in range(1, len(ms) + 1):
                assert rank_texts(ms, key, k, scheme) == full[:k]

    def test_unknown_key(self, scheme):
        with pytest.raises(UnknownCodeError):
            rank_texts(self._metrics(), "NOT-A-KEY", 2, scheme)


class TestDynamics:
    def _corpus_and_metrics(self, author_points):
        docs, ms = [], []
        for author, points in author_points.items():
            for i, (day, tsda_value, tsdb_value) in enumerate(points):
                doc_id = f"{author.lower().replace(' ', '-')}-{i}"
                docs.append(
                    make_document(doc_id=doc_id, author=author, date=day, n_words=800)
                )
                if tsdb_value is None:
                    ms.append(metrics_undefined(doc_id))
                else:
                    ms.append(metrics_from_point(doc_id, tsda_value, tsdb_value))
        return make_corpus(*docs), ms

    def test_reported_author_deltas(self):
        corpus, ms = self._corpus_and_metrics(
            {
                "Sundar Pichai": [("2020-01-20", -6.35, 0.43), ("2025-02-10", 28.83, 0.18)],
                "Vinod Khosla": [("2017-09-08", -0.94, 0.49), ("2024-07-15", 32.38, 0.26)],
            }
        )
        summary = dynamics(ms, corpus)
        by_author = {t.author: t for t in summary.trajectories}
        assert by_author["Sundar Pichai"].delta_tsda == pytest.approx(35.18, abs=1e-9)
        assert by_author["Vinod Khosla"].delta_tsda == pytest.approx(33.32, abs=1e-9)
        assert by_author["Vinod Khosla"].delta_tsdb == pytest.approx(-0.23, abs=1e-9)

    def test_five_of_seven_increase(self):
        rising = {f"Up {i}": [("2020-01-01", 1.0, 0.2), ("2024-01-01", 5.0 + i, 0.2)] for i in range(5)}
        falling = {f"Down {i}": [("2020-01-01", 9.0, 0.2), ("2024-01-01", 2.0, 0.2)] for i in range(2)}
        corpus, ms = self._corpus_and_metrics({**rising, **falling})
        summary = dynamics(ms, corpus)
        assert summary.n_multi_text == 7
        assert summary.n_increasing == 5
        assert summary.increase_fraction == pytest.approx(5 / 7)

    def test_single_text_author(self):
        corpus, ms = self._corpus_and_metrics({"Solo Writer": [("2021-01-01", 3.0, 0.2)]})
        summary = dynamics(ms, corpus)
        trajectory = summary.trajectories[0]
        assert len(trajectory.points) == 1
        assert trajectory.delta_tsda is None and trajectory.delta_tsdb is None
        assert summary.n_multi_text == 0
        assert summary.increase_fraction is None

    def test_points_sorted_by_date(self):
        corpus, ms = self._corpus_and_metrics(
            {"Z Author": [("2024-05-01", 9.0, 0.2), ("2020-01-01", 1.0, 0.3)]}
        )
        trajectory = dynamics(ms, corpus).trajectories[0]
        assert [p.date.isoformat() for p in trajectory.points] == ["2020-01-01", "2024-05-01"]
        assert trajectory.delta_tsda == pytest.approx(8.0)

    def test_polarization_windows(self):
        corpus, ms = self._corpus_and_metrics(
            {
                "Early Elder": [("2020-01-01", -5.0, 0.3), ("2021-01-01", 5.0, 0.3)],
                "Late Lurker": [("2023-06-01", 30.0, 0.1), ("2024-06-01", -10.0, 0.1)],
            }
        )
        summary = dynamics(ms, corpus, cut_date=datetime.date(2022, 11, 30))
        assert summary.before.n == 2 and summary.after.n == 2
        assert summary.before.spread == pytest.approx(10.0)
        assert summary.after.spread == pytest.approx(40.0)
        assert summary.after.sd == pytest.approx(statistics.pstdev([30.0, -10.0]))

    def test_cut_before_everything_matches_corpus_stats(self):
        corpus, ms = self._corpus_and_metrics(
            {
                "Author One": [("2020-01-01", -5.0, 0.3), ("2023-01-01", 5.0, 0.3)],
                "Author Two": [("2021-01-01", 12.0, 0.1)],
            }
        )
        summary = dynamics(ms, corpus, cut_date=datetime.date(2010, 1, 1))
        assert summary.before.n == 0 and summary.before.sd is None
        assert summary.after.sd == pytest.approx(corpus_stats(ms).sd_tsda, abs=1e-12)
