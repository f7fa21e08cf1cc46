"""Regenerate the bundled fixture corpus under fixtures/.

Bodies are synthetic placeholder prose (the real texts are copyrighted);
annotation counts and word counts are solved so each document's TSDA/TSDB
lands close to a chosen target and the corpus exhibits the expected
patterns: CT-UF/TC-PD co-occurrence in 10 of 14 documents, the
risk-acknowledgment pivot in 13 of 14, two BTO documents, and five of the
seven authors rising over time.

Run from the repository root: python tools/make_fixtures.py
"""

from __future__ import annotations

import datetime
import json
import random
from pathlib import Path

from tsdlab import analysis, annotation, corpus as corpus_mod, metrics, schema

ROOT = Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "fixtures"

AUTHORS = [
    ("Sam Altman", "CEO", "OpenAI"),
    ("Dario Amodei", "CEO", "Anthropic"),
    ("Marc Andreessen", "MP", "Andreessen Horowitz"),
    ("Vinod Khosla", "MP", "Khosla Ventures"),
    ("Sundar Pichai", "CEO", "Google"),
    ("Mustafa Suleyman", "CEO", "Microsoft AI"),
    ("Hemant Taneja", "MP", "General Catalyst Partners"),
]

# id, author, title, date, text_type, topic, word_count, target (tsda, tsdb),
# code counts. Weighted sums of the counts against the built-in weight table
# produce the target pair at the given word count.
DOCUMENTS = [
    ("altman-2024-control", "Sam Altman", "Who will control the future of AI?",
     "2024-07-25", "op-ed", "AI", 1262, (9.51, 0.30),
     {"CT-UF": 3, "TC-PD": 2, "CT-MP": 1, "TG-TF": 2, "SL-SF": 1, "ADD-ST": 2,
      "ADD-JU": 2, "ACK-RI": 7, "ADD-SN": 1}),
    ("altman-2024-intelligence", "Sam Altman", "The Intelligence Age",
     "2024-09-23", "blog-post", "AI", 816, (55.15, 0.09),
     {"CT-UF": 8, "TC-PD": 6, "CT-MP": 4, "TC-AA": 2, "SL-SP": 1, "TG-PE": 2,
      "TG-SO": 1, "SL-UI": 1, "ADD-JU": 2, "ADD-ST": 1, "ACK-RI": 5}),
    ("amodei-2023-scaling", "Dario Amodei", "Remarks on a responsible scaling policy",
     "2023-09-19", "blog-post", "AI", 830, (-22.89, 0.12),
     {"ADD-ST": 1, "ACK-CR": 1, "ACK-RI": 8, "ADD-SN": 5, "ANTI-TC-PD": 1,
      "ANTI-CT-MP": 1}),
    ("amodei-2024-grace", "Dario Amodei", "Machines of Loving Grace",
     "2024-10-11", "blog-post", "AI", 1412, (8.50, 0.35),
     {"CT-UF": 4, "CT-MP": 3, "TC-PD": 3, "TG-TF": 2, "ADD-ST": 2, "ACK-RI": 6,
      "ADD-SN": 3, "ANTI-TC-PD": 1}),
    ("andreessen-2023-save", "Marc Andreessen", "Why AI Will Save the World",
     "2023-06-06", "blog-post", "AI", 1029, (35.00, 0.05),
     {"CT-UF": 6, "TC-PD": 4, "TC-AA": 2, "MAR-DI": 4, "MAR-MI": 2, "TG-TF": 2,
      "ACK-RI": 2}),
    ("andreessen-2023-manifesto", "Marc Andreessen", "The Techno-Optimist Manifesto",
     "2023-10-16", "blog-post", "general-tech", 750, (48.00, 0.00),
     {"CT-UF": 3, "TC-PD": 3, "TC-AA": 2, "CT-DE": 2, "MAR-DI": 5, "MAR-DE": 2,
      "MAR-RF": 2, "TG-TF": 2}),
    ("khosla-2017-scary", "Vinod Khosla", "AI: Scary for the Right Reasons",
     "2017-09-08", "blog-post", "AI", 1064, (-0.94, 0.49),
     {"CT-UF": 2, "TC-PD": 2, "TG-TF": 2, "SL-SF": 2, "ADD-ST": 3,
      "ADD-JU": 3, "ACK-CR": 3, "ACK-RI": 13, "ADD-SN": 6}),
    ("khosla-2024-utopia", "Vinod Khosla", "AI: Dystopia or Utopia?",
     "2024-07-15", "blog-post", "AI", 927, (32.38, 0.26),
     {"CT-UF": 7, "TC-PD": 6, "CT-MP": 3, "TC-AA": 1, "SL-SP": 1, "TG-SO": 2,
      "SL-UI": 2, "ADD-ST": 2, "ADD-RE": 2, "ACK-RI": 16}),
    ("pichai-2020-regulate", "Sundar Pichai", "Why we need to regulate AI",
     "2020-01-20", "op-ed", "AI", 945, (-6.35, 0.43),
     {"TC-PD": 2, "TG-TF": 2, "SL-SF": 1, "ADD-ST": 4, "ADD-JU": 2, "ACK-CR": 2,
      "ACK-RI": 11, "ADD-SN": 6, "ANTI-TC-AA": 1}),
    ("pichai-2025-innovation", "Sundar Pichai", "A golden age of innovation",
     "2025-02-10", "blog-post", "AI", 1110, (28.83, 0.18),
     {"CT-UF": 4, "TC-PD": 4, "CT-MP": 2, "TG-PE": 3, "TG-SO": 2, "SL-SF": 2,
      "ADD-ST": 4, "ADD-JU": 2, "MAR-MI": 2, "ACK-RI": 7, "ADD-SN": 1}),
    ("suleyman-2023-intelligence", "Mustafa Suleyman", "The Technology of Intelligence",
     "2023-09-05", "book-chapter", "AI", 1333, (6.00, 0.33),
     {"CT-UF": 2, "TC-PD": 2, "CT-MP": 1, "TG-TF": 2, "ADD-ST": 2, "ACK-RI": 6,
      "ADD-SN": 1}),
    ("suleyman-2024-containment", "Mustafa Suleyman", "Containment for AI",
     "2024-03-01", "op-ed", "AI", 1000, (-12.00, 0.30),
     {"CT-UF": 1, "CT-MP": 2, "TG-TF": 1, "ADD-JU": 2, "ACK-RI": 7, "ADD-SN": 5,
      "ANTI-TC-PD": 2}),
    ("taneja-2018-century", "Hemant Taneja", "The AI Century",
     "2018-03-27", "book-chapter", "AI", 2000, (14.00, 0.22),
     {"CT-UF": 3, "TC-PD": 4, "CT-MP": 2, "TC-OS": 2, "TG-TF": 3, "SL-SF": 2,
      "SL-SP": 1, "ADD-ST": 4, "ADD-RE": 2, "ACK-CR": 2, "ACK-RI": 9, "ADD-SN": 1}),
    ("taneja-2022-consequences", "Hemant Taneja", "The End of Unintended Consequences",
     "2022-01-18", "book-chapter", "general-tech", 3333, (1.20, 0.46),
     {"TC-PD": 3, "TC-AA": 1, "TG-TF": 2, "SL-SF": 1, "TG-SO": 2, "ADD-ST": 4,
      "ADD-JU": 2, "ADD-RE": 2, "ACK-CR": 2, "ACK-RI": 9, "ADD-SN": 5,
      "ANTI-CT-DE": 2}),
]

EVENTS = [
    {"date": "2021-04-21", "label": "EU AI Act proposed"},
    {"date": "2022-11-30", "label": "ChatGPT launch"},
    {"date": "2025-02-10", "label": "AI Action Summit"},
]

VOCABULARY = (
    "systems tools people progress questions futures design choices public "
    "work ideas limits voices markets growth context trust power change risks "
    "hope plans schools health cities data minds hands books roads maps lines "
    "words turns café models’ answers shifts claims scale labs value care tests "
    "debate stories signals habits norms rules paths goals means ends"
).split()


def make_body(doc_id: str, n_words: int) -> tuple[str, list[tuple[int, int]]]:
    """Deterministic filler prose with exactly n_words countable words.

    Returns the body and the (start, end) character span of every word.
    """
    rng = random.Random(f"body:{doc_id}")
    words: list[str] = ["Synthetic", "placeholder", "text", "for", "the", "demo", "corpus."]
    sentence_left = rng.randint(6, 12)
    while len(words) < n_words:
        word = rng.choice(VOCABULARY)
        sentence_left -= 1
        if sentence_left == 0:
            word += "."
            sentence_left = rng.randint(6, 12)
            next_word = True
        else:
            next_word = False
        words.append(word)
        if next_word and len(words) < n_words:
            words[len(words) - 1] = words[len(words) - 1]
    # Capitalize sentence starts for a prose-like look.
    body_words = []
    capitalize = False
    for w in words:
        if capitalize:
            w = w[0].upper() + w[1:]
        capitalize = w.endswith(".")
        body_words.append(w)
    body = " ".join(body_words)
    spans = []
    cursor = 0
    for w in body_words:
        spans.append((cursor, cursor + len(w)))
        cursor += len(w) + 1
    return body, spans


def plan_annotations(doc_id: str, counts: dict[str, int], word_spans, scheme) -> list[dict]:
    rng = random.Random(f"ann:{doc_id}")
    codes: list[str] = []
    for code, count in sorted(counts.items()):
        codes.extend([code] * count)
    rng.shuffle(codes)

    # Guarantee the pivot: some TRR-component annotation must start after the
    # first risk acknowledgment.
    trr = set(scheme.codes_in("TRR"))
    if "ACK-RI" in codes and trr & set(codes):
        first_ack = codes.index("ACK-RI")
        last_trr = max(i for i, c in enumerate(codes) if c in trr)
        if last_trr < first_ack:
            codes[first_ack], codes[last_trr] = codes[last_trr], codes[first_ack]

    n = len(codes)
    usable = len(word_spans) - 10
    records = []
    base = datetime.datetime(2025, 3, 15, 9, 0, tzinfo=datetime.timezone.utc)
    for i, code in enumerate(codes):
        start_word = (i * usable) // n
        length = rng.randint(3, 8)
        end_word = min(start_word + length, len(word_spans) - 1)
        records.append(
            {
                "doc_id": doc_id,
                "start": word_spans[start_word][0],
                "end": word_spans[end_word][1],
                "code": code,
                "annotator": "analyst",
                "created_at": (base + datetime.timedelta(minutes=i)).isoformat(),
                "note": None,
            }
        )
    return records


def main() -> None:
    scheme = schema.builtin_tsd_scheme()
    FIXTURES.mkdir(exist_ok=True)
    docs_dir = FIXTURES / "docs"
    docs_dir.mkdir(exist_ok=True)

    manifest = {
        "authors": [{"name": n, "role": r, "company": c} for n, r, c in AUTHORS],
        "documents": [],
    }
    all_records: list[dict] = []
    for doc_id, author, title, date, text_type, topic, n_words, target, counts in DOCUMENTS:
        body, word_spans = make_body(doc_id, n_words)
        assert corpus_mod.word_count(body) == n_words, doc_id
        (docs_dir / f"{doc_id}.txt").write_text(body, encoding="utf-8")
        manifest["documents"].append(
            {
                "id": doc_id,
                "author": author,
                "title": title,
                "date": date,
                "text_type": text_type,
                "topic": topic,
                "path": f"docs/{doc_id}.txt",
            }
        )
        all_records.extend(plan_annotations(doc_id, counts, word_spans, scheme))

    (FIXTURES / "corpus.json").write_text(
        json.dumps(manifest, ensure_ascii=False, indent=2) + "\n", encoding="utf-8"
    )
    aset = annotation.parse_annotations(
        "\n".join(json.dumps(r, ensure_ascii=False) for r in all_records), scheme.version
    )
    (FIXTURES / "annotations.jsonl").write_text(
        annotation.serialize_annotations(aset), encoding="utf-8"
    )
    (FIXTURES / "events.json").write_text(
        json.dumps(EVENTS, ensure_ascii=False, indent=2) + "\n", encoding="utf-8"
    )

    # Verify the generated corpus hits its targets and patterns.
    corp = corpus_mod.load_corpus(FIXTURES / "corpus.json")
    ms = metrics.corpus_metrics(corp, aset, scheme)
    by_id = {m.doc_id: m for m in ms}
    for doc_id, _a, _t, _d, _tt, _to, _w, (t_tsda, t_tsdb), _c in DOCUMENTS:
        m = by_id[doc_id]
        assert abs(m.tsda - t_tsda) < 0.05, (doc_id, m.tsda, t_tsda)
        assert abs((m.tsdb or 0.0) - t_tsdb) < 0.01, (doc_id, m.tsdb, t_tsdb)
        print(f"{doc_id:<28} tsda {m.tsda:>7.2f} (target {t_tsda:>7.2f})  "
              f"tsdb {m.tsdb:.3f} (target {t_tsdb:.2f})")

    count, doc_ids = analysis.co_occurrence(aset, corp, scheme, "CT-UF", "TC-PD")
    assert count == 10, doc_ids
    pivots = analysis.ack_pivot_scan(aset, corp, scheme)
    statuses = [p.status for p in pivots.values()]
    assert statuses.count("pivot") == 13 and statuses.count("not_applicable") == 1, statuses
    assert pivots["andreessen-2023-manifesto"].status == "not_applicable"
    bto = [m.doc_id for m in ms if analysis.detect_bto(m, scheme)]
    assert set(bto) == {"amodei-2024-grace", "suleyman-2024-containment"}, bto
    summary = analysis.dynamics(ms, corp)
    assert (summary.n_increasing, summary.n_multi_text) == (5, 7)
    print(f"\nco-occurrence: {count}/14, pivots: {statuses.count('pivot')}/14, "
          f"bto: {sorted(bto)}, rising authors: {summary.n_increasing}/{summary.n_multi_text}")


if __name__ == "__main__":
    main()
