"""
Spectrum analysis: statistics, profiles, and discursive patterns
================================================================

Runs the corpus-level analysis over the bundled demo corpus: TSDA/TSDB
aggregates, the three discourse profiles, benign techno-optimism detection,
the CT-UF/TC-PD co-occurrence count, the risk-acknowledgment pivot scan,
and top-k rankings.
"""

from pathlib import Path

from tsdlab import (
    ack_pivot_scan,
    builtin_tsd_scheme,
    classify_profile,
    co_occurrence,
    corpus_metrics,
    corpus_stats,
    detect_bto,
    load_annotations,
    load_corpus,
    rank_texts,
)

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

scheme = builtin_tsd_scheme()
corpus = load_corpus(FIXTURES / "corpus.json")
aset = load_annotations(FIXTURES / "annotations.jsonl", scheme)
metrics = corpus_metrics(corpus, aset, scheme)

stats = corpus_stats(metrics)
print(f"n={stats.n}  TSDA mean {stats.mean_tsda:.2f} sd {stats.sd_tsda:.2f} "
      f"range [{stats.min_tsda:.2f}, {stats.max_tsda:.2f}]")
print(f"      TSDB mean {stats.mean_tsdb:.2f} sd {stats.sd_tsdb:.2f} "
      f"range [{stats.min_tsdb:.2f}, {stats.max_tsdb:.2f}]\n")

# Three profiles: balance first, then adherence sign.
print("profiles:")
for m in metrics:
    label = classify_profile(m)
    tsdb_text = "undef" if m.tsdb is None else f"{m.tsdb:.2f}"
    print(f"  {m.doc_id:<28} tsda={m.tsda:>7.2f} tsdb={tsdb_text:<6} -> "
          f"{label.profile if label else 'unclassified'}")

# Benign techno-optimism: strong utopian/magical discourse tempered by
# tenet contradictions or non-technological solutions.
print("\nbenign techno-optimism:")
for m in metrics:
    hit = detect_bto(m, scheme)
    if hit:
        facts = ", ".join(
            f"{e.get('code', e.get('component'))}={e['value']:.2f}" for e in hit.evidence
        )
        print(f"  {m.doc_id}: {facts}")

count, doc_ids = co_occurrence(aset, corpus, scheme, "CT-UF", "TC-PD")
print(f"\nCT-UF and TC-PD co-occur in {count} of {len(corpus)} documents")

pivots = ack_pivot_scan(aset, corpus, scheme)
pivot_count = sum(1 for r in pivots.values() if r.status == "pivot")
missing = [r.doc_id for r in pivots.values() if r.status == "not_applicable"]
print(f"risk acknowledged then answered pro-TSD in {pivot_count} documents; "
      f"no ACK-RI at all in {missing}")

print("\ntop five by CT-UF frequency:")
for doc_id, value in rank_texts(metrics, "CT-UF", 5, scheme):
    print(f"  {doc_id:<28} {value:.2f} per 1,000 words")
print("top five by ANTI side:")
for doc_id, value in rank_texts(metrics, "ANTI", 5, scheme):
    print(f"  {doc_id:<28} {value:.2f}")
