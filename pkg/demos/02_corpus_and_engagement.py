"""
Corpus construction: engagement scoring and text selection
===========================================================

Loads the bundled demo corpus (14 synthetic texts by 7 authors), scores each
author's engagement from total words and distinct publication dates, and
shows the per-author two-text selection that prioritizes type diversity,
then AI-topic specificity, then length.
"""

from pathlib import Path

from tsdlab import (
    engaged_authors,
    engagement_scores,
    is_eligible,
    load_corpus,
    select_author_texts,
)

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

corpus = load_corpus(FIXTURES / "corpus.json")
print(f"{len(corpus)} documents from {len(corpus.authors)} authors\n")

# Eligibility filter: at least 750 words, published 2017 or later.
for doc in corpus.documents:
    flag = "ok " if is_eligible(doc) else "OUT"
    print(f"  [{flag}] {doc.id:<28} {doc.word_count:>5} words  {doc.date}")

# Engagement: min-max of log(total words) and of distinct dates, averaged.
print("\nengagement scores (threshold 0.5, strict):")
scores = engagement_scores(corpus.author_pool())
for s in sorted(scores, key=lambda s: -s.e):
    print(f"  {s.author:<18} w={s.w:>6} d={s.d}  w'={s.w_norm:.3f} d'={s.d_norm:.3f}  e={s.e:.3f}")
kept = engaged_authors(scores)
print(f"engaged authors: {len(kept)}/{len(scores)}")

# Two-text selection per author.
print("\nselected texts (k=2):")
for author in corpus.authors:
    pool = corpus.documents_for(author.name)
    selection = select_author_texts(pool, k=2)
    ids = ", ".join(d.id for d in selection.documents)
    short = "  (short pool)" if selection.short else ""
    print(f"  {author.name:<18} {ids}{short}")
