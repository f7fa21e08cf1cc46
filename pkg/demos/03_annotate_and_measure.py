"""
The annotate-then-measure loop on a single document
====================================================

Builds a small document in memory, attaches standoff annotations one at a
time, and watches TSDA/TSDB respond. Offsets count Unicode scalar values,
end exclusive; overlapping spans are fine.
"""

import datetime

from tsdlab import (
    Annotation,
    AnnotationSet,
    Author,
    Corpus,
    add_annotation,
    builtin_tsd_scheme,
    text_metrics,
)

scheme = builtin_tsd_scheme()
corpus = Corpus()
corpus.add_author(Author("Demo Author", "CEO", "Demo Corp"))

body = (
    "Intelligence systems will lift every field at once. "              # utopian claim
    "Progress of this kind cannot be stopped, only steered. "           # inevitability claim
    "There are real risks of misuse and displacement. "                 # risk acknowledgment
    "Better monitoring models will catch misuse early. "                # tech solution
    "Stronger labor policy must carry the transition too."              # non-tech solution
)
doc = corpus.ingest_document(
    body, id="demo-text", author="Demo Author", title="A short demo text",
    date="2024-06-01", text_type="blog-post", topic="AI",
)
print(f"document {doc.id!r}: {doc.word_count} words, {len(doc.body)} characters")


def at(minute):
    return datetime.datetime(2025, 3, 1, 10, minute, tzinfo=datetime.timezone.utc)


moves = [
    (0, 52, "CT-UF"),     # utopian future
    (53, 105, "TC-PD"),   # progress driver
    (106, 155, "ACK-RI"), # risk acknowledged...
    (156, 204, "ADD-ST"), # ...pivot to a tech fix
    (205, 255, "ADD-SN"), # ...and a non-tech response
]

aset = AnnotationSet(scheme.version)
for i, (start, end, code) in enumerate(moves):
    ann = Annotation("demo-text", start, end, code, "analyst", at(i))
    aset = add_annotation(aset, ann, corpus, scheme)
    m = text_metrics(doc, aset, scheme)
    tsdb_text = "undefined" if m.tsdb is None else f"{m.tsdb:.3f}"
    excerpt = body[start:end][:34]
    print(f"+ {code:<7} {excerpt!r:<38} tsda={m.tsda:>7.2f}  tsdb={tsdb_text}")

m = text_metrics(doc, aset, scheme)
print("\nfinal components:")
print(f"  TCE={m.components.tce:.2f}  TRR={m.components.trr:.2f}  "
      f"ANTI_TCE={m.components.anti_tce:.2f}  ANTI_TRR={m.components.anti_trr:.2f}")
print(f"  pro={m.components.pro:.2f}  anti={m.components.anti:.2f}  "
      f"tsda={m.tsda:.2f}  tsdb={m.tsdb:.3f}")
