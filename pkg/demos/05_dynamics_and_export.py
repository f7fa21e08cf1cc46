"""
Temporal dynamics and chart-dataset export
==========================================

Per-author TSDA trajectories, the before/after polarization split around the
ChatGPT launch, and the spectrum/dynamics datasets written as CSV and JSON.
"""

import tempfile
from pathlib import Path

from tsdlab import (
    builtin_tsd_scheme,
    corpus_metrics,
    dynamics,
    dynamics_data,
    export,
    load_annotations,
    load_corpus,
    load_events,
    spectrum_data,
)

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

scheme = builtin_tsd_scheme()
corpus = load_corpus(FIXTURES / "corpus.json")
aset = load_annotations(FIXTURES / "annotations.jsonl", scheme)
metrics = corpus_metrics(corpus, aset, scheme)

summary = dynamics(metrics, corpus)
print(f"cut date: {summary.cut_date}\n")
for t in summary.trajectories:
    path = " -> ".join(f"{p.date.year}:{p.tsda:.1f}" for p in t.points)
    delta = "n/a" if t.delta_tsda is None else f"{t.delta_tsda:+.2f}"
    print(f"  {t.author:<18} {path:<34} delta {delta}")
print(f"\nrising adherence: {summary.n_increasing} of {summary.n_multi_text} authors "
      f"({summary.increase_fraction:.0%})")
for name, window in (("before", summary.before), ("after", summary.after)):
    print(f"  {name:<6} n={window.n:>2}  spread={window.spread:.2f}  sd={window.sd:.2f}")

# Chart datasets: the spectrum scatter (x=tsdb, y=tsda) and per-author series.
events = load_events(FIXTURES / "events.json")
spectrum = spectrum_data(metrics, corpus, scheme.version)
series = dynamics_data(metrics, corpus, scheme.version, events)
print(f"\nspectrum points: {len(spectrum.points)}, excluded (undefined tsdb): "
      f"{list(spectrum.excluded) or 'none'}")

out_dir = Path(tempfile.mkdtemp(prefix="tsdlab-demo-"))
for fmt in ("csv", "json"):
    export(spectrum, fmt, out_dir / f"spectrum.{fmt}")
    export(series, fmt, out_dir / f"dynamics.{fmt}")
print(f"wrote spectrum+dynamics csv/json under {out_dir}")
print("\nspectrum.csv preview:")
print("\n".join((out_dir / "spectrum.csv").read_text().splitlines()[:5]))
