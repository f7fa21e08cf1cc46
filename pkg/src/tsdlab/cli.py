"""Command-line front end: ingest, annotate-import, metrics, analyze, report, serve.

Every command is a thin wrapper over the library API; identical inputs give
identical stdout and files. Exit codes: 0 success, 1 data/runtime error,
2 usage error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import analysis, annotation, corpus as corpus_mod, metrics as metrics_mod, report, schema
from .errors import TsdlabError


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tsdlab",
        description="Coding and metrics workbench for TSD discourse analysis.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, annotations_required=True):
        p.add_argument("--corpus", required=True, help="corpus manifest (JSON)")
        p.add_argument(
            "--annotations",
            required=annotations_required,
            help="annotations file (JSON Lines)",
        )
        p.add_argument("--scheme", help="scheme file (JSON); defaults to the built-in TSD scheme")
        p.add_argument(
            "--annotator",
            action="append",
            help="restrict to this annotator (repeatable); default: all combined",
        )

    p = sub.add_parser("ingest", help="load and validate a corpus manifest")
    p.add_argument("--corpus", required=True, help="corpus manifest (JSON)")
    p.add_argument("--min-words", type=int, default=corpus_mod.ELIGIBLE_MIN_WORDS,
                   help="eligibility length floor (default %(default)s)")
    p.add_argument("--since", default=corpus_mod.ELIGIBLE_SINCE.isoformat(),
                   help="eligibility date cutoff (default %(default)s)")

    p = sub.add_parser("annotate-import", help="validate and normalize an annotations file")
    add_common(p)
    p.add_argument("--out", help="write the normalized JSON Lines here (default: stdout)")

    p = sub.add_parser("metrics", help="per-document TSDA/TSDB table")
    add_common(p)
    p.add_argument("--format", choices=("table", "csv", "json"), default="table")
    p.add_argument("--out", help="write output to this file instead of stdout")

    p = sub.add_parser("analyze", help="corpus statistics, profiles, and patterns")
    add_common(p)
    p.add_argument("--view", choices=("all", "stats", "profiles", "patterns", "dynamics"),
                   default="all")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--balanced-tsdb", type=float, default=analysis.DEFAULT_THRESHOLDS.balanced_tsdb,
                   help="TSDB at or above which a text counts as balanced (default %(default)s)")
    p.add_argument("--optimism-threshold", type=float, default=analysis.DEFAULT_OPTIMISM_THRESHOLD,
                   help="combined CT-UF+CT-MP frequency for the BTO check (default %(default)s)")
    p.add_argument("--counter-threshold", type=float, default=analysis.DEFAULT_COUNTER_THRESHOLD,
                   help="ADD-SN frequency for the BTO counter clause (default %(default)s)")
    p.add_argument("--cut-date", default=analysis.DEFAULT_CUT_DATE.isoformat(),
                   help="before/after boundary for polarization (default %(default)s)")
    p.add_argument("--out", help="write output to this file instead of stdout")

    p = sub.add_parser("report", help="write spectrum and dynamics datasets")
    add_common(p)
    p.add_argument("--events", help="events config (JSON list of {date, label})")
    p.add_argument("--format", choices=("csv", "json"), default="json")
    p.add_argument("--out", default=".", help="output directory (default: current)")
    p.add_argument("--balanced-tsdb", type=float, default=analysis.DEFAULT_THRESHOLDS.balanced_tsdb)

    p = sub.add_parser("serve", help="run the local annotation service")
    p.add_argument("--corpus", required=True)
    p.add_argument("--annotations", required=True,
                   help="annotations file; mutations are persisted here")
    p.add_argument("--scheme")
    p.add_argument("--events")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8572)
    p.add_argument("--ui", help="directory of workbench static files to serve at /")
    p.add_argument("--balanced-tsdb", type=float, default=analysis.DEFAULT_THRESHOLDS.balanced_tsdb)
    p.add_argument("--optimism-threshold", type=float, default=analysis.DEFAULT_OPTIMISM_THRESHOLD)
    p.add_argument("--counter-threshold", type=float, default=analysis.DEFAULT_COUNTER_THRESHOLD)

    return parser


def _load_scheme(args) -> schema.CodingScheme:
    if getattr(args, "scheme", None):
        return schema.load_scheme_file(args.scheme)
    return schema.builtin_tsd_scheme()


def _load_inputs(args):
    scheme = _load_scheme(args)
    corp = corpus_mod.load_corpus(args.corpus)
    aset = annotation.load_annotations(args.annotations, scheme)
    violations = annotation.validate_annotations(aset, corp, scheme)
    if violations:
        lines = "\n".join(f"  {v.message} ({v.annotation.code} on {v.annotation.doc_id})" for v in violations)
        raise TsdlabError(f"annotations file {args.annotations} has invalid entries:\n{lines}")
    return corp, scheme, aset


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _cmd_ingest(args) -> int:
    corp = corpus_mod.load_corpus(args.corpus)
    since = corpus_mod.parse_date(args.since)
    id_width = max([len("doc_id")] + [len(d.id) for d in corp.documents])
    lines = [f"{'doc_id':<{id_width}}  {'author':<18}  {'date':<10}  {'type':<12}  {'topic':<12}  {'words':>6}  eligible"]
    for doc in corp.documents:
        ok = "yes" if corpus_mod.is_eligible(doc, args.min_words, since) else "no"
        lines.append(
            f"{doc.id:<{id_width}}  {doc.author:<18}  {doc.date.isoformat():<10}  "
            f"{doc.text_type:<12}  {doc.topic:<12}  {doc.word_count:>6}  {ok}"
        )
    lines.append(f"{len(corp)} documents, {len(corp.authors)} authors")
    sys.stdout.write("\n".join(lines) + "\n")
    return 0


def _cmd_annotate_import(args) -> int:
    corp, scheme, aset = _load_inputs(args)
    normalized = annotation.serialize_annotations(aset)
    if args.out:
        Path(args.out).write_text(normalized, encoding="utf-8")
        sys.stdout.write(f"imported {len(aset)} annotations -> {args.out}\n")
    else:
        sys.stdout.write(normalized)
    return 0


def _metrics_table(ms) -> str:
    id_width = max([len("doc_id")] + [len(m.doc_id) for m in ms])
    lines = [f"{'doc_id':<{id_width}}  {'tsda':>8}  {'tsdb':>6}"]
    for m in sorted(ms, key=lambda m: m.doc_id):
        lines.append(f"{m.doc_id:<{id_width}}  {report.fmt2(m.tsda):>8}  {report.fmt2(m.tsdb):>6}")
    return "\n".join(lines) + "\n"


def _cmd_metrics(args) -> int:
    corp, scheme, aset = _load_inputs(args)
    ms = metrics_mod.corpus_metrics(corp, aset, scheme, annotators=args.annotator)
    if args.format == "table":
        _emit(_metrics_table(ms), args.out)
    elif args.format == "csv":
        _emit(report.metrics_csv_bytes(ms).decode("utf-8"), args.out)
    else:
        _emit(report.to_json_bytes(report.metrics_payload(ms, scheme.version)).decode("utf-8"), args.out)
    return 0


def _analyze_views(args, corp, scheme, aset):
    thresholds = analysis.ProfileThresholds(balanced_tsdb=args.balanced_tsdb)
    ms = metrics_mod.corpus_metrics(corp, aset, scheme, annotators=args.annotator)
    stats = analysis.corpus_stats(ms)
    labels, unclassified = [], []
    for m in ms:
        label = analysis.classify_profile(m, thresholds)
        if label is None:
            unclassified.append(m.doc_id)
        else:
            labels.append(label)
    bto_hits = [
        hit
        for m in ms
        if (hit := analysis.detect_bto(m, scheme, args.optimism_threshold, args.counter_threshold))
    ]
    pivots = analysis.ack_pivot_scan(aset, corp, scheme)
    count, doc_ids = analysis.co_occurrence(aset, corp, scheme, "CT-UF", "TC-PD")
    summary = analysis.dynamics(ms, corp, corpus_mod.parse_date(args.cut_date))
    payloads = {
        "stats": report.stats_payload(stats, scheme.version),
        "profiles": report.profiles_payload(labels, unclassified, scheme.version),
        "patterns": report.patterns_payload(bto_hits, pivots, ("CT-UF", "TC-PD", count, doc_ids), scheme.version),
        "dynamics": report.dynamics_summary_payload(summary, scheme.version),
    }
    return payloads, (stats, labels, unclassified, bto_hits, pivots, (count, doc_ids), summary)


def _analyze_text(parts) -> str:
    stats, labels, unclassified, bto_hits, pivots, cooc, summary = parts
    f2 = report.fmt2
    lines = [f"Corpus statistics  n={stats.n}  defined-tsdb={stats.n_tsdb}"]
    lines.append(
        f"  TSDA  mean {f2(stats.mean_tsda)}  sd {f2(stats.sd_tsda)}  "
        f"min {f2(stats.min_tsda)}  max {f2(stats.max_tsda)}"
    )
    lines.append(
        f"  TSDB  mean {f2(stats.mean_tsdb)}  sd {f2(stats.sd_tsdb)}  "
        f"min {f2(stats.min_tsdb)}  max {f2(stats.max_tsdb)}"
    )
    lines.append("Profiles")
    for label in sorted(labels, key=lambda l: l.doc_id):
        lines.append(f"  {label.doc_id:<28} {label.profile:<15} [{label.rule_fired}]")
    if unclassified:
        lines.append(f"  unclassified (undefined tsdb): {', '.join(sorted(unclassified))}")
    lines.append("Patterns")
    bto_ids = ", ".join(h.doc_id for h in sorted(bto_hits, key=lambda h: h.doc_id)) or "none"
    lines.append(f"  benign techno-optimism: {bto_ids}")
    by_status = {"pivot": 0, "no_pivot": 0, "not_applicable": 0}
    for result in pivots.values():
        by_status[result.status] += 1
    lines.append(
        f"  risk-acknowledgment pivot: pivot={by_status['pivot']} "
        f"no_pivot={by_status['no_pivot']} not_applicable={by_status['not_applicable']}"
    )
    count, doc_ids = cooc
    lines.append(f"  CT-UF and TC-PD co-occur in {count} documents")
    lines.append(f"Dynamics  cut={summary.cut_date.isoformat()}")
    for t in summary.trajectories:
        delta = f2(t.delta_tsda) if t.delta_tsda is not None else "n/a"
        lines.append(f"  {t.author:<22} points={len(t.points)}  delta_tsda={delta}")
    frac = summary.increase_fraction
    frac_text = "n/a" if frac is None else f"{summary.n_increasing}/{summary.n_multi_text} ({frac:.0%})"
    lines.append(f"  authors with rising adherence: {frac_text}")
    for name, window in (("before", summary.before), ("after", summary.after)):
        spread = f2(window.spread) if window.spread is not None else "n/a"
        sd = f2(window.sd) if window.sd is not None else "n/a"
        lines.append(f"  {name} cut: n={window.n}  spread={spread}  sd={sd}")
    return "\n".join(lines) + "\n"


def _cmd_analyze(args) -> int:
    corp, scheme, aset = _load_inputs(args)
    payloads, parts = _analyze_views(args, corp, scheme, aset)
    if args.format == "json":
        if args.view == "all":
            payload = {key: payloads[key] for key in ("stats", "profiles", "patterns", "dynamics")}
        else:
            payload = payloads[args.view]
        _emit(report.to_json_bytes(payload).decode("utf-8"), args.out)
    else:
        _emit(_analyze_text(parts), args.out)
    return 0


def _cmd_report(args) -> int:
    corp, scheme, aset = _load_inputs(args)
    thresholds = analysis.ProfileThresholds(balanced_tsdb=args.balanced_tsdb)
    ms = metrics_mod.corpus_metrics(corp, aset, scheme, annotators=args.annotator)
    events = report.load_events(args.events) if args.events else ()
    spectrum = report.spectrum_data(ms, corp, scheme.version, thresholds)
    dynamics = report.dynamics_data(ms, corp, scheme.version, events)
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    for name, dataset in (("spectrum", spectrum), ("dynamics", dynamics)):
        path = report.export(dataset, args.format, out_dir / f"{name}.{args.format}")
        sys.stdout.write(f"wrote {path}\n")
    return 0


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    scheme = _load_scheme(args)
    corp = corpus_mod.load_corpus(args.corpus)
    annotations_path = Path(args.annotations)
    if annotations_path.exists():
        aset = annotation.load_annotations(annotations_path, scheme)
    else:
        aset = annotation.AnnotationSet(scheme.version)
    events = report.load_events(args.events) if args.events else ()
    app = create_app(
        corp,
        scheme,
        aset,
        annotations_path=annotations_path,
        thresholds=analysis.ProfileThresholds(balanced_tsdb=args.balanced_tsdb),
        optimism_threshold=args.optimism_threshold,
        counter_threshold=args.counter_threshold,
        events=events,
        ui_dir=args.ui,
    )
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return 0


_COMMANDS = {
    "ingest": _cmd_ingest,
    "annotate-import": _cmd_annotate_import,
    "metrics": _cmd_metrics,
    "analyze": _cmd_analyze,
    "report": _cmd_report,
    "serve": _cmd_serve,
}


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return _COMMANDS[args.command](args)
    except TsdlabError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    except OSError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
