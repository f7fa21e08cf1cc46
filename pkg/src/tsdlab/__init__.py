"""tsdlab: a coding and metrics workbench for TSD discourse analysis.

Human coders annotate corpus texts with the TSD coding scheme; the engine
computes adherence (TSDA) and balance (TSDB) per text, corpus statistics,
discursive-pattern detections, and temporal dynamics, and exports spectrum
and dynamics datasets for charting.
"""

__version__ = "0.1.0"

from .analysis import (
    CorpusStats,
    DynamicsSummary,
    PatternHit,
    PivotResult,
    ProfileLabel,
    ProfileThresholds,
    Trajectory,
    TrajectoryPoint,
    ack_pivot_scan,
    classify_profile,
    co_occurrence,
    corpus_stats,
    detect_bto,
    dynamics,
    rank_texts,
)
from .annotation import (
    Annotation,
    AnnotationSet,
    add_annotation,
    annotations_for,
    code_counts,
    load_annotations,
    parse_annotations,
    remove_annotation,
    save_annotations,
    serialize_annotations,
    validate_annotations,
)
from .corpus import (
    Author,
    Corpus,
    Document,
    EngagementScore,
    TextSelection,
    engaged_authors,
    engagement_scores,
    is_eligible,
    load_corpus,
    select_author_texts,
    word_count,
)
from .errors import TsdlabError
from .metrics import (
    CodeFrequencies,
    ComponentScores,
    TextMetrics,
    component_scores,
    corpus_metrics,
    normalized_frequencies,
    text_metrics,
    tsda,
    tsdb,
)
from .report import (
    DynamicsDataset,
    EventMarker,
    SpectrumDataset,
    dynamics_data,
    export,
    load_events,
    spectrum_data,
)
from .schema import (
    Code,
    CodingScheme,
    ComponentAssignment,
    builtin_tsd_scheme,
    load_scheme,
    load_scheme_file,
    serialize_scheme,
    validate_scheme,
)
