"""Exception hierarchy shared across the workbench."""


class TsdlabError(Exception):
    """Base class for all workbench errors."""


class SchemeError(TsdlabError):
    """Malformed or invalid coding scheme.

    ``violations`` carries the structured validation report when the scheme
    parsed but failed an invariant check.
    """

    def __init__(self, message, violations=()):
        super().__init__(message)
        self.violations = tuple(violations)


class CorpusError(TsdlabError):
    """Invalid document, author, or manifest data."""


class DuplicateDocumentError(CorpusError):
    pass


class UnknownAuthorError(CorpusError):
    pass


class AnnotationError(TsdlabError):
    """Invalid annotation data or annotation file."""


class UnknownDocumentError(AnnotationError):
    pass


class UnknownCodeError(AnnotationError):
    pass


class SpanOutOfBoundsError(AnnotationError):
    pass


class DuplicateAnnotationError(AnnotationError):
    pass


class MetricsError(TsdlabError):
    """Metric computation failed (empty document, unassigned code, bad key)."""


class ReportError(TsdlabError):
    """Invalid report configuration (events file, export format)."""
