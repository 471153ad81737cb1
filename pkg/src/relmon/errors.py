"""Error channels.

Law failures are never raised: they are returned as a :class:`LawReport`.
Exceptions here signal data that cannot be checked at all.
"""


class RelmonError(Exception):
    pass


class StructuralError(RelmonError, ValueError):
    """Malformed data: dom/cod mismatch, partial tables, unknown names."""


class UnsupportedTierError(RelmonError):
    """Operation needs a finitely presented category (or complete homs)."""


class ResourceError(RelmonError):
    """An enumeration would exceed the configured cap."""

    def __init__(self, message, estimate=None):
        super().__init__(message)
        self.estimate = estimate


class LawViolationError(RelmonError):
    """Raised only where a constructor insists on lawful input."""

    def __init__(self, report):
        super().__init__(f"law check failed for {report.subject}: "
                         f"{', '.join(report.failed_axioms())}")
        self.report = report
