"""Exception types raised across the package.

All inherit from ValueError so generic callers can catch bad input
uniformly while tests and the CLI can distinguish failure modes.
"""


class FairsurvError(ValueError):
    """Base class for all package-specific errors."""


class EmptyInputError(FairsurvError):
    """An estimator or metric received zero records."""


class DomainError(FairsurvError):
    """An argument is outside the mathematical domain of the operation."""


class ShapeError(FairsurvError):
    """Array arguments have inconsistent lengths or shapes."""


class DegenerateVarianceError(FairsurvError):
    """The logrank variance sum is zero; the statistic is undefined."""


class NoComparablePairsError(FairsurvError):
    """No permissible/comparable record pairs exist for a pairwise metric."""


class ConstantAttributeError(FairsurvError):
    """A continuous attribute has a single distinct value; no split exists."""


class NotEstimableError(FairsurvError):
    """A time-dependent metric has no cases or no controls at the given time."""


class SchemaError(FairsurvError):
    """A dataset schema is invalid or does not match the file or model."""


class ParseError(FairsurvError):
    """A delimited-file cell could not be parsed; carries row/column context."""


class NoEventsError(FairsurvError):
    """A loaded or generated dataset contains no observed events."""
