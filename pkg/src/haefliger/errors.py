"""Exception hierarchy shared by all modules.

Every error raised by this package derives from :class:`HaefligerError`,
so callers (and the CLI) can catch one base class and map subclasses to
exit codes.
"""


class HaefligerError(Exception):
    """Base class for all package errors."""


class IndexOutOfRange(HaefligerError):
    """A crossing index references a crossing outside 1..m."""


class AsymmetricEntry(HaefligerError):
    """Two conflicting linking values supplied for one unordered pair."""


class DuplicateIndex(HaefligerError):
    """A list of crossing indices contains a repeat."""


class InconsistentEvent(HaefligerError):
    """A homotopy event's data is inconsistent (e.g. index out of 1..2k-1)."""


class NonGenericProjection(HaefligerError):
    """The projection hit a degenerate configuration; perturb the axis."""


class CurvesIntersect(HaefligerError):
    """Two curves (or a curve and itself) come within tolerance in R^3."""


class BandObstructed(HaefligerError):
    """A connected-sum band hits a curve or introduces new crossings."""


class InvalidParams(HaefligerError):
    """Construction parameters violate a standing hypothesis."""


class MalformedToken(HaefligerError):
    """A Gauss-code token does not match O/U + label + sign."""


class LabelMismatch(HaefligerError):
    """A crossing label is missing an O or U passage, or signs disagree."""


class NonIntegerResult(HaefligerError):
    """A value that must be an integer came out fractional."""


class NonRealizable(HaefligerError):
    """The Gauss code fails a planarity condition."""


class ParseError(HaefligerError):
    """An input file does not match the expected schema."""
