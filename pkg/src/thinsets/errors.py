"""Exception hierarchy shared by every module in the package."""


class ThinsetsError(Exception):
    """Base class for all package errors."""


class ForeignElementError(ThinsetsError, ValueError):
    """An element does not belong to the group it was used with."""


class ExhaustedEnumerationError(ThinsetsError, IndexError):
    """A finite group was asked for more elements than it has."""


class SpecParseError(ThinsetsError, ValueError):
    """A textual spec (group, subset, cardinal, element) failed to parse.

    ``position`` is the 0-based character offset where parsing stopped.
    """

    def __init__(self, message: str, text: str = "", position: int = 0):
        self.text = text
        self.position = position
        if text:
            line = text.count("\n", 0, position) + 1
            col = position - (text.rfind("\n", 0, position) + 1) + 1
            message = f"{message} (line {line}, column {col}): {text!r}"
        super().__init__(message)


class IdentityRadiusError(ThinsetsError, ValueError):
    """The identity was passed where a non-identity translate is required."""


class CapExceededError(ThinsetsError):
    """A closure iteration grew beyond its configured size limits.

    ``chain`` holds the partial increasing chain reached before giving up.
    """

    def __init__(self, message: str, chain=()):
        super().__init__(message)
        self.chain = list(chain)


class InputNotThinError(ThinsetsError):
    """A partition input fails the m-thin window check; ``witness`` is the violator."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class ScheduleInfeasibleError(ThinsetsError):
    """Greedy coloring ran out of colors outside the exempt region."""

    def __init__(self, message: str, ball=()):
        super().__init__(message)
        self.ball = ball


class PreconditionError(ThinsetsError, ValueError):
    """A documented precondition does not hold; ``witness`` explains why."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class ChainError(ThinsetsError, ValueError):
    """A subgroup chain is malformed."""


class NotASubgroupError(ChainError):
    """A set claimed to be a subgroup is not closed under the group operations."""


class ChainNotCoveringError(ChainError):
    """A subgroup chain does not cover the requested window."""


class PartitionArityError(ThinsetsError):
    """A level partitioner returned more parts than allowed."""


class NotAPartitionError(ThinsetsError, ValueError):
    """Blocks that should partition a point set overlap or miss points."""


class IntersectionCapError(ThinsetsError):
    """Two blocks meet in more points than the window-derived cap allows."""


class IndexingCollisionError(ThinsetsError):
    """A pair indexing is not injective or produced coinciding elements."""


class GenericityError(ThinsetsError):
    """A seeded indexing failed the genericity audit; ``audit`` holds details."""

    def __init__(self, message: str, audit=None):
        super().__init__(message)
        self.audit = audit


class DegenerateArgumentError(ThinsetsError, ValueError):
    """Arguments coincide or are the identity where distinct non-zero ones are needed."""


class RepeatedIndexError(ThinsetsError, ValueError):
    """A Vandermonde-type system was given repeated indices (zero determinant)."""


class UnsupportedOrdinalError(ThinsetsError, ValueError):
    """An ordinal lies outside the supported fragment."""
