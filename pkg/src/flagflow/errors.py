"""Exception hierarchy for flagflow."""


class FlagflowError(Exception):
    """Base class for every error raised by the library."""


class InvalidTypeError(FlagflowError, ValueError):
    """A (family, rank) pair outside the table of simple types."""


class DomainError(FlagflowError, ValueError):
    """An argument lies outside the domain of an operation."""


class ShapeError(DomainError):
    """A torus-bundle configuration has the wrong shape (fiber count, k)."""


class PicardHypothesisError(DomainError):
    """The base flag manifold has Picard number at most one."""


class FiberDegreeError(DomainError):
    """A fiber line bundle is not in the degree-zero sublattice."""


class FlowIntervalError(DomainError):
    """A flow time lies outside the maximal interval (-inf, lambda)."""
