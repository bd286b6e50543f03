"""Exception types shared across the package.

Every error kind the library can raise deliberately lives here, so callers
can distinguish bad input (ValueError subclasses) from broken internal
expectations (ContractViolationError).
"""


class Char2ConfError(Exception):
    """Base class for all errors raised deliberately by this package."""


class ModulusReducibleError(Char2ConfError, ValueError):
    """The requested field modulus factors over GF(2)."""


class UnsupportedDegreeError(Char2ConfError, ValueError):
    """Extension degree outside the supported range."""


class FieldMismatchError(Char2ConfError, ValueError):
    """Two carriers built over different fields were combined."""


class DimMismatchError(Char2ConfError, ValueError):
    """Vector or matrix dimension does not match the form."""


class DegenerateBilinearError(Char2ConfError, ValueError):
    """The derived bilinear form is degenerate where it must not be."""


class DegenerateFormError(Char2ConfError, ValueError):
    """The quadratic form has a nontrivial radical where it must not."""


class TooLargeError(Char2ConfError, ValueError):
    """Requested exhaustive enumeration exceeds the desk-scale guard."""


class NotPartialIsometryError(Char2ConfError, ValueError):
    """The given domain/image vectors do not define an isometry of spans."""


class NotEmbeddableError(Char2ConfError, ValueError):
    """The space admits no non-degenerate virtual embedding."""


class PreconditionViolatedError(Char2ConfError, ValueError):
    """A documented operation precondition does not hold."""


class BuildFailedError(Char2ConfError, RuntimeError):
    """Geometry construction could not satisfy the requested invariants."""


class DegenerateOmegaError(Char2ConfError, ValueError):
    """A replacement omega vector has Q = 0."""


class NotDefinedError(Char2ConfError, ValueError):
    """The requested quantity is undefined for this input."""


class NotIndependentError(Char2ConfError, ValueError):
    """The given cycle is linearly dependent on the geometry frame."""


class IdealLineError(Char2ConfError, ValueError):
    """The operation needs a non-ideal line."""


class NotConnectedError(Char2ConfError, ValueError):
    """No isometry in the allowed group connects the two points."""


class AmbiguousDistanceError(Char2ConfError, RuntimeError):
    """More than one allowed isometry connects the two points."""


class ContractViolationError(Char2ConfError, RuntimeError):
    """An internal invariant guaranteed by the theory failed to hold."""
