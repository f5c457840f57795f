"""Exception taxonomy. Every failure mode raised by the library derives from FoxHError."""


class FoxHError(Exception):
    """Base class for all library errors."""


class InvalidParamsError(FoxHError):
    """A FoxHParams value failed structural validation."""


class InvalidKernelError(FoxHError):
    """An elementary kernel violates its parameter constraints."""


class DomainError(FoxHError):
    """An argument lies outside the mathematical domain (e.g. t <= 0)."""


class OutOfStripError(FoxHError):
    """Re(s) lies outside the admissible Mellin strip."""


class PoleError(FoxHError):
    """Gamma evaluation requested at (or within 1e-14 of) a nonpositive integer."""


class EmptyStripError(FoxHError):
    """The Mellin strip is empty (lo >= hi)."""


class ChiNonpositiveError(FoxHError):
    """Contour evaluation requires the decay parameter chi > 0."""


class NoConvergenceError(FoxHError):
    """A quadrature or truncation target could not be met."""


class PoleOnContourError(FoxHError):
    """No contour abscissa clear of real-axis Gamma poles could be found."""


class PoleSeparationError(FoxHError):
    """The pole families of the upper and lower Gamma factors collide."""


class SpecInvalidError(FoxHError):
    """A convolution spec violates the kernel constraint block."""


class IndexRuleError(FoxHError):
    """H-construction requires at least one stretched-exponential or ratio kernel (n1>=1 or n3>=1)."""


class TooManyKernelsError(FoxHError):
    """Direct convolution quadrature is capped at three kernels."""


class PreconditionFailedError(FoxHError):
    """A rewrite precondition (inequality gate) does not hold."""


class OmegaOutOfRangeError(FoxHError):
    """The product-Mellin exponent lies outside its admissible open interval."""


class NonpositiveOmegaError(FoxHError):
    """The argument-power rewrite requires omega > 0."""


class NotMeijerPatternError(FoxHError):
    """The parameter set does not have a common slope lambda."""


class EpFailedError(FoxHError):
    """Existence-and-positivity certification failed."""


class SchemaError(FoxHError):
    """A JSON document does not match its declared schema."""
