"""Exception types shared across the package."""


class QuditStarsError(ValueError):
    """Base class for domain errors raised by this package."""


class NotOnSphere(QuditStarsError):
    """A 3-vector deviates from the unit sphere beyond tolerance."""


class ZeroPolynomial(QuditStarsError):
    """All polynomial coefficients are zero; there is no root set."""


class DimensionMismatch(QuditStarsError):
    """Two objects that must share a dimension do not."""


class WrongDimension(QuditStarsError):
    """An operation restricted to a specific dimension got another one."""


class SingularMatrix(QuditStarsError):
    """ad - bc vanishes; the matrix does not define a Moebius map."""


class ZeroInput(QuditStarsError):
    """Both SU(2) parameters are zero."""


class NotUnitary(QuditStarsError):
    """The map is not special-unitary (or a matrix fails unitarity)."""


class UnknownGate(QuditStarsError):
    """Unrecognized standard-gate name."""


class ScriptError(QuditStarsError):
    """Base class for gate-script front-end errors, with source position.

    ``line`` and ``column`` are 1-based.
    """

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{line}:{column}: {message}")
        self.line = line
        self.column = column


class GateSyntaxError(ScriptError):
    """Malformed gate-script source."""


class ArityError(ScriptError):
    """A gate-script term has the wrong number of arguments."""


class NonUnitaryGate(QuditStarsError):
    """A compiled gate term is not special-unitary and was not allowed."""
