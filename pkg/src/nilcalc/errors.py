"""Exception hierarchy shared by all nilcalc modules.

Every domain error carries a short machine-readable ``code``; the CLI prints
``<code>: <message>`` on stderr and exits 1, so codes are part of the
scripting interface and must stay stable.
"""


class CalcError(Exception):
    """Base class for all domain errors raised by this package."""

    code = "error"


class InvalidPartError(CalcError):
    """A partition part is zero, negative, or not an integer."""

    code = "invalid-part"


class SizeMismatchError(CalcError):
    """Operands have incompatible sizes (partition n, matrix dimensions)."""

    code = "size-mismatch"


class DomainMismatchError(CalcError):
    """Mixed scalar domains (rational vs prime field, or different moduli)."""

    code = "domain-mismatch"


class UnsupportedDomainError(CalcError):
    """Operation not defined over the matrix's scalar domain."""

    code = "unsupported-domain"


class NotNilpotentError(CalcError):
    code = "not-nilpotent"


class NotUnipotentError(CalcError):
    code = "not-unipotent"


class SingularMatrixError(CalcError):
    code = "singular"


class EmptyInputError(CalcError):
    code = "empty-input"


class InvalidSpecError(CalcError):
    """A tame block specification has inconsistent or nonpositive fields."""

    code = "invalid-spec"


class UnknownIdError(CalcError):
    """A component or point id does not exist in the complex."""

    code = "unknown-id"


class ModelViolationError(CalcError):
    """A point's incident labels do not attain their meet (invalid complex)."""

    code = "model-violation"


class ResourceLimitError(CalcError):
    """An enumeration would exceed its configured cap."""

    code = "resource-limit"


class ParseError(CalcError):
    """Malformed JSON or a JSON document of the wrong shape."""

    code = "parse"
