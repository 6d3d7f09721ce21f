"""Exception hierarchy for the matrix-product code workbench.

Every error carries a stable snake_case ``code`` which the CLI prints as
``error=<code>``.
"""

from typing import Optional


class MPCodesError(Exception):
    """Base class for all domain errors."""

    code = "domain_error"


class InvalidFieldError(MPCodesError):
    """Field parameters do not describe a supported GF(p^m)."""

    code = "invalid_field"


class SpecMismatchError(MPCodesError):
    """Operands live over different fields."""

    code = "spec_mismatch"


class FieldZeroDivisionError(MPCodesError, ZeroDivisionError):
    """Inverse of zero requested."""

    code = "division_by_zero"


class NotHermitianCapableError(MPCodesError):
    """Hermitian structure needs an even extension degree."""

    code = "not_hermitian_capable"


class DimensionMismatchError(MPCodesError):
    """Shapes or lengths are incompatible."""

    code = "dimension_mismatch"


class NotMonomialError(MPCodesError):
    """Matrix is not of the form D·P_tau (formula not applicable)."""

    code = "not_monomial"


class NotInvolutionError(MPCodesError):
    """Permutation does not square to the identity."""

    code = "not_involution"


class EnumerationCapError(MPCodesError):
    """A brute-force scan would exceed the configured cap."""

    code = "cap_exceeded"

    def __init__(self, required: int, cap: int, what: str = "vectors"):
        self.required = required
        self.cap = cap
        super().__init__(f"scan needs {required} {what}, cap is {cap}")


class OutOfRangeError(MPCodesError):
    """Argument outside the supported range."""

    code = "out_of_range"


class InapplicableError(MPCodesError):
    """Operation does not apply to this input."""

    code = "inapplicable"


class InternalInconsistencyError(MPCodesError):
    """Two computations that must agree did not. Always a bug."""

    code = "internal_inconsistency"


class FormatParseError(MPCodesError):
    """Input text does not follow the file format."""

    code = "parse_error"

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
