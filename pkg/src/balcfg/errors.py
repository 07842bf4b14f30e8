"""Exception types shared across the package.

Errors split into two families: certificates (the input provably lacks the
property being tested, and the exception carries the witness) and usage/input
problems. The CLI maps certificates to exit code 1 and the rest to exit 2.
"""

from __future__ import annotations


class BalcfgError(Exception):
    """Base class for every error raised by this package."""


class ModeMismatch(BalcfgError):
    """Operands mix exact-rational and float arithmetic."""


class ZeroVector(BalcfgError):
    """A configuration member (or argument() input) is the zero vector."""


class DuplicateArgument(BalcfgError):
    """Two members share a polar argument, so strict ordering is impossible."""


class CertificateError(BalcfgError):
    """Base for verdict failures that carry a concrete witness."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class NotBalanced(CertificateError):
    """Some determinant multiset is not symmetric around 0."""


class NotUniform(CertificateError):
    """Some pair of members is linearly dependent."""


class OddM(BalcfgError):
    """An even-size operation was called with odd m."""


class AmbiguousPairing(CertificateError):
    """Float clustering produced an inconsistent pairing at this tolerance."""


class InconsistentConstants(CertificateError):
    """det(v_k, v_{k+1}) or det(v_k, v_{k+n}) is not constant in k."""


class RootCountMismatch(BalcfgError):
    """The filtered root set does not have exactly n elements."""


class ClosureViolation(BalcfgError):
    """The model sequence fails to close (w_n != U or u_n != V)."""


class SingularFrame(BalcfgError):
    """The would-be frame vectors are linearly dependent."""


class NotNormalized(CertificateError):
    """g . v_{n+1} does not have y = -1: non-balanced or mislabeled input."""


class NoGridMatch(CertificateError):
    """The extracted parameter t lies on no grid point: not GL2-equivalent
    to the roots of unity."""


class ResidualTooLarge(CertificateError):
    """Internal inconsistency: the canonical map does not land on the roots
    of unity within tolerance."""


class DegenerateStep(BalcfgError):
    """Reconstruction produced a zero vector."""


class BudgetExceeded(BalcfgError):
    """The requested enumeration is larger than the configured budget."""


class ConfigFileError(BalcfgError):
    """A configuration file is malformed; message carries field context."""
