"""Exception types shared across the package.

Each error carries a stable ``code`` string so the CLI can map failures
onto machine-readable envelopes without matching on messages.
"""


class PerfectSumsError(Exception):
    """Base class for every error raised by this package."""

    code = "error"


class DomainError(PerfectSumsError, ValueError):
    """An argument lies outside the mathematical domain of the operation."""

    code = "domain_error"


class RangeError(DomainError):
    """A target m falls outside the representable range [1, n]."""

    code = "m_out_of_range"


class NotMersenneError(DomainError):
    """The exponent p fails the Mersenne primality check."""

    code = "not_mersenne"


class CapabilityError(PerfectSumsError):
    """The request exceeds a configured resource ceiling."""

    code = "capability"
