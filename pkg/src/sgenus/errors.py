"""Exception hierarchy shared across the package.

Everything derived from CalcError is a computation-level failure (the CLI maps
these to exit code 2); SpecFormatError marks a malformed input file (exit 1).
"""


class CalcError(Exception):
    """A computation could not be completed on the given input."""


class InfiniteQuotient(CalcError):
    """A quotient expected to have finite length does not."""


class NotCofinite(CalcError):
    """Complement enumeration in a semigroup did not terminate within bounds."""


class NotFinite(CalcError):
    """No conductor was detected while scanning a semigroup closure gap."""


class NotPrimary(CalcError):
    """The ideal fails the m-primary checks needed for length sequences."""


class NotStabilized(CalcError):
    """Too few sequence values match the fitted polynomial; raise nmax."""


class DegreeMismatch(CalcError):
    """The leading finite difference of a length sequence is not constant."""


class DegenerateColon(CalcError):
    """The colon ideal q:m contains a unit (q is the maximal ideal)."""


class NotDim2(CalcError):
    """A dimension-2 inference was requested on a report of other dimension."""


class MissingType(CalcError):
    """A verdict check needs the Cohen-Macaulay type r and none was given."""


class SpecFormatError(ValueError):
    """A job spec file failed to parse; carries a 1-based line number."""

    def __init__(self, message, line):
        super().__init__("line %d: %s" % (line, message))
        self.line = line
