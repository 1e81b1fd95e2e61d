"""Exception types shared across the package."""


class TomographyError(Exception):
    """Base class for every error raised by this package."""


class NotSorted(TomographyError):
    """A sequence that must be non-increasing is not."""


class InconsistentSums(TomographyError):
    """Line sums with a parity mismatch; no pair of images can produce them."""


class Infeasible(TomographyError):
    """No binary image realizes the given line sums."""


class NotUnique(TomographyError):
    """An operation requires line sums with exactly one realization."""


class BadPermutation(TomographyError):
    """A column order is not a bijection on 1..n."""


class CapExceeded(TomographyError):
    """An enumeration produced more results than its configured cap."""


class RowExceedsWidth(TomographyError):
    """A row sum is larger than the number of available columns."""
