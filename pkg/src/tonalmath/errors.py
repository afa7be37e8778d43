"""Exception types raised by tonalmath."""


class TonalError(ValueError):
    """Base class for all tonalmath errors."""


class InvalidAnchorError(TonalError):
    """Anchor points cannot define an exponential pitch model."""


class NoteRangeError(TonalError):
    """A note index or name falls outside the permitted range."""


class NoteParseError(TonalError):
    """A note or pitch-class string could not be parsed."""


class DomainError(TonalError):
    """An argument lies outside the domain of an operation."""


class AmbiguousPairingError(TonalError):
    """Coincidence tolerance is too wide for unambiguous zero pairing."""


class InsufficientDataError(TonalError):
    """Not enough events to compute the requested quantity."""
