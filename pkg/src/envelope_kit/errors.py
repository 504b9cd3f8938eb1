"""Exception hierarchy for the envelope toolkit."""


class EnvelopeError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInput(EnvelopeError):
    """Malformed or empty input at the API boundary."""


class SilentSignal(EnvelopeError):
    """Every sample is zero; no envelope exists."""


class NoPositivePulses(EnvelopeError):
    """The signal is everywhere <= 0; the upper frontier is undefined."""


class NoNegativePulses(EnvelopeError):
    """The signal is everywhere >= 0; the lower frontier is undefined."""


class NoNextPoint(EnvelopeError):
    """Pivoting was asked to advance past the last candidate."""


class FormatError(EnvelopeError):
    """A WAV byte stream violates the supported RIFF subset.

    The message names the offending field (e.g. "magic", "audio_format").
    """


class ParseError(EnvelopeError):
    """A CSV line failed to parse.

    Attributes
    ----------
    line : int
        1-based line number of the bad line.
    """

    def __init__(self, message, line):
        super().__init__(f"line {line}: {message}")
        self.line = line
