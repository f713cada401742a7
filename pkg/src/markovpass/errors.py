"""Exception types shared across the package."""


class MarkovpassError(Exception):
    """Base class for every error this package raises deliberately."""


class ConfigError(MarkovpassError):
    """Invalid configuration or invocation parameters."""


class CorpusError(MarkovpassError):
    """Corpus file could not be loaded: missing, undecodable, or empty."""


class CorpusTooShortError(MarkovpassError):
    """Corpus has fewer than order+1 characters."""


class ModelError(MarkovpassError):
    """Model construction or lookup failed."""


class CodecError(MarkovpassError):
    """Encoding or decoding failed."""


class UnknownTransitionError(CodecError):
    """Text contains a state-to-character step never seen in the corpus."""


class DeterministicCycleError(CodecError):
    """The walk is trapped in single-successor states and cannot consume bits."""
