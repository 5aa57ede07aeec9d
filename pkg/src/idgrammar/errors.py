"""Exception hierarchy shared across the package."""


class IdGrammarError(Exception):
    """Base class for all errors raised by this package."""


class SplitError(IdGrammarError):
    """An identifier name could not be split into word tokens."""


class OverrideError(IdGrammarError):
    """A split-override entry is malformed or breaks the round-trip invariant."""


class UnknownTagError(IdGrammarError):
    """Tag text does not name a known part-of-speech annotation."""


class PatternParseError(IdGrammarError):
    """A grammar-pattern string contains an unknown tag token."""


class ScanError(IdGrammarError):
    """A corpus scan could not start (unreadable root, bad configuration)."""


class AdapterError(IdGrammarError):
    """The external tagger process or connection failed."""


class AdapterProtocolError(AdapterError):
    """The external tagger sent a malformed response line."""


class AlignmentError(IdGrammarError):
    """Tag count does not match token count."""


class GoldFormatError(IdGrammarError):
    """A gold-annotation file is malformed."""


class MissingToolPatternError(IdGrammarError):
    """The tool under evaluation supplied no pattern for a gold identifier."""

    def __init__(self, identifier: str):
        super().__init__(f"no tool pattern for gold identifier {identifier!r}")
        self.identifier = identifier


class EnsembleError(IdGrammarError):
    """Tagger proposals handed to the ensemble violate its preconditions."""


class ConfigError(IdGrammarError):
    """A configuration file or value is invalid."""
