"""Error types shared across the package."""


class DomainError(ValueError):
    """A value outside an operation's mathematical domain."""


class ParseError(ValueError):
    """Input text that does not match the expected grammar."""
