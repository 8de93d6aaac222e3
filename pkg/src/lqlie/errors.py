"""Exception hierarchy.

Every precondition violation raised by the library derives from
:class:`DomainError`, which the command line front end maps to exit code 1.
"""


class DomainError(ValueError):
    """Base class for precondition violations."""


class AlphabetError(DomainError):
    """Operands live over different alphabets, or a letter is malformed."""


class TrailingB0Error(DomainError):
    """A map defined only on words not ending in b_0 received such a word."""

    def __init__(self, word, operation: str = ""):
        self.word = word
        where = f" in {operation}" if operation else ""
        super().__init__(f"word {word} ends in b0{where}; apply pi0 first")


class NotInDbiError(DomainError):
    """A B-polynomial is not a combination of D_{k,m}-words."""


class ResourceLimitError(DomainError):
    """A basis computation was requested above the configured ceilings."""


class ParseError(DomainError):
    """Malformed expression text; ``position`` is a 0-based character offset."""

    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} at position {position}")
