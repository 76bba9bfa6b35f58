"""Exception types shared across the package."""


class LyndonKitError(Exception):
    """Base class for every error raised by lyndonkit."""


class UnknownSymbol(LyndonKitError):
    """A character of the input text is not in the alphabet."""

    def __init__(self, position: int, character: str):
        super().__init__(
            f"symbol {character!r} at position {position} is not in the alphabet"
        )
        self.position = position
        self.character = character


class AlphabetMismatch(LyndonKitError):
    """Operands belong to different alphabets."""


class EmptyWord(LyndonKitError):
    """The operation needs a nonempty word."""


class EmptyBase(LyndonKitError):
    """Fractional powers need a nonempty base word."""


class OmegaEqual(LyndonKitError):
    """The periodic extensions coincide, so no comparison position exists."""


class PreconditionFailed(LyndonKitError):
    pass


class NotLyndon(LyndonKitError):
    """The operation is defined for Lyndon words only."""


class TooShort(LyndonKitError):
    """Standard factorizations need at least two letters."""


class BadAddress(LyndonKitError):
    """A node address does not resolve to an internal node."""


class DuplicateEntry(LyndonKitError):
    """Decreasing trees are defined for injective sequences only."""


class EmptySequence(LyndonKitError):
    pass


class SizeMismatch(LyndonKitError):
    """Completion needs exactly one more leaf than internal nodes."""


class InternalError(LyndonKitError):
    """A supposedly unbreakable invariant broke; this is a bug, not bad input."""


class UniquenessViolation(LyndonKitError):
    """The number of nonincreasing factorizations found was not exactly one."""
