"""Exception hierarchy shared across the engine."""


class EngineError(Exception):
    """Base class for every error raised by this package."""


class UniverseMismatchError(EngineError):
    """Two elements built over different generator universes were combined."""


class InhomogeneousError(EngineError):
    """A single degree was requested from an element with mixed degrees."""


class ParseError(EngineError):
    """Malformed expression text; carries the character position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class ModelError(EngineError):
    """A model violates a structural precondition (bad differential, wrong class)."""


class NotFiniteLengthError(EngineError):
    """A quotient was proven to have infinite length."""


class IndeterminateError(EngineError):
    """A probe or search budget ran out before the question was decided."""


class ContradictionError(EngineError):
    """A numerically verified theorem failed; signals an engine bug."""
