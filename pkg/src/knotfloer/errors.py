class InvalidComplexError(ValueError):
    """Malformed input, or a complex that fails a structural check."""


class NotKnotLikeError(InvalidComplexError):
    pass


class ComputationError(RuntimeError):
    pass


class ComputationCapError(ComputationError):
    """A configured enumeration limit would be exceeded."""
