"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument or edge lies outside the structure it is used with."""


class ApxFormatError(ValueError):
    """A framework file could not be parsed."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class BasisFormatError(ValueError):
    """A basis file could not be parsed."""


class FormulaSyntaxError(ValueError):
    """A formula string could not be parsed."""

    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"at position {position}: {message}")


class LayerError(FormulaSyntaxError):
    """A connective of one formula layer was used inside the other."""


class FreshPoolError(ValueError):
    """The configured fresh-symbol pool cannot cover the formula's modal depth."""
