"""Exception types shared across the package."""


class SegdecError(Exception):
    """Base class for all package errors."""


class DomainError(SegdecError, ValueError):
    """An argument lies outside the domain an operation is defined on."""


class ParseError(SegdecError, ValueError):
    """Malformed sum-of-products text."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class CompileError(SegdecError, ValueError):
    """An expression has no realization in the supported gate inventory."""


class FormatError(SegdecError, ValueError):
    """Malformed netlist text."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line
