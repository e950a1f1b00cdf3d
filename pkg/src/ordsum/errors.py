class OrdsumError(Exception):
    pass


class CapacityError(OrdsumError):
    """Input exceeds the configured enumeration or search bounds."""


class ParseError(OrdsumError):
    def __init__(self, message, text="", pos=0):
        self.text = text
        self.pos = pos
        line = text.count("\n", 0, pos) + 1
        col = pos - (text.rfind("\n", 0, pos) + 1) + 1
        self.line, self.col = line, col
        super().__init__(f"{message} at line {line}, column {col}")


class ShapeError(OrdsumError, ValueError):
    """A term lies outside the shape an operation accepts."""
