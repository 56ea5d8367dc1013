class PathSetError(Exception):
    """Base class for all user-facing errors raised by pathsets."""


class UnknownVertex(PathSetError):
    pass


class UnknownLabel(PathSetError):
    pass


class DuplicateEdge(PathSetError):
    pass


class DuplicateName(PathSetError):
    pass


class EmptyPathSet(PathSetError):
    pass


class EmptyGraph(PathSetError):
    pass


class AlphabetMismatch(PathSetError):
    pass


class SymbolCollision(PathSetError):
    pass


class NonSquare(PathSetError):
    pass


class DepthTooLarge(PathSetError):
    pass


class IndexOutOfRange(PathSetError):
    pass


class ParseError(PathSetError):
    def __init__(self, message, lineno=None):
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
        self.lineno = lineno
