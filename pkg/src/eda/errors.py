"""Exception types raised across the package."""


class EdaError(Exception):
    """Base class for all errors raised by this package."""


class MalformedLine(EdaError, ValueError):
    def __init__(self, path, lineno: int, reason: str = "unparseable record"):
        self.path = str(path)
        self.lineno = lineno
        self.reason = reason
        super().__init__(f"{self.path}:{lineno}: {reason}")


class MissingFile(EdaError, FileNotFoundError):
    pass


class DuplicateEntry(EdaError, ValueError):
    pass


class EmptySentence(EdaError, ValueError):
    pass


class EmptyCorpus(EdaError, ValueError):
    pass


class SizeTooLarge(EdaError, ValueError):
    pass


class SingleClassCorpus(EdaError, ValueError):
    pass
