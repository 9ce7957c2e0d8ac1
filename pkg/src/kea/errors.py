class KeaError(Exception):
    pass


class FormatError(KeaError, ValueError):
    """A model or statistics file could not be parsed."""

    def __init__(self, message: str, path=None, line: int | None = None):
        where = ""
        if path is not None:
            where += f"{path}"
        if line is not None:
            where += f":{line}" if where else f"line {line}"
        super().__init__(f"{where}: {message}" if where else message)
        self.path = path
        self.line = line


class VersionError(FormatError):
    pass


class ConsistencyError(KeaError, ValueError):
    pass


class TrainingError(KeaError, ValueError):
    pass
