"""
Exception hierarchy for the VRPSTW solver suite.

Every error raised on purpose by this package derives from VrpstwError so
that the CLI can map failures to exit codes without catching bare
exceptions.
"""


class VrpstwError(Exception):
    """Root of all package errors."""


class InputError(VrpstwError, ValueError):
    """A precondition on an argument was violated."""


class ParseError(InputError):
    """
    A text artefact (spec string, instance file, record) could not be parsed.

    Either `line` (1-based, for files) or `field` (0-based, for
    semicolon-separated specs) locates the problem.
    """

    def __init__(
        self, message: str, *, line: int | None = None, field: int | None = None
    ) -> None:
        self.line = line
        self.field = field
        if line is not None:
            message = f"line {line}: {message}"
        elif field is not None:
            message = f"field {field}: {message}"
        super().__init__(message)


class GenerationError(VrpstwError):
    """An instance cannot be generated from the requested parameters."""


class ConfigError(VrpstwError, ValueError):
    """A solver or campaign configuration is invalid."""


class RunError(VrpstwError):
    """A solver run could not proceed."""
