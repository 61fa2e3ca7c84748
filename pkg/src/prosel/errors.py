"""Exception hierarchy shared across the package.

Everything raised on bad user input derives from ProselError so the CLI
and the HTTP service can map it to a data-error exit code / 400 response
in one place.
"""


class ProselError(Exception):
    """Base class for all errors raised on invalid input or data."""


class TreeParseError(ProselError):
    """Malformed bracketed-tree text. Carries the character offset."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class CorpusError(ProselError):
    """Corpus file failed validation (schema, dimensions, duplicate ids)."""


class IndexFormatError(ProselError):
    """Binary index is unreadable: bad magic, version, or checksum."""


class ProjectionError(ProselError):
    """Projection could not be fitted or applied."""


class SelectionError(ProselError):
    """Selection request cannot be served (empty corpus, missing repr)."""
