"""Shared exception base for the package.

Every computation error raised by the library derives from
:class:`PointboundError` and carries the name of the module that raised it,
so the CLI can print a one-line diagnostic naming the offending subsystem.
"""


class PointboundError(Exception):
    """Base class for all computation errors raised by pointbound."""

    module = "pointbound"

    def diagnostic(self) -> str:
        return f"{self.module}: {self}"
