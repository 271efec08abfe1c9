"""Exception hierarchy shared by every package of the tool."""

from typing import Optional


class PedtError(ValueError):
    """Base class for all errors raised by the library."""


class StructuralError(PedtError):
    """Malformed node table: dangling references, cycles, shared children."""


class DocumentError(PedtError):
    """A tree or assignment document failed to parse or validate.

    `details` holds `location: message` strings, where location is the
    dotted path to the offending field (e.g. `nodes.3.edges.0.literal.op`).
    """

    def __init__(self, message: str, details: Optional[list[str]] = None):
        self.details = details or []
        if self.details:
            message = message + "\n" + "\n".join(f"  - {d}" for d in self.details)
        super().__init__(message)


class LiteralError(PedtError):
    """A literal does not fit its feature's domain."""


class PreconditionError(PedtError):
    """An operation was called outside its stated precondition."""

    def __init__(self, message: str, witness=None):
        self.witness = witness
        super().__init__(message)


class SchemaMismatchError(PedtError):
    """Two objects that must share a feature schema (or class set) do not."""


class UnknownClassError(PedtError):
    pass


class UnsupportedSchemaError(PedtError):
    """The operation only supports some feature kinds (e.g. boolean QM)."""


class CapExceededError(PedtError):
    """A desk-scale guardrail refused the request."""


class TermCapExceededError(CapExceededError):
    """Consensus closure grew beyond the configured term cap."""
