"""Shared error machinery: diagnostics for validation, coded exceptions for operations."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Diagnostic:
    """A non-fatal finding from a validator or parser.

    `code` is a stable machine-readable identifier; `message` is for humans.
    `node_id` is set when the finding is attributable to a pipeline node,
    `line`/`column` when it maps to a position in a source document.
    """

    code: str
    message: str
    node_id: str | None = None
    line: int | None = None
    column: int | None = None

    def to_obj(self) -> dict:
        obj: dict = {"code": self.code, "message": self.message}
        if self.node_id is not None:
            obj["node_id"] = self.node_id
        if self.line is not None:
            obj["line"] = self.line
        if self.column is not None:
            obj["column"] = self.column
        return obj


class StreamSenseError(Exception):
    """Base class for coded operational failures."""

    code = "ERROR"

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message


class EmptyBufferError(StreamSenseError):
    code = "EMPTY_BUFFER"


class BufferIndexError(StreamSenseError):
    code = "INDEX_OUT_OF_RANGE"


class EvalError(StreamSenseError):
    """Typed expression-evaluation failure; carries the offending sub-expression."""

    def __init__(self, code: str, message: str, subexpr: str = ""):
        super().__init__(message if not subexpr else f"{message} (in `{subexpr}`)")
        self.code = code
        self.subexpr = subexpr


class ExprSyntaxError(StreamSenseError):
    code = "PARSE_ERROR"

    def __init__(self, message: str, position: int | None = None):
        super().__init__(message)
        self.position = position


class UnsupportedSignatureError(StreamSenseError):
    code = "UNSUPPORTED_SIGNATURE"


class SignatureMismatchError(StreamSenseError):
    code = "SIGNATURE_MISMATCH"


class AllBackendsFailedError(StreamSenseError):
    code = "ALL_BACKENDS_FAILED"


class TransportError(StreamSenseError):
    """Transient backend failure (network error or 5xx); eligible for retry."""

    code = "TRANSPORT_ERROR"


class GraphBuildError(StreamSenseError):
    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code


class UnknownStreamError(StreamSenseError):
    code = "UNKNOWN_STREAM"


class QueueFullError(StreamSenseError):
    code = "QUEUE_FULL"


class AlreadyRunningError(StreamSenseError):
    code = "ALREADY_RUNNING"


class NotRunningError(StreamSenseError):
    code = "NOT_RUNNING"


class OracleFailedError(StreamSenseError):
    code = "ORACLE_FAILED"

    def __init__(self, message: str, task_ids: list[str] | None = None):
        super().__init__(message)
        self.task_ids = task_ids or []


class EmptyResultsError(StreamSenseError):
    code = "EMPTY_RESULTS"


class GenerationBackendError(StreamSenseError):
    code = "GENERATION_BACKEND_ERROR"


class NoValidProgramError(StreamSenseError):
    code = "NO_VALID_PROGRAM"
