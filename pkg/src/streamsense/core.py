"""Core domain types: field values, stream items, stream descriptions, buffers.

Field values are plain Python values (str, float, bool, MediaRef, list);
every value admitted into a StreamItem is checked at construction. The
serialized wire form tags each value with one of the six schema types:
text, number, boolean, image, audio, list.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass, field

from .errors import BufferIndexError, Diagnostic, EmptyBufferError

IDENT_RE = re.compile(r"^[a-z][a-z0-9_]*$")

SCHEMA_TYPES = ("text", "number", "boolean", "image", "audio", "list")


@dataclass(frozen=True)
class MediaRef:
    """Opaque reference to a media payload; resolved only by model backends."""

    kind: str  # "image" or "audio"
    locator: str

    def __post_init__(self):
        if self.kind not in ("image", "audio"):
            raise ValueError(f"media kind must be image or audio, got {self.kind!r}")
        if not self.locator:
            raise ValueError("media locator must be non-empty")


FieldValue = str | float | bool | MediaRef | list


def check_field_value(value) -> None:
    """Raise ValueError unless `value` is an admissible field value.

    Numbers must be finite; lists must be homogeneous in schema type.
    """
    if isinstance(value, bool) or isinstance(value, str) or isinstance(value, MediaRef):
        return
    if isinstance(value, (int, float)):
        if not math.isfinite(value):
            raise ValueError(f"number field values must be finite, got {value!r}")
        return
    if isinstance(value, (list, tuple)):
        types = set()
        for element in value:
            check_field_value(element)
            types.add(value_type(element))
        if len(types) > 1:
            raise ValueError(f"list field values must be homogeneous, got types {sorted(types)}")
        return
    raise ValueError(f"unsupported field value type: {type(value).__name__}")


def value_type(value) -> str:
    """Return the schema type name for a field value."""
    if isinstance(value, bool):
        return "boolean"
    if isinstance(value, str):
        return "text"
    if isinstance(value, (int, float)):
        return "number"
    if isinstance(value, MediaRef):
        return value.kind
    if isinstance(value, (list, tuple)):
        return "list"
    raise ValueError(f"unsupported field value type: {type(value).__name__}")


def canonical_string(value) -> str:
    """Deterministic text form of a field value.

    Numbers render as the shortest decimal that round-trips, with integral
    floats collapsed to their integer form (2.0 -> "2"). Booleans render as
    "true"/"false", media refs as their locator, lists joined by ", ".
    """
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, str):
        return value
    if isinstance(value, (int, float)):
        number = float(value)
        if number.is_integer():
            return str(int(number))
        return repr(number)
    if isinstance(value, MediaRef):
        return value.locator
    if isinstance(value, (list, tuple)):
        return ", ".join(canonical_string(element) for element in value)
    raise ValueError(f"unsupported field value type: {type(value).__name__}")


def _coerce(value):
    # ints arrive from JSON and user code; the number domain is 64-bit float
    if isinstance(value, bool):
        return value
    if isinstance(value, int):
        return float(value)
    if isinstance(value, tuple):
        return [_coerce(element) for element in value]
    if isinstance(value, list):
        return [_coerce(element) for element in value]
    return value


@dataclass(frozen=True)
class StreamItem:
    """One timestamped record: an ordered map of field name -> value.

    `tick` is the logical timestamp assigned at injection.
    """

    fields: dict
    tick: int = 0

    def __post_init__(self):
        if not isinstance(self.tick, int) or isinstance(self.tick, bool) or self.tick < 0:
            raise ValueError(f"tick must be a non-negative integer, got {self.tick!r}")
        coerced = {}
        for name, value in self.fields.items():
            if not IDENT_RE.match(name or ""):
                raise ValueError(f"bad field name {name!r}")
            value = _coerce(value)
            check_field_value(value)
            coerced[name] = value
        object.__setattr__(self, "fields", coerced)

    def to_obj(self) -> dict:
        return {
            "tick": self.tick,
            "fields": {name: tag_value(value) for name, value in self.fields.items()},
        }

    @classmethod
    def from_obj(cls, obj: dict) -> "StreamItem":
        return cls(
            fields={name: untag_value(tagged) for name, tagged in obj["fields"].items()},
            tick=obj.get("tick", 0),
        )

    def to_line(self) -> str:
        return json.dumps(self.to_obj(), ensure_ascii=False)

    @classmethod
    def from_line(cls, line: str) -> "StreamItem":
        return cls.from_obj(json.loads(line))


def tag_value(value) -> dict:
    """Serialize a field value to its tagged wire form {"type": t, "value": v}."""
    kind = value_type(value)
    if kind in ("image", "audio"):
        return {"type": kind, "value": value.locator}
    if kind == "list":
        return {"type": "list", "value": [tag_value(element) for element in value]}
    if kind == "number":
        return {"type": "number", "value": float(value)}
    return {"type": kind, "value": value}


def untag_value(tagged: dict):
    kind = tagged["type"]
    raw = tagged["value"]
    if kind == "text":
        return raw
    if kind == "number":
        return float(raw)
    if kind == "boolean":
        return bool(raw)
    if kind in ("image", "audio"):
        return MediaRef(kind, raw)
    if kind == "list":
        return [untag_value(element) for element in raw]
    raise ValueError(f"unknown value type tag {kind!r}")


@dataclass(frozen=True)
class BatchedItem:
    """A closed group of items plus the tick window that produced it."""

    items: tuple
    window: tuple
    fields: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "items", tuple(self.items))
        object.__setattr__(self, "window", (int(self.window[0]), int(self.window[1])))
        if not self.items:
            raise ValueError("a batch must contain at least one item")
        start, end = self.window
        previous = None
        for item in self.items:
            if previous is not None and item.tick < previous:
                raise ValueError("batch item ticks must be non-decreasing")
            if not (start <= item.tick <= end):
                raise ValueError(f"item tick {item.tick} outside window [{start}, {end}]")
            previous = item.tick

    @property
    def tick(self) -> int:
        return self.items[-1].tick


@dataclass(frozen=True)
class FieldSpec:
    type: str
    meaning: str = ""


@dataclass(frozen=True)
class StreamDescription:
    """The three-part schema contract for a stream: id, prose, field schema."""

    stream_id: str
    description: str
    fields_schema: dict  # name -> FieldSpec

    def to_obj(self) -> dict:
        return {
            "stream_id": self.stream_id,
            "description": self.description,
            "fields_schema": {
                name: {"type": spec.type, "meaning": spec.meaning}
                for name, spec in self.fields_schema.items()
            },
        }

    @classmethod
    def from_obj(cls, obj: dict) -> "StreamDescription":
        return cls(
            stream_id=obj["stream_id"],
            description=obj["description"],
            fields_schema={
                name: FieldSpec(type=spec["type"], meaning=spec.get("meaning", ""))
                for name, spec in obj["fields_schema"].items()
            },
        )


def validate_description(desc: StreamDescription) -> list:
    """Check a StreamDescription's invariants; returns diagnostics, never raises."""
    diagnostics = []
    if not IDENT_RE.match(desc.stream_id or ""):
        diagnostics.append(
            Diagnostic("BAD_ID", f"stream_id {desc.stream_id!r} must match [a-z][a-z0-9_]*")
        )
    if not desc.fields_schema:
        diagnostics.append(Diagnostic("EMPTY_SCHEMA", "fields_schema must declare at least one field"))
    for name, spec in desc.fields_schema.items():
        if not IDENT_RE.match(name or ""):
            diagnostics.append(Diagnostic("BAD_FIELD_NAME", f"field name {name!r} must match [a-z][a-z0-9_]*"))
        if spec.type not in SCHEMA_TYPES:
            diagnostics.append(
                Diagnostic("BAD_TYPE", f"field {name!r} has unknown type {spec.type!r}")
            )
    return diagnostics


class Buffer:
    """Named FIFO of stream items with optional bounded capacity.

    On overflow the oldest item is evicted; the evicted item is returned so
    the caller can log it. A Buffer is owned by one executing node at a time.
    """

    def __init__(self, name: str, capacity: int | None = None):
        if capacity is not None and capacity < 1:
            raise ValueError("buffer capacity must be positive")
        self.name = name
        self.capacity = capacity
        self._items: list = []
        self.eviction_count = 0

    def __len__(self) -> int:
        return len(self._items)

    def append(self, item) -> "StreamItem | None":
        """Append at the tail; returns the evicted head when capacity overflows."""
        self._items.append(item)
        if self.capacity is not None and len(self._items) > self.capacity:
            self.eviction_count += 1
            return self._items.pop(0)
        return None

    def pop(self):
        if not self._items:
            raise EmptyBufferError(f"pop on empty buffer {self.name!r}")
        return self._items.pop(0)

    def pop_all(self) -> list:
        items, self._items = self._items, []
        return items

    def get(self, index: int):
        if not (0 <= index < len(self._items)):
            raise BufferIndexError(
                f"index {index} out of range for buffer {self.name!r} of length {len(self._items)}"
            )
        return self._items[index]

    def get_all(self) -> list:
        return list(self._items)
