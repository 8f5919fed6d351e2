"""Built-in knot records and the JSON document format for monodromy data.

A document looks like::

    {
      "name": "trefoil",
      "genus": 1,
      "handles": 0,
      "surface": "punctured",
      "matrix": [[0, 1], [-1, 1]],
      "alexander": [1, -1, 1]
    }

``matrix`` row i is the image of the i-th basis class in the order
(c_1..c_m, d_1..d_m); ``alexander`` is optional and lists coefficients in
ascending powers of t.
"""

from __future__ import annotations

import enum
import json
import os
from dataclasses import dataclass, field
from typing import IO, Union

from .monodromy import MonodromyMatrix, SurfaceKind, require_valid
from .polyalg import IntPolynomial

__all__ = [
    "Source",
    "KnotRecord",
    "DocumentError",
    "trefoil",
    "twist_knot",
    "pretzel_555",
    "builtins",
    "to_document",
    "from_document",
    "parse_document",
    "parse_json",
    "dumps",
    "loads",
    "load",
    "save",
    "resolve",
]

REQUIRED_KEYS = ("name", "genus", "handles", "surface", "matrix")


class Source(enum.Enum):
    BUILTIN = "builtin"
    FILE = "file"


@dataclass(frozen=True)
class KnotRecord:
    """A named, validated monodromy matrix with an optional known Alexander polynomial.

    ``source`` is bookkeeping and does not take part in equality.
    """

    name: str
    monodromy: MonodromyMatrix
    alexander: IntPolynomial | None = None
    source: Source = field(default=Source.BUILTIN, compare=False)

    def __post_init__(self):
        require_valid(self.monodromy)


class DocumentError(ValueError):
    """Malformed monodromy document; ``line``/``column`` are set for syntax errors."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(message + where)


# ------------------------------------------------------------------ builtins


def trefoil() -> KnotRecord:
    G = MonodromyMatrix(1, 0, SurfaceKind.ONCE_PUNCTURED, [[0, 1], [-1, 1]])
    return KnotRecord("trefoil", G, IntPolynomial([1, -1, 1]))


def twist_knot(n: int) -> KnotRecord:
    """Twist knot K_{2n-1} with its genus-2, one-handle monodromy.

    n = 1 is the fibred trefoil and is served by :func:`trefoil` instead.
    """
    if isinstance(n, bool) or not isinstance(n, int):
        raise TypeError("twist parameter must be an integer")
    if n < 2:
        raise ValueError(f"twist_knot needs n >= 2 (n = 1 is the trefoil), got {n}")
    rows = [
        [1, 1, -n, -1],
        [0, 1, -1, 0],
        [0, 0, 1, 0],
        [0, -1, 0, 1],
    ]
    G = MonodromyMatrix(2, 1, SurfaceKind.ONCE_PUNCTURED, rows)
    return KnotRecord(f"twist:{n}", G, IntPolynomial([-n, 2 * n - 1, -n]))


def pretzel_555() -> KnotRecord:
    rows = [
        [1, 0, 1, -5, -2, 0],
        [0, 1, 0, -3, -5, 1],
        [0, 0, 1, 0, 1, 0],
        [0, 0, 0, 1, 0, 0],
        [0, 0, 0, 0, 1, 0],
        [0, 0, 0, -1, 0, 1],
    ]
    G = MonodromyMatrix(3, 2, SurfaceKind.ONCE_PUNCTURED, rows)
    return KnotRecord("pretzel555", G, IntPolynomial([19, -37, 19]))


def builtins(max_twist: int = 10) -> list[KnotRecord]:
    """Every worked example: trefoil, twist knots n = 2..max_twist, pretzel (5,5,5)."""
    return [trefoil(), *(twist_knot(n) for n in range(2, max_twist + 1)), pretzel_555()]


# ------------------------------------------------------------------ documents


def to_document(record: KnotRecord) -> dict:
    G = record.monodromy
    doc = {
        "name": record.name,
        "genus": G.genus,
        "handles": G.handles,
        "surface": G.kind.value,
        "matrix": [list(r) for r in G.entries],
    }
    if record.alexander is not None:
        doc["alexander"] = list(record.alexander.coeffs)
    return doc


def _int(value, key: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise DocumentError(f"field {key!r} must be an integer, got {value!r}")
    return value


def from_document(doc: dict, source: Source = Source.FILE) -> KnotRecord:
    name, G, alexander = parse_document(doc)
    # KnotRecord validates; the itemized report travels on the exception
    return KnotRecord(name, G, alexander, source)


def parse_document(doc: dict) -> tuple[str, MonodromyMatrix, IntPolynomial | None]:
    """Structural parse of a document without the symplectic validation."""
    if not isinstance(doc, dict):
        raise DocumentError("document must be a mapping of keys to values")
    missing = [k for k in REQUIRED_KEYS if k not in doc]
    if missing:
        raise DocumentError(f"missing required field(s): {', '.join(missing)}")
    unknown = sorted(set(doc) - set(REQUIRED_KEYS) - {"alexander"})
    if unknown:
        raise DocumentError(f"unknown field(s): {', '.join(unknown)}")

    name = doc["name"]
    if not isinstance(name, str):
        raise DocumentError("field 'name' must be a string")
    genus = _int(doc["genus"], "genus")
    handles = _int(doc["handles"], "handles")
    try:
        kind = SurfaceKind(doc["surface"])
    except ValueError:
        raise DocumentError(
            f"field 'surface' must be 'punctured' or 'closed', got {doc['surface']!r}"
        ) from None

    matrix = doc["matrix"]
    if not isinstance(matrix, list) or not all(isinstance(r, list) for r in matrix):
        raise DocumentError("field 'matrix' must be a list of rows")
    for r, row in enumerate(matrix, start=1):
        for c, x in enumerate(row, start=1):
            _int(x, f"matrix[{r}][{c}]")
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise DocumentError("matrix must be square")
    if n % 2:
        raise DocumentError(f"matrix size must be even, got {n}x{n}")
    if genus != n // 2:
        raise DocumentError(f"genus {genus} is inconsistent with a {n}x{n} matrix")
    if not 0 <= handles <= genus:
        raise DocumentError(f"handles {handles} must lie in 0..{genus}")

    alexander = None
    if doc.get("alexander") is not None:
        coeffs = doc["alexander"]
        if not isinstance(coeffs, list):
            raise DocumentError("field 'alexander' must be a list of integers")
        alexander = IntPolynomial(_int(x, "alexander") for x in coeffs)

    return name, MonodromyMatrix(genus, handles, kind, matrix), alexander


def dumps(record: KnotRecord) -> str:
    """Serialize with one matrix row per line."""
    doc = to_document(record)
    lines = []
    for key, value in doc.items():
        if key == "matrix":
            rows = ",\n".join("    " + json.dumps(r) for r in value)
            lines.append(f'  "matrix": [\n{rows}\n  ]')
        else:
            lines.append(f"  {json.dumps(key)}: {json.dumps(value)}")
    return "{\n" + ",\n".join(lines) + "\n}\n"


def parse_json(text: str) -> dict:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"parse error: {exc.msg}", exc.lineno, exc.colno) from None


def loads(text: str, source: Source = Source.FILE) -> KnotRecord:
    return from_document(parse_json(text), source)


PathOrStream = Union[str, "os.PathLike[str]", IO[str]]


def load(src: PathOrStream) -> KnotRecord:
    """Read a record from a path or an open text stream."""
    if isinstance(src, (str, os.PathLike)):
        with open(src, encoding="utf-8") as fh:
            return loads(fh.read())
    return loads(src.read())


def save(record: KnotRecord, dst: PathOrStream) -> None:
    text = dumps(record)
    if isinstance(dst, (str, os.PathLike)):
        with open(dst, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        dst.write(text)


def resolve(spec: str) -> KnotRecord:
    """Look up ``builtin:trefoil``, ``builtin:twist:<n>``, ``builtin:pretzel555`` or a file."""
    if spec.startswith("builtin:"):
        key = spec[len("builtin:"):]
        if key == "trefoil":
            return trefoil()
        if key == "pretzel555":
            return pretzel_555()
        if key.startswith("twist:"):
            arg = key[len("twist:"):]
            try:
                n = int(arg)
            except ValueError:
                raise ValueError(f"bad twist parameter {arg!r}") from None
            return twist_knot(n)
        raise ValueError(f"unknown builtin {key!r}")
    return load(spec)

