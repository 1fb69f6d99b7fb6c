"""Triangle files (JSON / CSV) and centred text rendering."""
from __future__ import annotations

import csv
import io
import json
from pathlib import Path

from .errors import ParseError, PositionError
from .triangle import Triangle


def to_document(t: Triangle) -> dict:
    # decimal strings so values survive consumers limited to 64-bit or doubles
    return {"name": t.name, "rows": [[str(v) for v in r] for r in t.rows]}


def dumps_json(t: Triangle) -> str:
    return json.dumps(to_document(t), indent=None, separators=(",", ":")) + "\n"


def dumps_csv(t: Triangle) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    for r in t.rows:
        w.writerow(r)
    return buf.getvalue()


def _parse_int(text, where: str) -> int:
    if isinstance(text, bool) or not isinstance(text, (str, int)):
        raise ParseError(f"{where}: expected a decimal integer, got {text!r}")
    try:
        return int(str(text).strip())
    except ValueError:
        raise ParseError(f"{where}: {text!r} is not a decimal integer") from None


def _build(name: str, rows) -> Triangle:
    if not rows:
        raise ParseError("triangle has no rows")
    parsed = [[_parse_int(v, f"row {n}") for v in r] for n, r in enumerate(rows)]
    try:
        return Triangle(name, parsed)
    except PositionError as exc:
        raise ParseError(str(exc)) from exc


def loads_json(text: str) -> Triangle:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict) or "rows" not in doc:
        raise ParseError("expected an object with 'name' and 'rows'")
    rows = doc["rows"]
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise ParseError("'rows' must be a list of lists")
    return _build(str(doc.get("name", "unnamed")), rows)


def loads_csv(text: str, name: str = "unnamed") -> Triangle:
    rows = [r for r in csv.reader(io.StringIO(text)) if r]
    return _build(name, rows)


def loads(text: str, name: str = "unnamed") -> Triangle:
    """Parse either format; JSON is recognised by its leading brace."""
    stripped = text.lstrip()
    if not stripped:
        raise ParseError("empty triangle file")
    if stripped.startswith("{"):
        return loads_json(stripped)
    return loads_csv(stripped, name)


def load(path: str | Path) -> Triangle:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    return loads(text, name=path.stem)


def dumps(t: Triangle, fmt: str = "json") -> str:
    if fmt == "json":
        return dumps_json(t)
    if fmt == "csv":
        return dumps_csv(t)
    raise ValueError(f"unknown format {fmt!r}")


def render(t: Triangle) -> str:
    """Centred fixed-width layout, entries left-aligned in cells as wide as
    the widest entry, one row per line."""
    width = max(len(str(v)) for r in t.rows for v in r)
    last = len(t) - 1
    lines = []
    for n, r in enumerate(t.rows):
        body = " ".join(str(v).ljust(width) for v in r)
        indent = (last - n) * (width + 1) // 2
        lines.append((" " * indent + body).rstrip())
    return "\n".join(lines) + "\n"
