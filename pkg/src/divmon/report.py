"""Flat ``key = value`` report documents with ``#`` comments."""

from __future__ import annotations

from typing import Any, Iterable, Mapping


def _value(v: Any) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (list, tuple)):
        return ", ".join(_value(x) for x in v)
    return str(v).replace("\n", " ")


def render_document(items: Mapping[str, Any] | Iterable[tuple[str, Any]], comment: str | None = None) -> str:
    pairs = items.items() if isinstance(items, Mapping) else items
    lines = [f"# {comment}"] if comment else []
    for key, value in pairs:
        if not key or any(c.isspace() or c in "=#" for c in key):
            raise ValueError(f"invalid report key {key!r}")
        lines.append(f"{key} = {_value(value)}")
    return "\n".join(lines) + "\n"


def parse_document(text: str) -> dict[str, str]:
    out = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        key, eq, value = stripped.partition("=")
        if not eq:
            raise ValueError(f"line {lineno}: expected 'key = value'")
        out[key.strip()] = value.strip()
    return out
