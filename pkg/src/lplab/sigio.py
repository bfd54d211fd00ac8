"""File formats: CSV signals, JSON synthesis specs, key-value experiment
configs.

Signal CSV is one finite decimal per line with an optional single "value"
header; blank lines are ignored and anything else is a parse error naming the
line. Parse failures raise SignalParseError so the CLI exits with the data
error code.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .core import Signal
from .errors import SignalParseError


def parse_signal_csv(text: str, source: str = "<string>") -> Signal:
    """Parse the one-column signal format, reporting bad lines by number."""
    values = []
    header_allowed = True
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if header_allowed and line.lower() == "value":
            header_allowed = False
            continue
        header_allowed = False
        try:
            value = float(line)
        except ValueError:
            raise SignalParseError(
                f"{source}: line {lineno}: not a number: {line!r}"
            ) from None
        if not np.isfinite(value):
            raise SignalParseError(f"{source}: line {lineno}: non-finite value {line!r}")
        values.append(value)
    if not values:
        raise SignalParseError(f"{source}: no samples found")
    return Signal(np.array(values))


def read_signal_csv(path: str | Path) -> Signal:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise SignalParseError(f"cannot read {path}: {exc.strerror}") from exc
    return parse_signal_csv(text, source=str(path))


def format_signal_csv(signal: Signal) -> str:
    """One shortest-round-trip decimal per line."""
    return "".join(f"{repr(float(v))}\n" for v in signal.samples)


def write_signal_csv(signal: Signal, path: str | Path) -> None:
    Path(path).write_text(format_signal_csv(signal))


def load_json_spec(path: str | Path) -> dict:
    """Read a JSON object, turning parse failures into line-numbered errors."""
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise SignalParseError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SignalParseError(f"{path}: line {exc.lineno}: {exc.msg}") from exc
    if not isinstance(doc, dict):
        raise SignalParseError(f"{path}: expected a JSON object at the top level")
    return doc


def parse_kv_config(text: str, source: str = "<string>") -> dict[str, str]:
    """Parse `key = value` lines; '#' starts a comment, blanks are skipped."""
    out: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise SignalParseError(f"{source}: line {lineno}: expected `key = value`")
        key, value = line.split("=", 1)
        key = key.strip()
        value = value.strip()
        if not key or not value:
            raise SignalParseError(f"{source}: line {lineno}: empty key or value")
        if key in out:
            raise SignalParseError(f"{source}: line {lineno}: duplicate key {key!r}")
        out[key] = value
    return out


def read_kv_config(path: str | Path) -> dict[str, str]:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise SignalParseError(f"cannot read {path}: {exc.strerror}") from exc
    return parse_kv_config(text, source=str(path))
