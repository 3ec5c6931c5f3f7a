"""Text serialisation of walks and exact parsing of rational parameters.

A walk file is a header ``gw <d> <n>`` followed by ``n`` lines of ``d``
space-separated decimal integers (UTF-8, LF line endings).
"""

from __future__ import annotations

import re
from fractions import Fraction
from pathlib import Path
from typing import Union

import numpy as np

from .core import COORD_LIMIT, GridWalk

_RATIONAL = re.compile(r"^\s*(\d+)\s*/\s*(\d+)\s*$")
_DECIMAL = re.compile(r"^\s*(\d+)(?:\.(\d{1,9}))?\s*$")


class WalkFileError(ValueError):
    pass


def parse_rational(text: str) -> Fraction:
    """Parse ``p/q`` or a decimal with at most nine fractional digits, exactly."""
    m = _RATIONAL.match(text)
    if m:
        if int(m.group(2)) == 0:
            raise ValueError(f"zero denominator in {text!r}")
        return Fraction(int(m.group(1)), int(m.group(2)))
    m = _DECIMAL.match(text)
    if m:
        frac = m.group(2) or ""
        return Fraction(int(m.group(1) + frac), 10 ** len(frac))
    raise ValueError(f"not a rational literal: {text!r} (use p/q or a decimal like 0.25)")


def format_rational(x: Fraction) -> str:
    return str(Fraction(x))


def serialize_walk(w: GridWalk) -> str:
    lines = [f"gw {w.dimension} {w.n}"]
    lines.extend(" ".join(str(c) for c in row) for row in w.vertices.tolist())
    return "\n".join(lines) + "\n"


def parse_walk(text: str) -> GridWalk:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise WalkFileError("line 1: missing header 'gw <d> <n>'")
    head = lines[0].split()
    if len(head) != 3 or head[0] != "gw":
        raise WalkFileError("line 1: header must be 'gw <d> <n>'")
    try:
        d, n = int(head[1]), int(head[2])
    except ValueError:
        raise WalkFileError("line 1: header dimension and length must be integers") from None
    if d < 1 or n < 1:
        raise WalkFileError("line 1: need d >= 1 and n >= 1")
    body = lines[1:]
    if len(body) != n:
        raise WalkFileError(f"line 1: header announces {n} vertices, file has {len(body)}")
    rows = []
    for k, line in enumerate(body):
        lineno = k + 2
        fields = line.split(" ")
        if len(fields) != d:
            raise WalkFileError(f"line {lineno}: expected {d} coordinates, got {len(fields)}")
        try:
            row = [int(f) for f in fields]
        except ValueError:
            raise WalkFileError(f"line {lineno}: coordinates must be decimal integers") from None
        if any(abs(c) > COORD_LIMIT for c in row):
            raise WalkFileError(f"line {lineno}: coordinate magnitude exceeds 2^40")
        if rows and sum(abs(a - b) for a, b in zip(rows[-1], row)) != 1:
            raise WalkFileError(f"line {lineno}: non-unit step from the previous vertex")
        rows.append(row)
    return GridWalk(np.array(rows, dtype=np.int64))


def read_walk(path: Union[str, Path]) -> GridWalk:
    try:
        data = Path(path).read_bytes()
    except OSError as exc:
        raise WalkFileError(f"{path}: {exc.strerror}") from None
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError:
        raise WalkFileError(f"{path}: not valid UTF-8") from None
    try:
        return parse_walk(text)
    except WalkFileError as exc:
        raise WalkFileError(f"{path}: {exc}") from None


def write_walk(path: Union[str, Path], w: GridWalk) -> None:
    Path(path).write_bytes(serialize_walk(w).encode("utf-8"))
