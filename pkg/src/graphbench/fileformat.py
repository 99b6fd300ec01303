"""Canonical text format for graphs plus the result checksum.

Layout (UTF-8, LF endings, exactly one trailing newline, no trailing
whitespace anywhere)::

    GRAPHBENCH v1
    <n> <m>
    <color 0>
    ...
    <color n-1>
    <u> <v> <w>        (m lines, u < v, sorted lexicographically by (u, v))

Colors and weights are rendered with 17 significant digits, which makes the
round trip bit-exact for 64-bit floats and the rendering unique per value.
Because the edge order and number rendering are fixed, two graphs serialize
to the same text iff they are equal, so the FNV-1a checksum of the text is
a stable cross-run fingerprint.
"""

from __future__ import annotations

import math

from .core import CsrGraph, Graph, GraphBenchError, build_csr

__all__ = ["ParseError", "serialize", "parse", "checksum", "fmt_float"]

MAGIC = "GRAPHBENCH v1"

FNV_OFFSET = 0xcbf29ce484222325
FNV_PRIME = 0x100000001b3
_MASK64 = (1 << 64) - 1


class ParseError(GraphBenchError):
    """Malformed graph text. Carries the 1-based line number and a cause tag."""

    def __init__(self, line: int, cause: str, detail: str = ""):
        self.line = line
        self.cause = cause
        msg = f"line {line}: {cause}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


def fmt_float(x: float) -> str:
    """Render a float with 17 significant digits (bit-exact round trip)."""
    return format(x, ".17g")


def serialize(g: Graph) -> str:
    """Canonical text for a well-formed graph (caller ensures validity)."""
    edges = g.undirected_edges()
    lines = [MAGIC, f"{g.n} {len(edges)}"]
    lines.extend(fmt_float(c) for c in g.colors)
    lines.extend(f"{u} {v} {fmt_float(w)}" for u, v, w in edges)
    return "\n".join(lines) + "\n"


def _parse_int(tok: str, lineno: int, what: str) -> int:
    if not tok or tok[0] == "+" or (tok[0] == "0" and len(tok) > 1) or not tok.isdigit():
        raise ParseError(lineno, "BadNumber", f"{what}: {tok!r}")
    return int(tok)


def _parse_float(tok: str, lineno: int, what: str) -> float:
    try:
        val = float(tok)
    except ValueError:
        raise ParseError(lineno, "BadNumber", f"{what}: {tok!r}") from None
    if math.isnan(val):
        raise ParseError(lineno, "BadNumber", f"{what}: {tok!r}")
    return val


def parse(text: str) -> CsrGraph:
    """Parse canonical graph text, enforcing the format strictly.

    Raises ParseError with the offending line number and a cause tag such as
    BadHeader, BadNumber, ColorOutOfRange, WeightOutOfRange, SelfLoop,
    EdgeOrder, EndpointOutOfRange, UnexpectedEnd, or TrailingData.
    """
    if not text.endswith("\n"):
        raise ParseError(max(1, text.count("\n") + 1), "MissingNewline",
                         "file must end with exactly one newline")
    body = text[:-1]
    lines = body.split("\n")
    if body.endswith("\n") or (lines and lines[-1] == "" and len(lines) > 1):
        raise ParseError(len(lines), "TrailingData", "blank trailing line")

    def get(idx: int) -> str:
        if idx >= len(lines):
            raise ParseError(len(lines) + 1, "UnexpectedEnd",
                             f"expected at least {idx + 1} lines")
        line = lines[idx]
        if line != line.strip() or "\t" in line or "  " in line:
            raise ParseError(idx + 1, "BadWhitespace", repr(line))
        return line

    if get(0) != MAGIC:
        raise ParseError(1, "BadHeader", f"expected {MAGIC!r}")
    header = get(1).split(" ")
    if len(header) != 2:
        raise ParseError(2, "BadHeader", "expected '<n> <m>'")
    n = _parse_int(header[0], 2, "vertex count")
    m = _parse_int(header[1], 2, "edge count")

    colors: list[float] = []
    for i in range(n):
        lineno = 3 + i
        tok = get(lineno - 1)
        if " " in tok:
            raise ParseError(lineno, "BadNumber", "expected a single color value")
        c = _parse_float(tok, lineno, "color")
        if not (0.0 <= c <= 1.0):
            raise ParseError(lineno, "ColorOutOfRange", tok)
        colors.append(c)

    edges: list[tuple[int, int, float]] = []
    prev: tuple[int, int] | None = None
    for k in range(m):
        lineno = 3 + n + k
        parts = get(lineno - 1).split(" ")
        if len(parts) != 3:
            raise ParseError(lineno, "BadEdge", "expected '<u> <v> <w>'")
        u = _parse_int(parts[0], lineno, "endpoint")
        v = _parse_int(parts[1], lineno, "endpoint")
        w = _parse_float(parts[2], lineno, "weight")
        if u >= n or v >= n:
            raise ParseError(lineno, "EndpointOutOfRange", f"({u}, {v}) with n={n}")
        if u == v:
            raise ParseError(lineno, "SelfLoop", f"vertex {u}")
        if u > v:
            raise ParseError(lineno, "EdgeOrder", f"({u}, {v}) must satisfy u < v")
        if prev is not None and (u, v) <= prev:
            cause = "DuplicateEdge" if (u, v) == prev else "EdgeOrder"
            raise ParseError(lineno, cause, f"({u}, {v}) after {prev}")
        if not (0.0 <= w <= 1.0):
            raise ParseError(lineno, "WeightOutOfRange", parts[2])
        prev = (u, v)
        edges.append((u, v, w))

    expected = 2 + n + m
    if len(lines) > expected:
        raise ParseError(expected + 1, "TrailingData",
                         f"{len(lines) - expected} extra line(s)")
    return build_csr(n, colors, edges)


def checksum(text: str | bytes) -> int:
    """FNV-1a 64-bit hash of the byte sequence (text hashed as UTF-8)."""
    data = text.encode("utf-8") if isinstance(text, str) else text
    h = FNV_OFFSET
    for byte in data:
        h = ((h ^ byte) * FNV_PRIME) & _MASK64
    return h
