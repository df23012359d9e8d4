"""graph6 / sparse6 / edge-list / shorthand parsing and the JSON report encoding."""

from __future__ import annotations

import json
import re
from dataclasses import fields, is_dataclass
from enum import Enum
from fractions import Fraction
from typing import Any

from .graph import Graph, complete, cycle, empty, path, petersen


class GraphParseError(ValueError):
    def __init__(self, message: str, offset: int | None = None):
        self.offset = offset
        where = f" at byte {offset}" if offset is not None else ""
        super().__init__(f"{message}{where}")


# ---------------------------------------------------------------------------
# graph6
# ---------------------------------------------------------------------------

def _as_bytes(text: str | bytes) -> bytes:
    return text.encode("ascii") if isinstance(text, str) else bytes(text)


def _encode_n(n: int) -> bytes:
    if n <= 62:
        return bytes([63 + n])
    if n <= 258047:
        return bytes([126] + [63 + (n >> s & 63) for s in (12, 6, 0)])
    return bytes([126, 126] + [63 + (n >> s & 63) for s in (30, 24, 18, 12, 6, 0)])


def _decode_n(data: bytes, pos: int) -> tuple[int, int]:
    """Return (n, next position)."""
    def sextets(start: int, count: int) -> int:
        if start + count > len(data):
            raise GraphParseError("truncated vertex count", len(data))
        val = 0
        for i in range(start, start + count):
            val = val << 6 | _sextet(data, i)
        return val

    if pos >= len(data):
        raise GraphParseError("empty input", pos)
    if data[pos] != 126:
        return _sextet(data, pos), pos + 1
    if pos + 1 < len(data) and data[pos + 1] == 126:
        return sextets(pos + 2, 6), pos + 8
    return sextets(pos + 1, 3), pos + 4


def _sextet(data: bytes, i: int) -> int:
    b = data[i]
    if not 63 <= b <= 126:
        raise GraphParseError(f"byte {b!r} outside 63..126", i)
    return b - 63


def _strip(data: bytes, header: bytes) -> tuple[bytes, int]:
    data = data.rstrip(b"\r\n")
    if data.startswith(header):
        return data, len(header)
    return data, 0


def parse_graph6(text: str | bytes) -> Graph:
    data, pos = _strip(_as_bytes(text), b">>graph6<<")
    n, pos = _decode_n(data, pos)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - pos < nbytes:
        raise GraphParseError(f"truncated bit stream: need {nbytes} bytes", len(data))
    if len(data) - pos > nbytes:
        raise GraphParseError("trailing bytes after bit stream", pos + nbytes)
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = pos + k // 6
            if _sextet(data, byte) >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    if nbits % 6:
        last = pos + nbytes - 1
        if _sextet(data, last) & ((1 << (6 - nbits % 6)) - 1):
            raise GraphParseError("nonzero padding bits", last)
    return Graph(n, tuple(rows))


def emit_graph6(g: Graph) -> str:
    out = bytearray(_encode_n(g.n))
    acc, filled = 0, 0
    for j in range(1, g.n):
        for i in range(j):
            acc = acc << 1 | (g.rows[i] >> j & 1)
            filled += 1
            if filled == 6:
                out.append(63 + acc)
                acc, filled = 0, 0
    if filled:
        out.append(63 + (acc << (6 - filled)))
    return out.decode("ascii")


# ---------------------------------------------------------------------------
# sparse6 (parse only)
# ---------------------------------------------------------------------------

def parse_sparse6(text: str | bytes) -> Graph:
    data, pos = _strip(_as_bytes(text), b">>sparse6<<")
    if pos >= len(data) or data[pos] != ord(":"):
        raise GraphParseError("sparse6 must start with ':'", pos)
    n, pos = _decode_n(data, pos + 1)
    k = max(1, (n - 1).bit_length())
    stream = []
    for i in range(pos, len(data)):
        s = _sextet(data, i)
        stream.extend(s >> (5 - t) & 1 for t in range(6))
    edges: set[tuple[int, int]] = set()
    v, i = 0, 0
    while i + 1 + k <= len(stream):
        b = stream[i]
        x = 0
        for t in range(k):
            x = x << 1 | stream[i + 1 + t]
        i += 1 + k
        if b:
            v += 1
        if v >= n:
            break
        if x > v:
            v = x
        elif x < n:
            if x == v:
                raise GraphParseError(f"loop at vertex {v}")
            edges.add((min(x, v), max(x, v)))
    return Graph.from_edges(n, sorted(edges))


# ---------------------------------------------------------------------------
# Shorthand and edge lists
# ---------------------------------------------------------------------------

_SHORTHAND = re.compile(r"^(?:([CKPE])(\d+)|petersen)$")


def parse_shorthand(text: str) -> Graph:
    m = _SHORTHAND.match(text.strip())
    if not m:
        raise GraphParseError(f"not a shorthand graph name: {text!r}")
    if m.group(0) == "petersen":
        return petersen()
    kind, n = m.group(1), int(m.group(2))
    if kind == "C":
        if n < 3:
            raise GraphParseError(f"C{n}: cycles need at least 3 vertices")
        return cycle(n)
    if kind == "K":
        return complete(n)
    if kind == "P":
        return path(n)
    return empty(n)


def parse_edgelist(text: str) -> Graph:
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    if not lines:
        raise GraphParseError("empty edge list")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "n" or not head[1].isdigit():
        raise GraphParseError(f"first line must be 'n <count>', got {lines[0]!r}")
    n = int(head[1])
    seen: set[tuple[int, int]] = set()
    for lineno, ln in enumerate(lines[1:], start=2):
        parts = ln.split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise GraphParseError(f"line {lineno}: expected 'u v', got {ln!r}")
        u, v = int(parts[0]), int(parts[1])
        if u == v:
            raise GraphParseError(f"line {lineno}: loop at {u}")
        if u >= n or v >= n:
            raise GraphParseError(f"line {lineno}: vertex index >= n={n}")
        e = (min(u, v), max(u, v))
        if e in seen:
            raise GraphParseError(f"line {lineno}: duplicate edge {e}")
        seen.add(e)
    return Graph.from_edges(n, sorted(seen))


def parse_graph(text: str) -> Graph:
    """Detect the format of ``text`` and parse it."""
    s = text.strip()
    if s.startswith("n ") or s.startswith("n\t") or "\n" in s:
        return parse_edgelist(s)
    if _SHORTHAND.match(s):
        return parse_shorthand(s)
    if s.startswith(":") or s.startswith(">>sparse6<<"):
        return parse_sparse6(s)
    return parse_graph6(s)


# ---------------------------------------------------------------------------
# JSON reports
# ---------------------------------------------------------------------------

def rational_str(q: Fraction | int) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def to_jsonable(obj: Any) -> Any:
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return obj
    if isinstance(obj, Fraction):
        return rational_str(obj)
    if isinstance(obj, float):
        raise TypeError("floats are not allowed in reports")
    if isinstance(obj, Graph):
        return emit_graph6(obj)
    if isinstance(obj, Enum):
        return obj.value
    if hasattr(obj, "to_json"):
        return to_jsonable(obj.to_json())
    if is_dataclass(obj):
        return {f.name: to_jsonable(getattr(obj, f.name)) for f in fields(obj)}
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def report_serialize(result: Any) -> str:
    return json.dumps(to_jsonable(result), sort_keys=True, indent=2)
