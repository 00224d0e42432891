"""graph6, DOT and JSON adjacency-list serialisation."""

from __future__ import annotations

import json
from typing import Any

from .graph import Graph

__all__ = [
    "GraphFormatError",
    "graph6_encode",
    "graph6_decode",
    "to_dot",
    "to_json_dict",
    "from_json_dict",
    "to_json",
    "from_json",
    "parse_graph_text",
]

_HEADER = ">>graph6<<"
_MAX_N = (1 << 36) - 1


class GraphFormatError(ValueError):
    """Malformed graph text; ``offset`` is the byte position of the problem."""

    def __init__(self, message: str, offset: int) -> None:
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def _encode_n(n: int) -> str:
    if n < 0 or n > _MAX_N:
        raise ValueError(f"graph6 cannot encode n={n}")
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def graph6_encode(g: Graph) -> str:
    """graph6 text (no header, no newline)."""
    out = [_encode_n(g.n)]
    acc = 0
    nbits = 0
    rows = g.rows
    # upper triangle, column by column: x(0,1), x(0,2), x(1,2), x(0,3), ...
    for j in range(1, g.n):
        rj = rows[j]
        for i in range(j):
            acc = (acc << 1) | ((rj >> i) & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def graph6_decode(text: str) -> Graph:
    s = text.strip()
    start = 0
    if s.startswith(_HEADER):
        start = len(_HEADER)
    data = s[start:]
    if not data:
        raise GraphFormatError("empty graph6 string", start)
    vals = []
    for i, ch in enumerate(data):
        c = ord(ch)
        if not 63 <= c <= 126:
            raise GraphFormatError(f"invalid graph6 character {ch!r}", start + i)
        vals.append(c - 63)

    if vals[0] != 63:
        n, pos = vals[0], 1
    elif len(vals) >= 2 and vals[1] == 63:
        if len(vals) < 8:
            raise GraphFormatError("truncated 36-bit vertex count", start + len(vals))
        n = 0
        for v in vals[2:8]:
            n = (n << 6) | v
        pos = 8
    else:
        if len(vals) < 4:
            raise GraphFormatError("truncated 18-bit vertex count", start + len(vals))
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        pos = 4

    need = (n * (n - 1) // 2 + 5) // 6
    have = len(vals) - pos
    if have < need:
        raise GraphFormatError(
            f"truncated edge data: need {need} bytes, found {have}", start + len(vals)
        )
    if have > need:
        raise GraphFormatError("trailing bytes after edge data", start + pos + need)

    rows = [0] * n
    k = 0
    body = vals[pos:]
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] >> (5 - k % 6)) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph._trusted(rows)


def to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        if g.degree(v) == 0:
            lines.append(f"  {v};")
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json_dict(g: Graph) -> dict[str, Any]:
    return {"n": g.n, "edges": [[u, v] for u, v in g.edges()]}


def from_json_dict(obj: Any) -> Graph:
    if not isinstance(obj, dict) or "n" not in obj or "edges" not in obj:
        raise ValueError('expected an object with "n" and "edges"')
    n = obj["n"]
    if not isinstance(n, int):
        raise ValueError('"n" must be an integer')
    return Graph(n, (tuple(e) for e in obj["edges"]))


def to_json(g: Graph) -> str:
    return json.dumps(to_json_dict(g))


def from_json(text: str) -> Graph:
    return from_json_dict(json.loads(text))


def parse_graph_text(text: str) -> Graph:
    """Read either a JSON adjacency object or a single graph6 line."""
    stripped = text.strip()
    if stripped.startswith("{"):
        return from_json(stripped)
    lines = [ln for ln in stripped.splitlines() if ln.strip()]
    if len(lines) != 1:
        raise GraphFormatError(f"expected one graph6 line, found {len(lines)}", 0)
    return graph6_decode(lines[0])
