"""Edge-list and graph6 readers/writers, and the JSON flow document.

Edge-list documents::

    # comment
    n m
    tail head      (m lines, 0-indexed; line order gives edge ids)

graph6 holds simple graphs only; edges are read in (i, j) order with
``i < j`` and oriented from ``i`` to ``j``.
"""

from __future__ import annotations

from typing import Optional

from .flows import Flow, verify_flow
from .multigraph import MultiGraph


class FormatError(ValueError):
    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)
        self.line = line
        self.column = column


def parse_edgelist(text: str) -> MultiGraph:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            rows.append((lineno, body))
    if not rows:
        raise FormatError("missing 'n m' header", 1)
    lineno, header = rows[0]
    parts = header.split()
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        raise FormatError(f"malformed header {header!r}, expected 'n m'", lineno, 1)
    n, m = int(parts[0]), int(parts[1])
    if len(rows) - 1 != m:
        raise FormatError(f"header announces {m} edges, found {len(rows) - 1}", lineno)
    edges = []
    for i, (lineno, body) in enumerate(rows[1:]):
        parts = body.split()
        if len(parts) != 2:
            raise FormatError(f"expected 'tail head', got {body!r}", lineno, 1)
        ends = []
        for col, tok in enumerate(parts):
            column = raw_column(body, col)
            if not tok.isdigit():
                raise FormatError(f"vertex index {tok!r} is not a nonnegative integer", lineno, column)
            v = int(tok)
            if v >= n:
                raise FormatError(f"vertex index {v} out of range for n = {n}", lineno, column)
            ends.append(v)
        edges.append((i, ends[0], ends[1]))
    return MultiGraph(n, tuple(edges))


def raw_column(body: str, field: int) -> int:
    pos = 0
    for k, tok in enumerate(body.split()):
        pos = body.index(tok, pos)
        if k == field:
            return pos + 1
        pos += len(tok)
    return 1


def emit_edgelist(g: MultiGraph) -> str:
    lines = [f"{g.vertex_count} {g.m}"]
    lines += [f"{t} {h}" for _, t, h in g.edges]
    return "\n".join(lines) + "\n"


def _decode_n(data: str) -> tuple[int, int]:
    def val(k):
        c = ord(data[k]) - 63
        if not 0 <= c <= 63:
            raise FormatError(f"character {data[k]!r} outside the graph6 range", 1, k + 1)
        return c

    if not data:
        raise FormatError("empty graph6 string", 1)
    if data[0] != "~":
        return val(0), 1
    if len(data) >= 2 and data[1] == "~":
        if len(data) < 8:
            raise FormatError("truncated 8-byte vertex count", 1, 1)
        n = 0
        for k in range(2, 8):
            n = (n << 6) | val(k)
        return n, 8
    if len(data) < 4:
        raise FormatError("truncated 4-byte vertex count", 1, 1)
    n = 0
    for k in range(1, 4):
        n = (n << 6) | val(k)
    return n, 4


def parse_graph6(line: str) -> MultiGraph:
    data = line.strip()
    if data.startswith(">>graph6<<"):
        data = data[len(">>graph6<<"):]
    n, start = _decode_n(data)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[start:]
    if len(body) != need:
        raise FormatError(
            f"vertex count {n} needs {need} data bytes, found {len(body)}", 1, start + 1
        )
    bits = []
    for k, ch in enumerate(body):
        x = ord(ch) - 63
        if not 0 <= x <= 63:
            raise FormatError(f"character {ch!r} outside the graph6 range", 1, start + k + 1)
        bits.extend((x >> s) & 1 for s in range(5, -1, -1))
    if any(bits[nbits:]):
        raise FormatError("nonzero padding bits", 1, len(data))
    pairs = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                pairs.append((i, j))
            k += 1
    pairs.sort()
    return MultiGraph(n, tuple((e, i, j) for e, (i, j) in enumerate(pairs)))


def emit_graph6(g: MultiGraph) -> str:
    if not g.is_simple():
        raise FormatError("graph6 cannot express loops or parallel edges")
    n = g.vertex_count
    adj = {(min(t, h), max(t, h)) for _, t, h in g.edges}
    bits = [1 if (i, j) in adj else 0 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    if n <= 62:
        head = chr(n + 63)
    elif n <= 258047:
        head = "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    else:
        head = "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    body = "".join(
        chr(sum(b << (5 - s) for s, b in enumerate(bits[k:k + 6])) + 63) for k in range(0, len(bits), 6)
    )
    return head + body


def is_canonical_graph6_graph(g: MultiGraph) -> bool:
    """Whether ``g`` is exactly what ``parse_graph6`` would produce for its own encoding."""
    return g.is_simple() and g.edge_ids == tuple(range(g.m)) and list(g.endpoint_list()) == sorted(
        (t, h) for _, t, h in g.edges if t < h
    )


def flow_document(g: MultiGraph, flow: Flow) -> dict:
    return {
        "exists": True,
        "vertex_count": g.vertex_count,
        "flow": [
            {"edge": e, "tail": t, "head": h, "value": x}
            for (e, t, h), x in zip(g.edges, flow.values)
        ],
    }


def no_flow_document(reason: str) -> dict:
    return {"exists": False, "reason": reason}


def irrelevant_document(edge: int, provenance: str) -> dict:
    return {"irrelevant_edge": edge, "provenance": provenance}


def verify_flow_document(doc: dict) -> bool:
    """Rebuild the graph embedded in a flow document and re-check the flow."""
    if not doc.get("exists"):
        return False
    entries = doc["flow"]
    g = MultiGraph(doc["vertex_count"], tuple((d["edge"], d["tail"], d["head"]) for d in entries))
    values = {d["edge"]: d["value"] for d in entries}
    if any(v not in (1, 2) for v in values.values()):
        return False
    return verify_flow(g, [values[e] for e in g.edge_ids]).nowhere_zero
