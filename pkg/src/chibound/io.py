"""Graph file formats: graph6, DIMACS .col, and a small JSON schema.

graph6 follows McKay's published encoding (bytes 63..126, upper triangle
column by column, most significant bit first).  DIMACS uses the classic
"p edge n m" / "e u v" 1-based lines.  JSON is
``{"n": int, "edges": [[u, v], ...]}`` with 0-based ids and edges sorted
lexicographically on output.
"""

from __future__ import annotations

import json

from .graph import Graph, build_graph


class FormatError(ValueError):
    """Malformed or ambiguous graph input."""


_G6_HEADER = ">>graph6<<"


def _g6_encode_n(n: int) -> str:
    if n < 0:
        raise FormatError("graph6 cannot encode a negative vertex count")
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr((n >> s & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(
            chr((n >> s & 63) + 63) for s in (30, 24, 18, 12, 6, 0)
        )
    raise FormatError(f"graph6 cannot encode n={n}")


def _g6_decode_n(s: str) -> tuple[int, str]:
    if not s:
        raise FormatError("empty graph6 string")
    if s[0] != "~":
        return ord(s[0]) - 63, s[1:]
    if len(s) >= 2 and s[1] != "~":
        if len(s) < 4:
            raise FormatError("truncated graph6 vertex count")
        n = 0
        for ch in s[1:4]:
            n = n << 6 | (ord(ch) - 63)
        return n, s[4:]
    if len(s) < 8:
        raise FormatError("truncated graph6 vertex count")
    n = 0
    for ch in s[2:8]:
        n = n << 6 | (ord(ch) - 63)
    return n, s[8:]


def encode_graph6(g: Graph) -> str:
    """Encode to a single graph6 line (no trailing newline, no header)."""
    out = [_g6_encode_n(g.n)]
    bits: list[int] = []
    for j in range(1, g.n):
        col = g.bits[j]
        for i in range(j):
            bits.append(col >> i & 1)
    while len(bits) % 6:
        bits.append(0)
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k : k + 6]:
            val = val << 1 | b
        out.append(chr(val + 63))
    return "".join(out)


def decode_graph6(text: str) -> Graph:
    """Decode one graph6 line; accepts the optional ``>>graph6<<`` header."""
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER) :]
    for ch in s:
        if not (63 <= ord(ch) <= 126):
            raise FormatError(f"invalid graph6 byte {ch!r}")
    n, rest = _g6_decode_n(s)
    need = (n * (n - 1) // 2 + 5) // 6
    if len(rest) != need:
        raise FormatError(
            f"graph6 body has {len(rest)} bytes, expected {need} for n={n}"
        )
    bits: list[int] = []
    for ch in rest:
        val = ord(ch) - 63
        bits.extend(val >> s6 & 1 for s6 in (5, 4, 3, 2, 1, 0))
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    if any(bits[k:]):
        raise FormatError("nonzero padding bits in graph6 body")
    return build_graph(n, edges)


def encode_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.m}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


def decode_dimacs(text: str) -> Graph:
    n = None
    declared_m = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise FormatError(f"line {lineno}: duplicate problem line")
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise FormatError(f"line {lineno}: expected 'p edge n m'")
            n, declared_m = int(parts[2]), int(parts[3])
        elif parts[0] == "e":
            if len(parts) != 3:
                raise FormatError(f"line {lineno}: expected 'e u v'")
            u, v = int(parts[1]) - 1, int(parts[2]) - 1
            edges.append((u, v))
        else:
            raise FormatError(f"line {lineno}: unknown record {parts[0]!r}")
    if n is None:
        raise FormatError("missing 'p edge n m' line")
    g = build_graph(n, edges)
    if declared_m is not None and declared_m != g.m and declared_m != len(edges):
        raise FormatError(
            f"problem line declares {declared_m} edges, file has {g.m}"
        )
    return g


def encode_json(g: Graph) -> str:
    return json.dumps({"n": g.n, "edges": [list(e) for e in g.sorted_edges()]})


def decode_json(text: str) -> Graph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from exc
    if not isinstance(data, dict) or "n" not in data or "edges" not in data:
        raise FormatError('graph JSON must be {"n": int, "edges": [[u,v],...]}')
    n = data["n"]
    edges = data["edges"]
    if not isinstance(n, int) or not isinstance(edges, list):
        raise FormatError('graph JSON must be {"n": int, "edges": [[u,v],...]}')
    pairs = []
    for e in edges:
        if not (isinstance(e, list) and len(e) == 2 and all(isinstance(x, int) for x in e)):
            raise FormatError(f"bad edge entry {e!r}")
        pairs.append((e[0], e[1]))
    try:
        return build_graph(n, pairs)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


FORMATS = ("graph6", "dimacs", "json")

_DECODERS = {
    "graph6": decode_graph6,
    "dimacs": decode_dimacs,
    "json": decode_json,
}

_ENCODERS = {
    "graph6": encode_graph6,
    "dimacs": encode_dimacs,
    "json": encode_json,
}


def decode(text: str, fmt: str) -> Graph:
    if fmt not in _DECODERS:
        raise FormatError(f"unknown format {fmt!r}")
    return _DECODERS[fmt](text)


def encode(g: Graph, fmt: str) -> str:
    if fmt not in _ENCODERS:
        raise FormatError(f"unknown format {fmt!r}")
    return _ENCODERS[fmt](g)


def sniff_format(text: str, filename: str | None = None) -> str:
    """Guess a format from the file extension, then the content.

    Ambiguous content (more than one plausible reading, or none) raises
    FormatError rather than guessing.
    """
    if filename:
        lower = filename.lower()
        if lower.endswith(".g6"):
            return "graph6"
        if lower.endswith((".col", ".dimacs")):
            return "dimacs"
        if lower.endswith(".json"):
            return "json"
    stripped = text.strip()
    candidates = []
    if stripped.startswith("{"):
        candidates.append("json")
    if any(
        line.strip().startswith(("p ", "c ", "e "))
        for line in stripped.splitlines()
    ) or stripped in ("p", "c"):
        candidates.append("dimacs")
    lines = [ln for ln in stripped.splitlines() if ln.strip()]
    if len(lines) == 1 and all(63 <= ord(ch) <= 126 for ch in lines[0].strip()):
        body = lines[0].strip()
        if body.startswith(_G6_HEADER) or not body.startswith(("p", "c", "e", "{")):
            candidates.append("graph6")
        else:
            # single short line like "p" is already claimed by dimacs
            try:
                decode_graph6(body)
                candidates.append("graph6")
            except FormatError:
                pass
    if len(candidates) != 1:
        raise FormatError(
            f"cannot determine input format (candidates: {candidates or 'none'});"
            " pass --format explicitly"
        )
    return candidates[0]
