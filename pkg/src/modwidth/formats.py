"""Reading and writing graph6, whitespace edge lists and DIMACS ``.col``.

All parsers take ``bytes`` and report faults as :class:`ParseError` with
the byte offset of the offending token.
"""

from __future__ import annotations

import re

from .errors import ParseError
from .graph import Graph

FORMATS = ("graph6", "edgelist", "dimacs")

_G6_HEADER = b">>graph6<<"
_TOKEN = re.compile(rb"\S+")


# -- graph6 ------------------------------------------------------------------


def _g6_size(n: int) -> bytes:
    if n <= 62:
        return bytes([63 + n])
    if n <= 258047:
        return bytes([126] + [63 + (n >> s & 63) for s in (12, 6, 0)])
    if n <= 68719476735:
        return bytes([126, 126] + [63 + (n >> s & 63) for s in (30, 24, 18, 12, 6, 0)])
    raise ValueError("graph too large for graph6")


def emit_graph6(g: Graph) -> bytes:
    out = bytearray(_g6_size(g.n))
    acc = nbits = 0
    for j in range(1, g.n):
        col = g.masks[j]
        for i in range(j):
            acc = (acc << 1) | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(63 + acc)
                acc = nbits = 0
    if nbits:
        out.append(63 + (acc << (6 - nbits)))
    return bytes(out)


def parse_graph6(data: bytes) -> Graph:
    start = 0
    if data.startswith(_G6_HEADER):
        start = len(_G6_HEADER)
    body = data[start:].rstrip(b"\r\n")
    if not body:
        raise ParseError("empty graph6 input", start)
    for i, c in enumerate(body):
        if not 63 <= c <= 126:
            raise ParseError(f"invalid graph6 byte {c!r}", start + i)

    def sixes(lo: int, count: int) -> int:
        if len(body) < lo + count:
            raise ParseError("truncated graph6 size field", start + len(body))
        v = 0
        for c in body[lo : lo + count]:
            v = (v << 6) | (c - 63)
        return v

    if body[0] != 126:
        n, pos = body[0] - 63, 1
    elif len(body) > 1 and body[1] == 126:
        n, pos = sixes(2, 6), 8
    else:
        n, pos = sixes(1, 3), 4

    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) - pos != need:
        raise ParseError(
            f"graph6 body has {len(body) - pos} bytes, expected {need} for n={n}",
            start + min(len(body), pos + need),
        )
    masks = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[pos + k // 6] - 63
            if byte >> (5 - k % 6) & 1:
                masks[i] |= 1 << j
                masks[j] |= 1 << i
            k += 1
    return Graph(n, masks, check=False)


# -- edge list ---------------------------------------------------------------


def emit_edgelist(g: Graph) -> bytes:
    lines = [str(g.n)]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return ("\n".join(lines) + "\n").encode()


def _int_token(m: re.Match, what: str) -> int:
    try:
        return int(m.group())
    except ValueError:
        raise ParseError(f"bad {what} {m.group()!r}", m.start()) from None


def parse_edgelist(data: bytes) -> Graph:
    # '#' starts a comment; blank out comment text so offsets stay exact
    data = re.sub(rb"#[^\n]*", lambda m: b" " * len(m.group()), data)
    tokens = list(_TOKEN.finditer(data))
    if not tokens:
        raise ParseError("missing vertex count", 0)
    n = _int_token(tokens[0], "vertex count")
    if n < 0:
        raise ParseError("negative vertex count", tokens[0].start())
    rest = tokens[1:]
    if len(rest) % 2:
        raise ParseError("dangling endpoint without a partner", rest[-1].start())
    masks = [0] * n
    for a, b in zip(rest[::2], rest[1::2]):
        u, v = _int_token(a, "vertex"), _int_token(b, "vertex")
        for tok, x in ((a, u), (b, v)):
            if not 0 <= x < n:
                raise ParseError(f"vertex {x} out of range for n={n}", tok.start())
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", a.start())
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return Graph(n, masks, check=False)


# -- DIMACS ------------------------------------------------------------------


def emit_dimacs(g: Graph) -> bytes:
    lines = [f"p edge {g.n} {g.m}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return ("\n".join(lines) + "\n").encode()


def parse_dimacs(data: bytes) -> Graph:
    masks = None
    n = 0
    offset = 0
    for line in data.splitlines(keepends=True):
        toks = list(_TOKEN.finditer(line))
        here = offset
        offset += len(line)
        if not toks or toks[0].group() == b"c":
            continue
        kind = toks[0].group()
        if kind == b"p":
            if masks is not None:
                raise ParseError("duplicate problem line", here)
            if len(toks) != 4 or toks[1].group() not in (b"edge", b"col"):
                raise ParseError("expected 'p edge <n> <m>'", here)
            n = _int_token(toks[2], "vertex count")
            _int_token(toks[3], "edge count")
            if n < 0:
                raise ParseError("negative vertex count", here + toks[2].start())
            masks = [0] * n
        elif kind == b"e":
            if masks is None:
                raise ParseError("edge line before problem line", here)
            if len(toks) != 3:
                raise ParseError("expected 'e <u> <v>'", here)
            ends = []
            for tok in toks[1:]:
                x = _int_token(tok, "vertex")
                if not 1 <= x <= n:
                    raise ParseError(f"vertex {x} out of range 1..{n}", here + tok.start())
                ends.append(x - 1)
            u, v = ends
            if u == v:
                raise ParseError(f"self-loop at vertex {u + 1}", here)
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        else:
            raise ParseError(f"unknown line type {kind!r}", here)
    if masks is None:
        raise ParseError("missing problem line", len(data))
    return Graph(n, masks, check=False)


# -- dispatch ----------------------------------------------------------------

_PARSERS = {"graph6": parse_graph6, "edgelist": parse_edgelist, "dimacs": parse_dimacs}
_EMITTERS = {"graph6": emit_graph6, "edgelist": emit_edgelist, "dimacs": emit_dimacs}


def parse(fmt: str, data: bytes) -> Graph:
    try:
        return _PARSERS[fmt](data)
    except KeyError:
        raise ValueError(f"unknown format {fmt!r}; choose from {FORMATS}") from None


def emit(g: Graph, fmt: str) -> bytes:
    try:
        return _EMITTERS[fmt](g)
    except KeyError:
        raise ValueError(f"unknown format {fmt!r}; choose from {FORMATS}") from None


def sniff(data: bytes) -> str:
    """Guess the format from the first non-blank byte."""
    head = data.lstrip()[:1]
    if data.lstrip().startswith(_G6_HEADER):
        return "graph6"
    if head in (b"p", b"c"):
        return "dimacs"
    if head.isdigit() or head == b"#":
        return "edgelist"
    return "graph6"
