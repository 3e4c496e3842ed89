"""graph6 encoding and decoding.

Only the plain (undirected, simple) format is supported.  Orders up to
258047 use the standard size prefixes even though ``Graph`` caps at 64.
"""

from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from .graph import Graph

HEADER = ">>graph6<<"


def _encode_n(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])
    raise ValueError(f"order {n} too large for graph6")


def encode(g: Graph) -> str:
    out = bytearray(_encode_n(g.n))
    acc = 0
    nbits = 0
    adj = g.adj
    # upper triangle, column by column: (0,1), (0,2), (1,2), (0,3), ...
    for j in range(1, g.n):
        row = adj[j]
        for i in range(j):
            acc = acc << 1 | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = 0
                nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return out.decode("ascii")


def decode(text: str) -> Graph:
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    data = s.encode("ascii")
    if not data:
        raise ValueError("empty graph6 string")
    if any(b < 63 or b > 126 for b in data):
        raise ValueError(f"invalid graph6 character in {s!r}")
    if data[0] != 126:
        n, body = data[0] - 63, data[1:]
    elif len(data) >= 4 and data[1] != 126:
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        body = data[4:]
    else:
        raise ValueError("graph6 orders beyond 258047 are not supported")
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise ValueError(f"graph6 body has {len(body)} bytes, expected {need} for n={n}")
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[k // 6] - 63
            if byte >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, tuple(adj))


def read_file(fh: TextIO) -> Iterator[Graph]:
    for line in fh:
        line = line.strip()
        if line and not line.startswith("#"):
            yield decode(line)


def write_lines(graphs: Iterable[Graph], fh: TextIO) -> int:
    count = 0
    for g in graphs:
        fh.write(encode(g))
        fh.write("\n")
        count += 1
    return count
