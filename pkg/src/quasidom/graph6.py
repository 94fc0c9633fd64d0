"""graph6 text encoding of undirected graphs (6-bit packed upper triangle).

One graph per line. The upper triangle of the adjacency matrix is flattened
column by column (x(0,1), x(0,2), x(1,2), x(0,3), ...), padded with zeros to a
multiple of six bits, and each 6-bit group is printed as ASCII 63..126.
"""

from __future__ import annotations

from .graph import MAX_VERTICES, Graph

HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    """Malformed graph6 input."""


def encode(g: Graph) -> str:
    if g.n <= 62:
        head = chr(g.n + 63)
    else:
        # 63 <= n <= 258047 uses '~' plus three 6-bit digits; we cap at 64 anyway
        head = "~" + "".join(
            chr(((g.n >> shift) & 0x3F) + 63) for shift in (12, 6, 0)
        )
    bits = []
    for col in range(1, g.n):
        column = g.adj[col]
        bits.extend((column >> row) & 1 for row in range(col))
    out = []
    for i in range(0, len(bits), 6):
        group = bits[i : i + 6]
        group += [0] * (6 - len(group))
        val = 0
        for b in group:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return head + "".join(out)


def decode(line: str) -> Graph:
    s = line.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER) :].strip()
    if not s:
        raise Graph6Error("empty graph6 line")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"character {ch!r} outside graph6 alphabet")
    if s[0] == "~":
        if len(s) < 4 or s[1] == "~":
            raise Graph6Error("unsupported or truncated vertex-count header")
        n = 0
        for ch in s[1:4]:
            n = (n << 6) | (ord(ch) - 63)
        body = s[4:]
    else:
        n = ord(s[0]) - 63
        body = s[1:]
    if n < 1:
        raise Graph6Error(f"vertex count {n} out of range")
    if n > MAX_VERTICES:
        raise Graph6Error(f"vertex count {n} exceeds the {MAX_VERTICES}-vertex cap")
    nbits = n * (n - 1) // 2
    expected = (nbits + 5) // 6
    if len(body) != expected:
        raise Graph6Error(
            f"adjacency section has {len(body)} characters, expected {expected}"
        )
    bits = []
    for ch in body:
        val = ord(ch) - 63
        bits.extend((val >> shift) & 1 for shift in range(5, -1, -1))
    if any(bits[nbits:]):
        raise Graph6Error("nonzero padding bits")
    rows = [0] * n
    idx = 0
    for col in range(1, n):
        for row in range(col):
            if bits[idx]:
                rows[row] |= 1 << col
                rows[col] |= 1 << row
            idx += 1
    return Graph(n, tuple(rows))


__all__ = ["Graph6Error", "decode", "encode"]
