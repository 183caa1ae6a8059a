"""Text format for lookup tables.

First non-comment line is "n m"; then exactly 2^n whitespace-separated
integers (decimal or 0x-prefixed hex); entry at position x is F(x).
Lines starting with '#' are comments. Canonical serialization is decimal,
16 entries per line.
"""

from __future__ import annotations

from .vbf import VBF


class LutFormatError(ValueError):
    pass


def parse_lut(text: str) -> VBF:
    tokens: list[str] = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        tokens.extend(line.split())
    if len(tokens) < 2:
        raise LutFormatError("missing header")
    try:
        n, m = int(tokens[0]), int(tokens[1])
    except ValueError as exc:
        raise LutFormatError(f"malformed header: {exc}") from exc
    if not (1 <= n <= 16 and 1 <= m <= 16):
        raise LutFormatError(f"widths out of range: n={n}, m={m}")
    body = tokens[2:]
    if len(body) != 1 << n:
        raise LutFormatError(f"expected {1 << n} entries, got {len(body)}")
    try:
        entries = tuple(int(t, 16) if t.lower().startswith("0x") else int(t)
                        for t in body)
    except ValueError as exc:
        raise LutFormatError(f"malformed entry: {exc}") from exc
    for i, y in enumerate(entries):
        if not 0 <= y < (1 << m):
            raise LutFormatError(f"entry {y} at position {i} out of range "
                                 f"for m={m}")
    return VBF(n, m, entries)


def serialize_lut(F: VBF) -> str:
    lines = [f"{F.n} {F.m}"]
    for i in range(0, len(F.table), 16):
        lines.append(" ".join(str(y) for y in F.table[i:i + 16]))
    return "\n".join(lines) + "\n"
