"""File formats: edge lists, DIMACS coloring files, representation files, SVG.

Canonical edge list (ASCII, LF, single spaces)::

    n m
    u v        # m lines, 0-based, written with u < v in ascending order

DIMACS ``.col`` input (read only): ``c`` comment lines, one ``p edge n m``
line, then ``e u v`` lines with 1-based vertices.

Representation file::

    boxrep 1
    n d
    lo hi lo hi ...    # n lines, d pairs each; no vertex lines when d = 0

Writers emit byte-identical output for equal values, so canonical files
round-trip exactly.
"""

from __future__ import annotations

from boxicity.boxes import BoxRepresentation
from boxicity.graphs import Graph
from boxicity.intervals import IntervalRealization

__all__ = [
    "FormatError",
    "write_edge_list",
    "parse_edge_list",
    "parse_dimacs",
    "read_graph",
    "write_representation",
    "parse_representation",
    "render_svg",
]

FORMAT_VERSION = "boxrep 1"


class FormatError(ValueError):
    """Malformed input file; ``line`` is the 1-based offending line number."""

    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


def _ints(tokens: list[str], count: int, lineno: int, what: str) -> list[int]:
    if len(tokens) != count:
        raise FormatError(
            f"expected {count} fields for {what}, got {len(tokens)}", lineno
        )
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise FormatError(f"non-integer token in {what}", lineno) from None


def write_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    lines = text.splitlines()
    if not lines or not lines[0].split():
        raise FormatError("missing 'n m' header", 1)
    n, m = _ints(lines[0].split(), 2, 1, "header")
    if n < 0 or m < 0:
        raise FormatError("n and m must be non-negative", 1)
    edges = []
    seen: set[tuple[int, int]] = set()
    count = 0
    for lineno, raw in enumerate(lines[1:], start=2):
        tokens = raw.split()
        if not tokens:
            continue
        u, v = _ints(tokens, 2, lineno, "edge")
        if u == v:
            raise FormatError(f"self-loop at vertex {u}", lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"edge ({u}, {v}) out of range for n={n}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise FormatError(f"duplicate edge ({u}, {v})", lineno)
        seen.add(key)
        edges.append(key)
        count += 1
    if count != m:
        raise FormatError(f"header declares {m} edges, file has {count}")
    return Graph(n, edges)


def parse_dimacs(text: str) -> Graph:
    n = None
    declared = 0
    records = 0
    edges = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split()
        if not tokens or tokens[0] == "c":
            continue
        if tokens[0] == "p":
            if n is not None:
                raise FormatError("duplicate problem line", lineno)
            if len(tokens) != 4 or tokens[1] != "edge":
                raise FormatError("expected 'p edge n m'", lineno)
            n, declared = _ints(tokens[2:], 2, lineno, "problem line")
        elif tokens[0] == "e":
            if n is None:
                raise FormatError("edge before problem line", lineno)
            u, v = _ints(tokens[1:], 2, lineno, "edge")
            if not (1 <= u <= n and 1 <= v <= n):
                raise FormatError(f"vertex out of range 1..{n}", lineno)
            if u == v:
                raise FormatError(f"self-loop at vertex {u}", lineno)
            records += 1
            key = (min(u, v) - 1, max(u, v) - 1)
            if key not in seen:
                seen.add(key)
                edges.append(key)
        else:
            raise FormatError(f"unknown record type {tokens[0]!r}", lineno)
    if n is None:
        raise FormatError("missing problem line")
    # repeated edge records (both directions) are tolerated and collapse
    if declared != records:
        raise FormatError(
            f"problem line declares {declared} edges, file has {records}"
        )
    return Graph(n, edges)


def read_graph(text: str) -> Graph:
    """Parse either format, sniffing DIMACS by its 'c'/'p' record prefixes."""
    for raw in text.splitlines():
        tokens = raw.split()
        if not tokens:
            continue
        if tokens[0] in ("c", "p", "e"):
            return parse_dimacs(text)
        return parse_edge_list(text)
    raise FormatError("empty input")


def write_representation(b: BoxRepresentation) -> str:
    lines = [FORMAT_VERSION, f"{b.n} {b.d}"]
    if b.d > 0:
        for v in range(b.n):
            lines.append(" ".join(f"{lo} {hi}" for lo, hi in b.box(v)))
    return "\n".join(lines) + "\n"


def parse_representation(text: str) -> BoxRepresentation:
    lines = text.splitlines()
    if not lines or lines[0].strip() != FORMAT_VERSION:
        raise FormatError(f"expected version line {FORMAT_VERSION!r}", 1)
    if len(lines) < 2:
        raise FormatError("missing 'n d' line", 2)
    n, d = _ints(lines[1].split(), 2, 2, "size line")
    if n < 0 or d < 0:
        raise FormatError("n and d must be non-negative", 2)
    if d == 0:
        # no vertex lines in the zero-dimension format
        for lineno, raw in enumerate(lines[2:], start=3):
            if raw.split():
                raise FormatError("unexpected data after a d=0 header", lineno)
        return BoxRepresentation(n)
    body = [
        (lineno, raw)
        for lineno, raw in enumerate(lines[2:], start=3)
        if raw.split()
    ]
    if len(body) != n:
        raise FormatError(f"expected {n} vertex lines, found {len(body)}")
    los = [[0] * n for _ in range(d)]
    his = [[0] * n for _ in range(d)]
    for v, (lineno, raw) in enumerate(body):
        vals = _ints(raw.split(), 2 * d, lineno, f"vertex {v}")
        for j in range(d):
            lo, hi = vals[2 * j], vals[2 * j + 1]
            if lo > hi:
                raise FormatError(
                    f"vertex {v} dimension {j}: lo {lo} exceeds hi {hi}", lineno
                )
            los[j][v] = lo
            his[j][v] = hi
    dims = [IntervalRealization(list(zip(los[j], his[j]))) for j in range(d)]
    return BoxRepresentation(n, dims)


# ---------------------------------------------------------------------------
# SVG plot of 1- and 2-dimensional representations
# ---------------------------------------------------------------------------

_SVG_SIZE = 640
_SVG_PAD = 40


def render_svg(b: BoxRepresentation) -> str:
    """Draw the rectangles of a representation with d <= 2, labeled by vertex.

    One-dimensional representations are drawn as bars on per-vertex lanes.
    """
    if b.d > 2:
        raise ValueError(f"can only render d <= 2, got d={b.d}")
    if b.d == 0 or b.n == 0:
        rects = [(v, 0, 0, 1, 1) for v in range(b.n)]
    elif b.d == 1:
        r = b.dims[0]
        rects = [
            (v, int(r.los[v]), v, int(r.his[v]) + 1, v + 1) for v in range(b.n)
        ]
    else:
        r0, r1 = b.dims
        rects = [
            (
                v,
                int(r0.los[v]),
                int(r1.los[v]),
                int(r0.his[v]) + 1,
                int(r1.his[v]) + 1,
            )
            for v in range(b.n)
        ]
    x0 = min((r[1] for r in rects), default=0)
    y0 = min((r[2] for r in rects), default=0)
    x1 = max((r[3] for r in rects), default=1)
    y1 = max((r[4] for r in rects), default=1)
    span = _SVG_SIZE - 2 * _SVG_PAD
    sx = span / max(x1 - x0, 1)
    sy = span / max(y1 - y0, 1)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_SVG_SIZE}" '
        f'height="{_SVG_SIZE}" viewBox="0 0 {_SVG_SIZE} {_SVG_SIZE}">',
        f'<rect width="{_SVG_SIZE}" height="{_SVG_SIZE}" fill="white"/>',
    ]
    for v, ax, ay, bx, by in rects:
        px = _SVG_PAD + (ax - x0) * sx
        py = _SVG_PAD + (ay - y0) * sy
        w = (bx - ax) * sx
        h = (by - ay) * sy
        hue = (v * 47) % 360
        parts.append(
            f'<rect x="{px:.1f}" y="{py:.1f}" width="{w:.1f}" height="{h:.1f}" '
            f'fill="hsl({hue},70%,60%)" fill-opacity="0.35" '
            f'stroke="hsl({hue},70%,35%)"/>'
        )
        parts.append(
            f'<text x="{px + 3:.1f}" y="{py + 13:.1f}" font-size="12" '
            f'font-family="sans-serif">{v}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
