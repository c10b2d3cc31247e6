"""Plain-text point files and figure rendering.

File format::

    # optional comments
    dim 2
    -1 0
    0 1/2

One point per line, coordinates as integers or reduced fractions separated
by single spaces. Serialisation writes points in lexicographic order with
no trailing whitespace, so files round-trip byte for byte.
"""
from __future__ import annotations

from fractions import Fraction
from pathlib import Path
from xml.sax.saxutils import escape

from .geometry import Configuration, DimensionMismatchError

__all__ = [
    "ConfigParseError",
    "format_fraction",
    "dumps",
    "loads",
    "load",
    "dump",
    "render_svg",
    "render_layers",
]


class ConfigParseError(ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def format_fraction(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def _parse_coord(token: str, lineno: int) -> Fraction:
    num, slash, den = token.partition("/")
    try:
        if slash:
            n, q = int(num), int(den)
            if q == 0:
                raise ConfigParseError(lineno, f"zero denominator in {token!r}")
            return Fraction(n, q)
        return Fraction(int(num))
    except ValueError as exc:
        if isinstance(exc, ConfigParseError):
            raise
        raise ConfigParseError(lineno, f"bad coordinate {token!r}") from None


def loads(text: str) -> Configuration:
    dim = None
    points = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if dim is None:
            head = line.split()
            if len(head) != 2 or head[0] != "dim":
                raise ConfigParseError(lineno, "expected header 'dim <d>'")
            try:
                dim = int(head[1])
            except ValueError:
                raise ConfigParseError(lineno, f"bad dimension {head[1]!r}") from None
            if dim < 1:
                raise ConfigParseError(lineno, "dimension must be positive")
            continue
        fields = line.split(" ")
        if len(fields) != dim:
            raise ConfigParseError(lineno, f"expected {dim} coordinates, got {len(fields)}")
        p = tuple(_parse_coord(tok, lineno) for tok in fields)
        if p in seen:
            raise ConfigParseError(lineno, f"duplicate point {line}")
        seen.add(p)
        points.append(p)
    if dim is None:
        raise ConfigParseError(1, "missing 'dim <d>' header")
    return Configuration(points, dimension=dim)


def dumps(c: Configuration) -> str:
    lines = [f"dim {c.dimension}"]
    lines += [" ".join(format_fraction(x) for x in p) for p in c]
    return "\n".join(lines) + "\n"


def load(path) -> Configuration:
    return loads(Path(path).read_text(encoding="utf-8"))


def dump(c: Configuration, path) -> None:
    Path(path).write_text(dumps(c), encoding="utf-8", newline="\n")


def _num(x: Fraction) -> str:
    # Short exact-enough decimal for SVG attributes; stable across runs.
    if x.denominator == 1:
        return str(x.numerator)
    return f"{float(x):.6f}".rstrip("0").rstrip(".")


def render_svg(c: Configuration, unit_px: int = 40) -> str:
    """SVG scatter plot of a planar configuration over integer gridlines.

    Positive y points up. The view covers the bounding box of the points,
    widened to integers, plus one unit of margin.
    """
    if c.dimension != 2:
        raise DimensionMismatchError(f"render_svg needs a planar configuration, got d={c.dimension}")
    if unit_px < 1:
        raise ValueError("unit_px must be positive")
    pts = c.sorted_points()
    if pts:
        xlo = min(p[0] for p in pts).__floor__() - 1
        xhi = max(p[0] for p in pts).__ceil__() + 1
        ylo = min(p[1] for p in pts).__floor__() - 1
        yhi = max(p[1] for p in pts).__ceil__() + 1
    else:
        xlo, xhi, ylo, yhi = -1, 1, -1, 1
    width = (xhi - xlo) * unit_px
    height = (yhi - ylo) * unit_px

    def sx(x) -> Fraction:
        return (Fraction(x) - xlo) * unit_px

    def sy(y) -> Fraction:
        return (yhi - Fraction(y)) * unit_px

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" viewBox="0 0 {width} {height}">',
        f"<title>{escape(f'{len(pts)} points')}</title>",
        '<g class="grid" stroke="#bbbbbb" stroke-width="1">',
    ]
    for x in range(xlo, xhi + 1):
        out.append(f'<line x1="{_num(sx(x))}" y1="0" x2="{_num(sx(x))}" y2="{height}"/>')
    for y in range(ylo, yhi + 1):
        out.append(f'<line x1="0" y1="{_num(sy(y))}" x2="{width}" y2="{_num(sy(y))}"/>')
    out.append("</g>")
    out.append('<g class="points" fill="#000000">')
    r = _num(Fraction(unit_px, 8))
    for p in pts:
        out.append(f'<circle class="marker" cx="{_num(sx(p[0]))}" cy="{_num(sy(p[1]))}" r="{r}"/>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_layers(c: Configuration) -> str:
    """Text listing of a 3-D configuration, one block per value of the last coordinate."""
    if c.dimension != 3:
        raise DimensionMismatchError(f"render_layers needs d=3, got d={c.dimension}")
    layers: dict[Fraction, list] = {}
    for p in c:
        layers.setdefault(p[2], []).append(p)
    out = []
    for z in sorted(layers, reverse=True):
        pts = layers[z]
        out.append(f"z = {format_fraction(z)}  ({len(pts)} points)")
        for p in pts:
            out.append(f"  ({format_fraction(p[0])}, {format_fraction(p[1])})")
    return "\n".join(out) + ("\n" if out else "")
