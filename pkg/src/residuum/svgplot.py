"""Deterministic SVG rendering of 2-D scaled polyhedra and staircases.

Output is plain string assembly with fixed number formatting, so the
same input always produces byte-identical files.
"""

from __future__ import annotations

from .currents import scaled_points
from .newton import newton_polyhedron

_SIZE = 560
_MARGIN = 56


def _fmt(x):
    return f"{x:.1f}"


class _Canvas:
    def __init__(self, data_max):
        self.data_max = max(data_max, 1)
        self.scale = (_SIZE - 2 * _MARGIN) / self.data_max

    def x(self, v):
        return _MARGIN + self.scale * v

    def y(self, v):
        return _SIZE - _MARGIN - self.scale * v

    def point(self, p):
        return self.x(p[0]), self.y(p[1])


def _header(title):
    return [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_SIZE}" height="{_SIZE}" '
        f'viewBox="0 0 {_SIZE} {_SIZE}">',
        f'<rect x="0" y="0" width="{_SIZE}" height="{_SIZE}" fill="white"/>',
        f'<text x="{_MARGIN}" y="28" font-family="monospace" font-size="15">{title}</text>',
    ]


def _axes(cv):
    step = 1 if cv.data_max <= 24 else max(1, cv.data_max // 12)
    parts = [
        f'<line x1="{_fmt(cv.x(0))}" y1="{_fmt(cv.y(0))}" x2="{_fmt(cv.x(cv.data_max))}" '
        f'y2="{_fmt(cv.y(0))}" stroke="black" stroke-width="1"/>',
        f'<line x1="{_fmt(cv.x(0))}" y1="{_fmt(cv.y(0))}" x2="{_fmt(cv.x(0))}" '
        f'y2="{_fmt(cv.y(cv.data_max))}" stroke="black" stroke-width="1"/>',
    ]
    for t in range(0, cv.data_max + 1, step):
        parts.append(
            f'<line x1="{_fmt(cv.x(t))}" y1="{_fmt(cv.y(0) - 3)}" x2="{_fmt(cv.x(t))}" '
            f'y2="{_fmt(cv.y(0) + 3)}" stroke="black" stroke-width="1"/>'
        )
        parts.append(
            f'<line x1="{_fmt(cv.x(0) - 3)}" y1="{_fmt(cv.y(t))}" x2="{_fmt(cv.x(0) + 3)}" '
            f'y2="{_fmt(cv.y(t))}" stroke="black" stroke-width="1"/>'
        )
    return parts


def polytope_svg(points, dim, title=""):
    """SVG of conv(points) + R^2_+: shaded region, boundary, marked
    points, and each compact facet labeled with its primitive normal."""
    if dim != 2:
        raise ValueError("rendering is implemented for two variables")
    poly = newton_polyhedron(points, dim)
    data_max = max([a for p in points for a in p] + [1]) + 1
    cv = _Canvas(data_max)
    parts = _header(title)
    parts.extend(_axes(cv))

    # hull chain: facet endpoints ordered by x
    chain = []
    for f in poly.facets:
        pts = sorted({poly.points[i] for i in f.vertices})
        for p in (min(pts), max(pts)):
            if p not in chain:
                chain.append(p)
    chain.sort()
    if chain:
        region = [(chain[0][0], data_max)] + chain + [(data_max, chain[-1][1]), (data_max, data_max)]
        coords = " ".join(f"{_fmt(cv.x(px))},{_fmt(cv.y(py))}" for px, py in region)
        parts.append(f'<polygon points="{coords}" fill="#d9d9d9" stroke="none"/>')
        boundary = [(chain[0][0], data_max)] + chain + [(data_max, chain[-1][1])]
        coords = " ".join(f"{_fmt(cv.x(px))},{_fmt(cv.y(py))}" for px, py in boundary)
        parts.append(
            f'<polyline points="{coords}" fill="none" stroke="black" stroke-width="2"/>'
        )

    for f in poly.facets:
        pts = sorted({poly.points[i] for i in f.on_facet})
        v, w = min(pts), max(pts)
        mx, my = cv.x((v[0] + w[0]) / 2), cv.y((v[1] + w[1]) / 2)
        label = "(" + ",".join(str(a) for a in f.normal) + ")"
        parts.append(
            f'<text x="{_fmt(mx + 10)}" y="{_fmt(my + 16)}" font-family="monospace" '
            f'font-size="14">{label}</text>'
        )

    for p in sorted(set(points)):
        px, py = cv.point(p)
        parts.append(
            f'<circle cx="{_fmt(px)}" cy="{_fmt(py)}" r="4" fill="black"/>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def staircase_svg(ideal, title=""):
    """SVG of a 2-variable monomial ideal's exponent staircase."""
    if ideal.dim != 2:
        raise ValueError("rendering is implemented for two variables")
    gens = sorted(ideal.gens)
    data_max = max([a for g in gens for a in g] + [1]) + 1
    cv = _Canvas(data_max)
    parts = _header(title)
    parts.extend(_axes(cv))

    path = [(gens[0][0], data_max)]
    for i, g in enumerate(gens):
        path.append(g)
        if i + 1 < len(gens):
            path.append((gens[i + 1][0], g[1]))
    path.append((data_max, gens[-1][1]))
    region = path + [(data_max, data_max)]
    coords = " ".join(f"{_fmt(cv.x(px))},{_fmt(cv.y(py))}" for px, py in region)
    parts.append(f'<polygon points="{coords}" fill="#d9d9d9" stroke="none"/>')
    coords = " ".join(f"{_fmt(cv.x(px))},{_fmt(cv.y(py))}" for px, py in path)
    parts.append(
        f'<polyline points="{coords}" fill="none" stroke="black" stroke-width="2"/>'
    )
    for g in gens:
        px, py = cv.point(g)
        parts.append(f'<circle cx="{_fmt(px)}" cy="{_fmt(py)}" r="4" fill="black"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def render_svg(problem, weight_name, out_path):
    """Write the scaled-polyhedron SVG for a named weight of a problem."""
    seq = problem.seq
    if seq.dim != 2:
        raise ValueError("rendering is implemented for two variables")
    if weight_name is None:
        weight = (1,) * seq.m
        label = "1"
    else:
        weight = problem.get_weight(weight_name)
        label = weight_name
    pts = scaled_points(seq, weight)
    title = f"{problem.name}: scaled polyhedron, weight {label} = {list(weight)}"
    text = polytope_svg(pts, 2, title=title)
    with open(out_path, "w") as fh:
        fh.write(text)
    return out_path
