"""Layout and SVG output.

Each region is laid out as a single horizontal row.  Conditionals become
ellipses sized so the content box is inscribed (corners on the ellipse at
scale sqrt 2), consequents become rectangles.  A line of identity gets a
small hub in its home region and an orthogonal route to every argument
place it binds.

Areas are shaded by polarity: the page has depth 0, a conditional's
interior one more than the region holding it, and a consequent one more
than its conditional's interior.  Odd depth is shaded.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from xml.sax.saxutils import escape, quoteattr

from .diagram import Conditional, ConstRef, Diagram, EqLink, LineRef, PredApp, Region, validate
from .errors import ValidationError

__all__ = ["Shape", "Bounds", "RenderTree", "layout", "to_svg", "render_svg"]

PAD = 10
GAP = 14
MARGIN = 20
CHAR_W = 7
LABEL_H = 18
ANCHOR_DROP = 6
HUB = 10
SQRT2 = math.sqrt(2)


class Shape(Enum):
    PAGE = "page"
    ELLIPSE = "ellipse"
    RECTANGLE = "rectangle"


@dataclass(frozen=True)
class Bounds:
    x: float
    y: float
    w: float
    h: float

    @property
    def right(self):
        return self.x + self.w

    @property
    def bottom(self):
        return self.y + self.h

    def contains(self, other: "Bounds", pad: float = 0.0) -> bool:
        return (
            other.x - self.x >= pad
            and other.y - self.y >= pad
            and self.right - other.right >= pad
            and self.bottom - other.bottom >= pad
        )


@dataclass(frozen=True)
class RenderTree:
    shape: Shape
    role: str  # "page", "conditional" or "consequent"
    bounds: Bounds
    shaded: bool
    children: tuple = ()
    labels: tuple = ()  # (text, (x, y)) with (x, y) the text baseline start
    anchors: tuple = ()  # (line name, (x, y)) argument places bound to a line
    hubs: tuple = ()  # (line name, (x, y)) for lines declared in this region
    line_routes: tuple = ()  # (line name, ((x, y), ...))

    def walk(self):
        yield self
        for c in self.children:
            yield from c.walk()


# -- measuring and placing ---------------------------------------------------

class _Node:
    def __init__(self, shape, role, shaded):
        self.shape, self.role, self.shaded = shape, role, shaded
        self.x = self.y = self.w = self.h = 0.0
        self.children, self.labels, self.anchors, self.hubs = [], [], [], []


class _Hub:
    w = h = HUB

    def __init__(self, name):
        self.name = name

    def emit(self, node, x, y):
        node.hubs.append((self.name, (x + HUB / 2, y + HUB / 2)))


class _Label:
    def __init__(self, text, args):
        self.text = text
        self.args = args
        k = len(args)
        self.w = max(CHAR_W * len(text) + 8, 14 * k + 8)
        self.h = LABEL_H + ANCHOR_DROP

    def emit(self, node, x, y):
        node.labels.append((self.text, (x + 4, y + 13)))
        k = len(self.args)
        for i, arg in enumerate(self.args):
            if isinstance(arg, LineRef):
                node.anchors.append((arg.name, (x + (i + 1) * self.w / (k + 1), y + self.h)))


def _pred_label(el: PredApp):
    if el.args and any(isinstance(a, ConstRef) for a in el.args):
        shown = ",".join(a.name if isinstance(a, ConstRef) else "_" for a in el.args)
        return _Label(f"{el.pred}({shown})", el.args)
    return _Label(el.pred, el.args)


def _eq_label(el: EqLink):
    def side(a):
        return a.name if isinstance(a, ConstRef) else "_"

    if isinstance(el.left, LineRef) and isinstance(el.right, LineRef):
        text = "="
    else:
        text = f"{side(el.left)} = {side(el.right)}"
    return _Label(text, (el.left, el.right))


class _Row:
    def __init__(self, items):
        self.items = items
        self.w = sum(i.w for i in items) + GAP * max(len(items) - 1, 0)
        self.h = max((i.h for i in items), default=0)

    def emit(self, node, x, y):
        for item in self.items:
            item.emit(node, x, y + (self.h - item.h) / 2)
            x += item.w + GAP


def _items(region: Region, depth: int, peirce: bool):
    out = [_Hub(name) for name in region.lines]
    for el in region.elements:
        if isinstance(el, PredApp):
            out.append(_pred_label(el))
        elif isinstance(el, EqLink):
            out.append(_eq_label(el))
        else:
            out.append(_Cond(el, depth, peirce))
    return out


class _Shape:
    """An ellipse or rectangle around a row of items."""

    def __init__(self, shape, role, depth, row, min_w, min_h):
        self.shape, self.role, self.depth, self.row = shape, role, depth, row
        cw = max(row.w, min_w) + 2 * PAD
        ch = max(row.h, min_h) + 2 * PAD
        if shape is Shape.ELLIPSE:
            cw, ch = cw * SQRT2, ch * SQRT2
        self.w, self.h = math.ceil(cw), math.ceil(ch)

    def make_node(self, x, y):
        node = _Node(self.shape, self.role, self.depth % 2 == 1)
        node.x, node.y, node.w, node.h = x, y, self.w, self.h
        return node


class _Cond(_Shape):
    def __init__(self, c: Conditional, depth: int, peirce: bool):
        inner = depth + 1
        self.rects = [_Rect(r, inner + 1, peirce) for r in c.consequents]
        row = _Row(_items(c.antecedent, inner, peirce) + self.rects)
        super().__init__(Shape.ELLIPSE, "conditional", inner, row, 16, 10)

    def emit(self, parent, x, y):
        node = self.make_node(x, y)
        parent.children.append(node)
        self.row.emit(node, x + (self.w - self.row.w) / 2, y + (self.h - self.row.h) / 2)


class _Rect(_Shape):
    def __init__(self, region: Region, depth: int, peirce: bool):
        row = _Row(_items(region, depth, peirce))
        shape = Shape.ELLIPSE if peirce else Shape.RECTANGLE
        super().__init__(shape, "consequent", depth, row, 14, 8)

    def emit(self, parent, x, y):
        node = self.make_node(x, y)
        parent.children.append(node)
        self.row.emit(node, x + (self.w - self.row.w) / 2, y + (self.h - self.row.h) / 2)


def _route(hub, anchor):
    (hx, hy), (ax, ay) = hub, anchor
    below = ay + ANCHOR_DROP
    return ((hx, hy), (hx, below), (ax, below), (ax, ay))


def _freeze(node, routes_by_home):
    return RenderTree(
        shape=node.shape,
        role=node.role,
        bounds=Bounds(node.x, node.y, node.w, node.h),
        shaded=node.shaded,
        children=tuple(_freeze(c, routes_by_home) for c in node.children),
        labels=tuple(node.labels),
        anchors=tuple(node.anchors),
        hubs=tuple(node.hubs),
        line_routes=tuple(routes_by_home.get(id(node), ())),
    )


def layout(d: Diagram, style: str = "equilibrium") -> RenderTree:
    """Geometry for ``d``; ``style="peirce"`` draws consequents as ellipses."""
    problems = validate(d)
    if problems:
        raise ValidationError(problems)
    if style not in ("equilibrium", "peirce"):
        raise ValueError(f"unknown style {style!r}")
    row = _Row(_items(d.page, 0, style == "peirce"))
    page = _Node(Shape.PAGE, "page", False)
    page.w = max(row.w + 2 * MARGIN, 120)
    page.h = max(row.h + 2 * MARGIN + ANCHOR_DROP, 60)
    row.emit(page, (page.w - row.w) / 2, (page.h - ANCHOR_DROP - row.h) / 2)

    homes, anchors = {}, {}
    stack = [page]
    while stack:
        n = stack.pop()
        for name, pt in n.hubs:
            homes[name] = (n, pt)
        for name, pt in n.anchors:
            anchors.setdefault(name, []).append(pt)
        stack.extend(n.children)
    routes_by_home = {}
    for name in sorted(homes):
        home, hub = homes[name]
        for pt in anchors.get(name, []):
            routes_by_home.setdefault(id(home), []).append((name, _route(hub, pt)))
    return _freeze(page, routes_by_home)


# -- SVG ---------------------------------------------------------------------

SHADE = "#d9d9d9"
WHITE = "#ffffff"


def _n(v):
    return f"{v:.1f}"


def _shape_svg(t: RenderTree, out):
    b = t.bounds
    fill = SHADE if t.shaded else WHITE
    if t.shape is Shape.ELLIPSE:
        out.append(
            f'<ellipse class="{t.role}" cx="{_n(b.x + b.w / 2)}" cy="{_n(b.y + b.h / 2)}" '
            f'rx="{_n(b.w / 2)}" ry="{_n(b.h / 2)}" fill="{fill}" stroke="#000000" stroke-width="1.5"/>'
        )
    elif t.shape is Shape.RECTANGLE:
        out.append(
            f'<rect class="{t.role}" x="{_n(b.x)}" y="{_n(b.y)}" width="{_n(b.w)}" height="{_n(b.h)}" '
            f'fill="{fill}" stroke="#000000" stroke-width="1.5"/>'
        )
    for c in t.children:
        _shape_svg(c, out)


def to_svg(t: RenderTree) -> str:
    b = t.bounds
    out = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{_n(b.w)}px" '
        f'height="{_n(b.h)}px" viewBox="{_n(b.x)} {_n(b.y)} {_n(b.w)} {_n(b.h)}">',
        f'<rect class="page" x="{_n(b.x)}" y="{_n(b.y)}" width="{_n(b.w)}" height="{_n(b.h)}" '
        f'fill="{WHITE}" stroke="none"/>',
    ]
    for c in t.children:
        _shape_svg(c, out)
    nodes = list(t.walk())
    for n in nodes:
        for name, pts in n.line_routes:
            points = " ".join(f"{_n(x)},{_n(y)}" for x, y in pts)
            out.append(
                f'<polyline class="line" data-line={quoteattr(name)} points="{points}" '
                f'fill="none" stroke="#000000" stroke-width="2"/>'
            )
    for n in nodes:
        for name, (x, y) in n.hubs:
            out.append(f'<circle class="hub" data-line={quoteattr(name)} cx="{_n(x)}" cy="{_n(y)}" r="3" fill="#000000"/>')
    for n in nodes:
        for text, (x, y) in n.labels:
            out.append(
                f'<text x="{_n(x)}" y="{_n(y)}" font-family="sans-serif" font-size="12" '
                f'fill="#000000">{escape(text)}</text>'
            )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_svg(d: Diagram, style: str = "equilibrium") -> str:
    return to_svg(layout(d, style))
